#pragma once

// Matrices displayed for the S4 reflection representation, in the paper's
// ordering: characters chi_0..chi_4 as printed there.

#include "critgrp/intlinalg.hpp"

#include <initializer_list>

namespace fixture {

inline critgrp::IntegerMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    critgrp::IntegerMatrix A(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row) A(i, j++) = v;
        ++i;
    }
    return A;
}

inline critgrp::IntegerMatrix s4_fusion() {
    return matrix({{0, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {0, 1, 0, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 0, 1, 0}});
}

inline critgrp::IntegerMatrix s4_extended() {
    return matrix({{3, -1, 0, 0, 0}, {-1, 2, -1, -1, 0}, {0, -1, 3, -1, 0}, {0, -1, -1, 2, -1}, {0, 0, 0, -1, 3}});
}

inline critgrp::IntegerMatrix s4_reduced() {
    return matrix({{2, -1, -1, 0}, {-1, 3, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 3}});
}

}  // namespace fixture
