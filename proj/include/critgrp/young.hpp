#pragma once

// Integer partitions, Young's lattice up/down operators, and the closed-form
// critical group of the reflection representation of S_n.

#include "critgrp/intlinalg.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace critgrp {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> p);

    int size() const;
    std::size_t length() const { return parts.size(); }
    /// Number of parts equal to k.
    int multiplicity(int k) const;

    /// "3,1" style; the empty partition prints as "".
    std::string to_string() const;
    /// Inverse of to_string. Parts may be in any order.
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
struct RankBasis {
    int n = 0;
    std::vector<Partition> partitions;

    std::size_t size() const { return partitions.size(); }
    /// Throws std::out_of_range if lambda is not a partition of n.
    std::size_t index_of(const Partition& lambda) const;
};

RankBasis partitions_of(int n);

/// p(n), with p(0) = 1 and p(n) = 0 for n < 0.
long long partition_count(long n);

/// Partitions obtained by deleting one removable corner, in row order.
std::vector<Partition> remove_corner(const Partition& lambda);
/// Partitions obtained by adding one addable cell, in row order.
std::vector<Partition> add_cell(const Partition& lambda);

/// p(i+1) x p(i); column y has a 1 at each z covering y.
IntegerMatrix up_matrix(int i);
/// p(i-1) x p(i); column y has a 1 at each x covered by y. Requires i >= 1.
IntegerMatrix down_matrix(int i);
/// up_matrix(n-1) * down_matrix(n).
IntegerMatrix ud_matrix(int n);

/// Number of strict descents lambda_i > lambda_{i+1} for 1 <= i <= l(lambda)-1,
/// i.e. removable corners minus one.
int corner_statistic(const Partition& lambda);

/// Multiplicities of chi_mu in chi_(n-1,1) * chi_lambda over partitions_of(|lambda|):
/// corner_statistic(lambda) at lambda, 1 at every other partition reachable by
/// removing a corner and adding a cell. Requires |lambda| >= 2.
IntegerVector kronecker_row(const Partition& lambda);
/// Rows kronecker_row(lambda) for lambda in partitions_of(n).
IntegerMatrix kronecker_matrix(int n);

/// alpha_i(t) = prod of (t + k) over 0 <= k <= n with p(n-k) - p(n-k-1) >= i.
BigInt alpha_eval(int n, int i, const BigInt& t);
/// (alpha_1(t), ..., alpha_{p(n)}(t)).
std::vector<BigInt> alpha_diagonal(int n, const BigInt& t);

/// q_i = prod of j over 1 <= j <= n with p(j) - p(j-1) >= i.
BigInt reflection_factor(int n, int i);

/// Closed form for K of the S_n reflection representation:
/// Z/q_2 + ... + Z/q_{p(n)-p(n-1)}, returned in ascending divisibility order.
/// Requires n >= 2.
AbelianGroup reflection_critical_group_formula(int n);

/// Compares coker(UD + tI) with the cokernel of diag(alpha_i(t)); both sides are
/// brought to invariant-factor form independently.
bool ud_specialization_matches(int n, const BigInt& t);

}  // namespace critgrp
