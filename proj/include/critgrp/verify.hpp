#pragma once

// Verification sweeps over the built-in tables. Each check yields one line.

#include <string>
#include <vector>

namespace critgrp {

struct CheckResult {
    std::string check;
    std::string instance;
    bool pass = false;
    std::string detail;
};

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"all",   "order", "regular", "reflection",
                                                "eigen", "sylow", "young"};
    return names;
}

/// Runs one suite ("all" runs every suite) with S_n for n <= n_max and Z/m for
/// m <= m_max. Throws std::invalid_argument on an unknown suite or bad bounds.
std::vector<CheckResult> run_verification(const std::string& suite, int n_max, long m_max);

}  // namespace critgrp
