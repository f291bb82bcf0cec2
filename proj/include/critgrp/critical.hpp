#pragma once

// McKay-Cartan matrices and the critical group K(gamma) of a faithful
// character, together with the checks tying K(gamma) to character values.

#include "critgrp/chartab.hpp"
#include "critgrp/intlinalg.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace critgrp {

struct McKayPair {
    IntegerMatrix extended;  // n*I - M, (l+1) x (l+1)
    IntegerMatrix reduced;   // extended without the trivial row and column
    BigInt degree;
    std::size_t trivial_index = 0;
};

/// Claim that (Z/d)^multiplicity embeds in K(gamma).
struct SubgroupCertificate {
    BigInt d;
    std::size_t multiplicity = 0;

    friend bool operator==(const SubgroupCertificate&, const SubgroupCertificate&) = default;
};

struct SylowCheck {
    bool applicable = false;  // gamma is rational-valued
    bool holds = false;       // every prime dividing |K| is at most 2n
};

struct CriticalGroupReport {
    AbelianGroup group;
    BigInt order_formula_value;
    std::vector<SubgroupCertificate> certificates;
    bool real_valued = false;
    bool eigen_verified = false;
    bool sylow_bound_applicable = false;
    bool sylow_bound_holds = false;
};

McKayPair mckay_cartan(const CharacterTable& table, const ClassFunction& gamma);

/// K(gamma) = torsion of coker(C^T). Also computes coker(extended^T) and throws
/// InternalInconsistency unless it is Z plus the same torsion.
/// Throws NotFaithful for an unfaithful gamma.
AbelianGroup critical_group(const CharacterTable& table, const ClassFunction& gamma);

/// (1/|G|) prod_{c != e} (n - gamma(c)), evaluated exactly. Zero exactly when
/// gamma is unfaithful.
BigInt order_formula(const CharacterTable& table, const ClassFunction& gamma);

/// For each integer value v taken on m >= 2 classes with n - v >= 2, the
/// certificate (n - v, m - 1). Sorted by d. Requires a real-valued faithful gamma.
std::vector<SubgroupCertificate> subgroup_certificates(const CharacterTable& table,
                                                       const ClassFunction& gamma);

/// n - gamma(c) for every class c; the eigenvalue of the extended matrix on
/// the table column of c.
std::vector<Cyclotomic> mckay_eigenvalues(const CharacterTable& table, const ClassFunction& gamma);

/// Checks extended * column(c) = (n - gamma(c)) * column(c) for every class,
/// that the degree column is annihilated by extended and its transpose, and
/// that extended has exactly one zero Smith invariant.
bool eigen_check(const CharacterTable& table, const ClassFunction& gamma);

SylowCheck sylow_bound_check(const CharacterTable& table, const ClassFunction& gamma);

/// Runs every computation above and cross-checks them; throws
/// InternalInconsistency on any disagreement.
CriticalGroupReport full_report(const CharacterTable& table, const ClassFunction& gamma);

}  // namespace critgrp
