#include "critgrp/critical.hpp"

#include "critgrp/errors.hpp"

#include <map>

namespace critgrp {

namespace {

void require_faithful(const CharacterTable& table, const ClassFunction& gamma) {
    if (auto witness = kernel_witness(table, gamma)) {
        throw NotFaithful("gamma takes its degree " + gamma[0].to_string() + " on class " +
                          std::to_string(*witness) + " (" + table.classes[*witness].label + ")");
    }
}

}  // namespace

McKayPair mckay_cartan(const CharacterTable& table, const ClassFunction& gamma) {
    const IntegerMatrix M = product_decomposition(table, gamma);
    McKayPair pair;
    pair.degree = gamma.degree();
    pair.trivial_index = table.trivial_char;
    pair.extended = subtract(scalar_identity(M.rows(), pair.degree), M);
    const Eigen::Index l = M.rows() - 1;
    pair.reduced = pair.extended.bottomRightCorner(l, l);
    return pair;
}

AbelianGroup critical_group(const CharacterTable& table, const ClassFunction& gamma) {
    require_faithful(table, gamma);
    const McKayPair pair = mckay_cartan(table, gamma);
    const IntegerMatrix reduced_t = pair.reduced.transpose();
    const IntegerMatrix extended_t = pair.extended.transpose();
    const Cokernel small = cokernel(reduced_t);
    const Cokernel big = cokernel(extended_t);
    if (small.free_rank != 0 || big.free_rank != 1 || small.torsion != big.torsion) {
        throw InternalInconsistency("coker(C^T) = " + small.torsion.to_string() + " with free rank " +
                                    std::to_string(small.free_rank) + " but coker(extended^T) = " +
                                    big.torsion.to_string() + " with free rank " +
                                    std::to_string(big.free_rank));
    }
    return small.torsion;
}

BigInt order_formula(const CharacterTable& table, const ClassFunction& gamma) {
    product_decomposition(table, gamma);  // throws NotACharacter
    const Cyclotomic n = gamma[0];
    Cyclotomic prod(1);
    for (std::size_t c = 1; c < gamma.size(); ++c) prod *= n - gamma[c];
    prod /= Rational(table.order);
    if (!prod.is_integer() || prod.to_integer() < 0)
        throw InternalInconsistency("order formula evaluated to " + prod.to_string());
    return prod.to_integer();
}

std::vector<SubgroupCertificate> subgroup_certificates(const CharacterTable& table,
                                                       const ClassFunction& gamma) {
    if (!is_real_valued(gamma)) throw NotRealValued("subgroup certificates need a real-valued gamma");
    require_faithful(table, gamma);
    const BigInt n = gamma.degree();
    std::map<BigInt, std::size_t> counts;
    for (std::size_t c = 0; c < gamma.size(); ++c)
        if (gamma[c].is_integer()) ++counts[gamma[c].to_integer()];

    std::map<BigInt, std::size_t> by_d;
    for (const auto& [v, m] : counts) {
        const BigInt d = n - v;
        if (m >= 2 && d >= 2) by_d[d] = m - 1;
    }
    std::vector<SubgroupCertificate> out;
    for (const auto& [d, k] : by_d) out.push_back({d, k});
    return out;
}

std::vector<Cyclotomic> mckay_eigenvalues(const CharacterTable& table, const ClassFunction& gamma) {
    if (gamma.size() != table.class_count())
        throw ShapeMismatch("class function length differs from class count");
    std::vector<Cyclotomic> out;
    for (std::size_t c = 0; c < gamma.size(); ++c) out.push_back(gamma[0] - gamma[c]);
    return out;
}

bool eigen_check(const CharacterTable& table, const ClassFunction& gamma) {
    const McKayPair pair = mckay_cartan(table, gamma);
    const CyclotomicMatrix E = pair.extended.cast<Cyclotomic>();
    const std::vector<Cyclotomic> eigenvalues = mckay_eigenvalues(table, gamma);
    for (std::size_t c = 0; c < table.class_count(); ++c) {
        const CyclotomicVector delta = table.column(c);
        const CyclotomicVector lhs = E * delta;
        for (Eigen::Index i = 0; i < delta.size(); ++i)
            if (lhs(i) != eigenvalues[c] * delta(i)) return false;
    }
    const CyclotomicVector degrees = table.degrees();
    const CyclotomicVector right = E * degrees;
    const CyclotomicVector left = E.transpose() * degrees;
    for (Eigen::Index i = 0; i < degrees.size(); ++i)
        if (!right(i).is_zero() || !left(i).is_zero()) return false;

    std::size_t zeros = 0;
    for (const auto& s : smith_normal_form(pair.extended).diagonal)
        if (s == 0) ++zeros;
    return zeros == 1;
}

SylowCheck sylow_bound_check(const CharacterTable& table, const ClassFunction& gamma) {
    require_faithful(table, gamma);
    SylowCheck out;
    out.applicable = is_rational_valued(gamma);
    BigInt rest = critical_group(table, gamma).order();
    const BigInt bound = 2 * gamma.degree();
    for (BigInt p = 2; p <= bound && rest > 1; ++p)
        while (rest % p == 0) rest /= p;
    out.holds = rest == 1;
    return out;
}

CriticalGroupReport full_report(const CharacterTable& table, const ClassFunction& gamma) {
    CriticalGroupReport report;
    report.group = critical_group(table, gamma);
    report.order_formula_value = order_formula(table, gamma);
    if (report.group.order() != report.order_formula_value)
        throw InternalInconsistency("|K| = " + report.group.order().str() +
                                    " but the order formula gives " +
                                    report.order_formula_value.str());
    report.real_valued = is_real_valued(gamma);
    if (report.real_valued) {
        report.certificates = subgroup_certificates(table, gamma);
        for (const auto& cert : report.certificates)
            if (!subgroup_embeds(cert.d, cert.multiplicity, report.group))
                throw InternalInconsistency("(Z/" + cert.d.str() + ")^" +
                                            std::to_string(cert.multiplicity) + " does not embed in " +
                                            report.group.to_string());
    }
    report.eigen_verified = eigen_check(table, gamma);
    if (!report.eigen_verified)
        throw InternalInconsistency("character columns are not eigenvectors of the McKay-Cartan matrix");
    const SylowCheck sylow = sylow_bound_check(table, gamma);
    report.sylow_bound_applicable = sylow.applicable;
    report.sylow_bound_holds = sylow.holds;
    if (sylow.applicable && !sylow.holds)
        throw InternalInconsistency("a prime above 2n divides |K| for a rational-valued gamma");
    return report;
}

}  // namespace critgrp
