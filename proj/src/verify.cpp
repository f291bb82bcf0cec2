#include "critgrp/verify.hpp"

#include "critgrp/chartab.hpp"
#include "critgrp/critical.hpp"
#include "critgrp/young.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace critgrp {

namespace {

struct Sink {
    std::vector<CheckResult>& out;

    // Runs body; an exception becomes a failing line carrying its message.
    void run(const std::string& check, const std::string& instance,
             const std::function<std::pair<bool, std::string>()>& body) {
        try {
            auto [ok, detail] = body();
            out.push_back({check, instance, ok, std::move(detail)});
        } catch (const std::exception& e) {
            out.push_back({check, instance, false, std::string("exception: ") + e.what()});
        }
    }
};

struct NamedCharacter {
    std::string name;
    ClassFunction gamma;
};

std::vector<NamedCharacter> irreducibles(const CharacterTable& t) {
    std::vector<NamedCharacter> out;
    for (std::size_t i = 0; i < t.class_count(); ++i)
        out.push_back({t.group_name + " chi_" + std::to_string(i), character(t, i)});
    return out;
}

std::vector<NamedCharacter> cyclic_corpus(const CharacterTable& t, long m) {
    auto out = irreducibles(t);
    if (m >= 2)
        out.push_back({t.group_name + " chi_1+chi_" + std::to_string(m - 1),
                       character_sum(t, {1, static_cast<std::size_t>(m - 1)})});
    return out;
}

AbelianGroup power_of_cyclic(const BigInt& d, long k) {
    if (d < 2 || k <= 0) return AbelianGroup();
    return AbelianGroup(std::vector<BigInt>(static_cast<std::size_t>(k), d));
}

void order_suite(Sink& s, const std::vector<std::pair<CharacterTable, std::vector<NamedCharacter>>>& corpus) {
    for (const auto& [table, chars] : corpus) {
        for (const auto& [name, gamma] : chars) {
            const bool faithful = is_faithful(table, gamma);
            s.run("blichfeldt", name, [&] {
                const BigInt v = order_formula(table, gamma);
                const bool ok = v >= 0 && ((v == 0) == !faithful);
                return std::make_pair(ok, "formula = " + v.str() + (faithful ? " (faithful)" : " (unfaithful)"));
            });
            if (!faithful) continue;
            s.run("order-formula", name, [&] {
                const AbelianGroup k = critical_group(table, gamma);
                const BigInt v = order_formula(table, gamma);
                return std::make_pair(k.order() == v, "|K| = " + k.order().str() + ", formula = " + v.str());
            });
            if (!is_real_valued(gamma)) continue;
            s.run("certificates", name, [&] {
                const AbelianGroup k = critical_group(table, gamma);
                std::string detail = "K = " + k.to_string() + ";";
                bool ok = true;
                for (const auto& c : subgroup_certificates(table, gamma)) {
                    const bool e = subgroup_embeds(c.d, c.multiplicity, k);
                    ok = ok && e;
                    detail += " (Z/" + c.d.str() + ")^" + std::to_string(c.multiplicity) + (e ? " embeds" : " MISSING");
                }
                return std::make_pair(ok, detail);
            });
        }
    }
}

void regular_suite(Sink& s, int n_max, long m_max) {
    std::vector<CharacterTable> tables;
    for (int n = 1; n <= n_max; ++n) tables.push_back(symmetric_group_table(n));
    for (long m = 1; m <= m_max; ++m) tables.push_back(cyclic_group_table(m));
    for (const auto& t : tables) {
        s.run("regular", t.group_name, [&] {
            const AbelianGroup k = critical_group(t, regular_character(t));
            const AbelianGroup expected = power_of_cyclic(t.order, static_cast<long>(t.class_count()) - 2);
            return std::make_pair(k == expected, "K = " + k.to_string());
        });
    }
    for (long m = 1; m <= m_max; ++m) {
        s.run("complete-graph", "Z/" + std::to_string(m), [&] {
            const CharacterTable t = cyclic_group_table(m);
            const McKayPair pair = mckay_cartan(t, regular_character(t));
            IntegerMatrix laplacian = IntegerMatrix::Constant(m, m, BigInt(-1));
            laplacian.diagonal().setConstant(BigInt(m - 1));
            const bool same = pair.extended == laplacian;
            const AbelianGroup k = critical_group(t, regular_character(t));
            const bool ok = same && k == power_of_cyclic(BigInt(m), m - 2);
            return std::make_pair(ok, std::string(same ? "extended = mI - J" : "extended != mI - J") +
                                          ", K = " + k.to_string());
        });
    }
}

void reflection_suite(Sink& s, int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        const std::string inst = "S" + std::to_string(n);
        const CharacterTable t = symmetric_group_table(n);
        const ClassFunction gamma = reflection_character(n);
        s.run("reflection-closed-form", inst, [&] {
            const AbelianGroup direct = critical_group(t, gamma);
            const AbelianGroup formula = reflection_critical_group_formula(n);
            return std::make_pair(direct == formula,
                                  "SNF: " + direct.to_string() + ", closed form: " + formula.to_string());
        });
        s.run("kronecker-identity", inst, [&] {
            const IntegerMatrix corners = kronecker_matrix(n);
            const IntegerMatrix ud = subtract(ud_matrix(n), scalar_identity(corners.rows(), BigInt(1)));
            const IntegerMatrix fusion = product_decomposition(t, gamma);
            const bool ok = corners == ud && ud == fusion;
            return std::make_pair(ok, ok ? "corner rule = UD - I = fusion matrix" : "matrices differ");
        });
        s.run("reflection-order", inst, [&] {
            const BigInt prod = reflection_critical_group_formula(n).order();
            const BigInt v = order_formula(t, gamma);
            return std::make_pair(prod == v, "prod q_i = " + prod.str() + ", formula = " + v.str());
        });
    }
}

void eigen_suite(Sink& s, const std::vector<std::pair<CharacterTable, std::vector<NamedCharacter>>>& corpus) {
    for (const auto& [table, chars] : corpus)
        for (const auto& [name, gamma] : chars) {
            if (!is_faithful(table, gamma)) continue;
            s.run("eigenvectors", name, [&] {
                const bool ok = eigen_check(table, gamma);
                return std::make_pair(ok, std::string(ok ? "columns are eigenvectors, kernel spanned by degrees"
                                                         : "eigenvector check failed"));
            });
        }
}

void sylow_suite(Sink& s, const std::vector<std::pair<CharacterTable, std::vector<NamedCharacter>>>& corpus) {
    for (const auto& [table, chars] : corpus) {
        for (const auto& [name, gamma] : chars) {
            if (!is_faithful(table, gamma)) continue;
            s.run("sylow-bound", name, [&] {
                const SylowCheck c = sylow_bound_check(table, gamma);
                if (c.applicable) return std::make_pair(c.holds, std::string("rational-valued, bound holds"));
                // No guarantee without rational values: report what happens.
                const BigInt order = critical_group(table, gamma).order();
                BigInt largest = 1;
                for (const auto& [p, e] : factorize(order)) largest = p;
                return std::make_pair(true, std::string("not rational-valued; largest prime of |K| = ") +
                                                largest.str() + (c.holds ? " (within 2n)" : " (exceeds 2n)"));
            });
        }
    }
}

void young_suite(Sink& s, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const std::string inst = "n=" + std::to_string(n);
        s.run("partition-count", inst, [&] {
            const auto count = partition_count(n);
            const auto listed = partitions_of(n).size();
            return std::make_pair(static_cast<std::size_t>(count) == listed, "p(n) = " + std::to_string(count));
        });
        s.run("up-down-adjoint", inst, [&] {
            const IntegerMatrix ut = up_matrix(n - 1).transpose();
            return std::make_pair(down_matrix(n) == ut, std::string("D_n = U_{n-1}^T"));
        });
        for (long t = -n; t <= 5; ++t) {
            s.run("ud-specialization", inst + " t=" + std::to_string(t), [&] {
                return std::make_pair(ud_specialization_matches(n, BigInt(t)),
                                      std::string("coker(UD + tI) vs diag(alpha_i(t))"));
            });
        }
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& suite, int n_max, long m_max) {
    const auto& names = verify_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    if (n_max < 1 || n_max > 12) throw std::invalid_argument("n-max must be in [1, 12]");
    if (m_max < 1 || m_max > 60) throw std::invalid_argument("m-max must be in [1, 60]");

    std::vector<CheckResult> out;
    Sink sink{out};
    const bool all = suite == "all";

    std::vector<std::pair<CharacterTable, std::vector<NamedCharacter>>> corpus;
    if (all || suite == "order" || suite == "eigen" || suite == "sylow") {
        for (int n = 1; n <= n_max; ++n) {
            CharacterTable t = symmetric_group_table(n);
            auto chars = irreducibles(t);
            corpus.emplace_back(std::move(t), std::move(chars));
        }
        for (long m = 1; m <= m_max; ++m) {
            CharacterTable t = cyclic_group_table(m);
            auto chars = cyclic_corpus(t, m);
            corpus.emplace_back(std::move(t), std::move(chars));
        }
    }

    if (all || suite == "order") order_suite(sink, corpus);
    if (all || suite == "regular") regular_suite(sink, n_max, m_max);
    if (all || suite == "reflection") reflection_suite(sink, n_max);
    if (all || suite == "eigen") eigen_suite(sink, corpus);
    if (all || suite == "sylow") sylow_suite(sink, corpus);
    if (all || suite == "young") young_suite(sink, n_max);
    return out;
}

}  // namespace critgrp
