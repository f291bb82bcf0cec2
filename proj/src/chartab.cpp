#include "critgrp/chartab.hpp"

#include "critgrp/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace critgrp {

namespace {

bool same_values(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

std::string chi(std::size_t i) { return "chi_" + std::to_string(i); }

// Beta-set form of Murnaghan-Nakayama: removing an r-rim hook moves one bead
// from position b to b - r; the sign counts beads strictly between.
class MurnaghanNakayama {
public:
    long long value(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos) {
        if (pos == mu.size()) return lambda.empty() ? 1 : 0;
        auto key = std::make_pair(lambda, std::vector<int>(mu.begin() + static_cast<long>(pos), mu.end()));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int r = mu[pos];
        const std::size_t len = lambda.size();
        std::vector<int> beta(len);
        for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);

        long long total = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const int target = beta[i] - r;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<int> smaller;
            for (std::size_t k = 0; k < len; ++k) {
                const int part = moved[k] - static_cast<int>(len - 1 - k);
                if (part > 0) smaller.push_back(part);
            }
            const long long sub = value(smaller, mu, pos + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo_;
};

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.group_name == b.group_name && a.order == b.order && a.exponent == b.exponent &&
           a.classes == b.classes && a.identity_class == b.identity_class &&
           a.trivial_char == b.trivial_char && a.family == b.family &&
           same_values(a.values, b.values);
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] != b[c]) return false;
    return true;
}

Cyclotomic inner_product(const CharacterTable& table, const CyclotomicVector& a,
                         const CyclotomicVector& b) {
    if (static_cast<std::size_t>(a.size()) != table.class_count() ||
        static_cast<std::size_t>(b.size()) != table.class_count())
        throw ShapeMismatch("inner_product: class function length differs from class count");
    Cyclotomic sum;
    for (std::size_t c = 0; c < table.class_count(); ++c) {
        const auto k = static_cast<Eigen::Index>(c);
        sum += Cyclotomic(table.classes[c].size) * a(k) * b(k).conj();
    }
    return sum / Rational(table.order);
}

std::vector<Violation> validate(const CharacterTable& table) {
    std::vector<Violation> out;
    const std::size_t k = table.class_count();
    if (k == 0) {
        out.push_back({"shape", "table has no classes"});
        return out;
    }
    if (static_cast<std::size_t>(table.values.rows()) != k ||
        static_cast<std::size_t>(table.values.cols()) != k) {
        out.push_back({"shape", "values must be " + std::to_string(k) + "x" + std::to_string(k)});
        return out;
    }
    if (table.order < 1) out.push_back({"group order", "order must be positive"});
    if (table.exponent < 1) out.push_back({"exponent", "exponent must be positive"});
    if (table.identity_class != 0)
        out.push_back({"normalization", "identity class is not column 0"});
    if (table.trivial_char != 0)
        out.push_back({"normalization", "trivial character is not row 0"});

    BigInt total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (table.classes[c].size < 1)
            out.push_back({"class sizes", "class " + std::to_string(c) + " has nonpositive size"});
        total += table.classes[c].size;
    }
    if (total != table.order)
        out.push_back({"class sizes", "sizes sum to " + total.str() + ", not the group order " +
                                          table.order.str()});
    if (table.classes[0].size != 1)
        out.push_back({"identity class", "class 0 must have size 1"});

    for (std::size_t c = 0; c < k; ++c) {
        if (table.values(0, static_cast<Eigen::Index>(c)) != Cyclotomic(1))
            out.push_back({"trivial character", "chi_0 is not 1 at class " + std::to_string(c)});
    }

    bool integral_degrees = true;
    BigInt square_sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Cyclotomic& d = table.values(static_cast<Eigen::Index>(i), 0);
        if (!d.is_integer() || d.to_integer() < 1) {
            integral_degrees = false;
            out.push_back({"degrees", chi(i) + " at the identity is not a positive integer"});
        } else {
            const BigInt deg = d.to_integer();
            square_sum += deg * deg;
        }
    }
    if (integral_degrees && square_sum != table.order)
        out.push_back({"degree sum", "sum of squared degrees is " + square_sum.str() +
                                         ", not the group order " + table.order.str()});

    for (std::size_t i = 0; i < k; ++i) {
        const CyclotomicVector ri = table.values.row(static_cast<Eigen::Index>(i)).transpose();
        for (std::size_t j = i; j < k; ++j) {
            const CyclotomicVector rj = table.values.row(static_cast<Eigen::Index>(j)).transpose();
            const Cyclotomic ip = inner_product(table, ri, rj);
            if (ip != Cyclotomic(i == j ? 1 : 0))
                out.push_back({"row orthogonality",
                               "<" + chi(i) + ", " + chi(j) + "> = " + ip.to_string()});
        }
    }
    return out;
}

CharacterTable normalize(CharacterTable table) {
    const auto k = static_cast<Eigen::Index>(table.class_count());
    if (table.values.rows() != k || table.values.cols() != k)
        throw std::invalid_argument("normalize: values shape does not match class count");

    Eigen::Index trivial = -1;
    for (Eigen::Index i = 0; i < k && trivial < 0; ++i) {
        bool ones = true;
        for (Eigen::Index c = 0; c < k; ++c)
            if (table.values(i, c) != Cyclotomic(1)) ones = false;
        if (ones) trivial = i;
    }
    if (trivial < 0) throw std::invalid_argument("table has no trivial character");

    Eigen::Index identity = -1;
    for (Eigen::Index c = 0; c < k && identity < 0; ++c) {
        if (table.classes[static_cast<std::size_t>(c)].size != 1) continue;
        bool degrees = true;
        for (Eigen::Index i = 0; i < k; ++i) {
            const Cyclotomic& v = table.values(i, c);
            if (!v.is_integer() || v.to_integer() < 1) degrees = false;
        }
        if (degrees) identity = c;
    }
    if (identity < 0) throw std::invalid_argument("table has no identity class");

    std::vector<Eigen::Index> row_order, col_order;
    row_order.push_back(trivial);
    col_order.push_back(identity);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (i != trivial) row_order.push_back(i);
        if (i != identity) col_order.push_back(i);
    }
    CyclotomicMatrix values(k, k);
    std::vector<ConjugacyClassInfo> classes;
    for (Eigen::Index c = 0; c < k; ++c)
        classes.push_back(table.classes[static_cast<std::size_t>(col_order[static_cast<std::size_t>(c)])]);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index c = 0; c < k; ++c)
            values(i, c) = table.values(row_order[static_cast<std::size_t>(i)],
                                        col_order[static_cast<std::size_t>(c)]);
    table.values = std::move(values);
    table.classes = std::move(classes);
    table.identity_class = 0;
    table.trivial_char = 0;
    return table;
}

std::vector<Partition> symmetric_group_characters(int n) { return partitions_of(n).partitions; }

std::vector<Partition> symmetric_group_classes(int n) {
    auto parts = partitions_of(n).partitions;
    std::rotate(parts.rbegin(), parts.rbegin() + 1, parts.rend());
    return parts;
}

BigInt murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("murnaghan_nakayama: partitions of different sizes");
    MurnaghanNakayama mn;
    return BigInt(mn.value(lambda.parts, mu.parts, 0));
}

BigInt class_size(const Partition& cycle_type) {
    BigInt z = 1;
    std::map<int, int> counts;
    for (int p : cycle_type.parts) ++counts[p];
    for (const auto& [part, mult] : counts) {
        for (int a = 0; a < mult; ++a) z *= part;
        z *= factorial(mult);
    }
    return factorial(cycle_type.size()) / z;
}

CharacterTable symmetric_group_table(int n) {
    if (n < 1 || n > 12) throw OutOfRange("symmetric_group_table: n must be in [1, 12]");
    const auto rows = symmetric_group_characters(n);
    const auto cols = symmetric_group_classes(n);
    const auto k = static_cast<Eigen::Index>(rows.size());

    CharacterTable table;
    table.group_name = "S" + std::to_string(n);
    table.order = factorial(n);
    long e = 1;
    for (long j = 2; j <= n; ++j) e = std::lcm(e, j);
    table.exponent = e;
    table.family = TableFamily{"symmetric", n};
    for (const auto& mu : cols) table.classes.push_back({mu.to_string(), class_size(mu)});

    MurnaghanNakayama mn;
    table.values.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index c = 0; c < k; ++c)
            table.values(i, c) = Cyclotomic(BigInt(mn.value(
                rows[static_cast<std::size_t>(i)].parts, cols[static_cast<std::size_t>(c)].parts, 0)));
    return table;
}

CharacterTable cyclic_group_table(long m) {
    if (m < 1) throw OutOfRange("cyclic_group_table: m must be positive");
    CharacterTable table;
    table.group_name = "Z/" + std::to_string(m);
    table.order = m;
    table.exponent = m;
    table.family = TableFamily{"cyclic", m};
    for (long k = 0; k < m; ++k)
        table.classes.push_back({k == 0 ? "e" : (k == 1 ? "g" : "g^" + std::to_string(k)), BigInt(1)});
    table.values.resize(m, m);
    for (long j = 0; j < m; ++j)
        for (long k = 0; k < m; ++k) table.values(j, k) = Cyclotomic::zeta(m, (j * k) % m);
    return table;
}

ClassFunction character(const CharacterTable& table, std::size_t row) {
    if (row >= table.class_count())
        throw OutOfRange("character index " + std::to_string(row) + " out of range");
    return ClassFunction{table.values.row(static_cast<Eigen::Index>(row)).transpose()};
}

ClassFunction character_sum(const CharacterTable& table, const std::vector<std::size_t>& rows) {
    if (rows.empty()) throw OutOfRange("character_sum needs at least one row");
    CyclotomicVector sum = CyclotomicVector::Constant(static_cast<Eigen::Index>(table.class_count()), Cyclotomic());
    for (std::size_t r : rows) sum += character(table, r).values;
    return ClassFunction{std::move(sum)};
}

ClassFunction regular_character(const CharacterTable& table) {
    CyclotomicVector v = CyclotomicVector::Constant(static_cast<Eigen::Index>(table.class_count()), Cyclotomic());
    v(0) = Cyclotomic(table.order);
    return ClassFunction{std::move(v)};
}

ClassFunction reflection_character(int n) {
    if (n < 2) throw OutOfRange("reflection representation needs n >= 2");
    if (n > 12) throw OutOfRange("reflection_character: n must be at most 12");
    const auto cols = symmetric_group_classes(n);
    CyclotomicVector v(static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        v(static_cast<Eigen::Index>(c)) = Cyclotomic(cols[c].multiplicity(1) - 1);
    return ClassFunction{std::move(v)};
}

ClassFunction reflection_character(const CharacterTable& table) {
    if (!table.family || table.family->name != "symmetric")
        throw std::invalid_argument("reflection character needs a symmetric-family table");
    if (table.family->parameter < 2) throw OutOfRange("reflection representation needs n >= 2");
    CyclotomicVector v(static_cast<Eigen::Index>(table.class_count()));
    for (std::size_t c = 0; c < table.class_count(); ++c) {
        const Partition mu = Partition::parse(table.classes[c].label);
        if (mu.size() != table.family->parameter)
            throw std::invalid_argument("class label '" + table.classes[c].label +
                                        "' is not a cycle type of S_" +
                                        std::to_string(table.family->parameter));
        v(static_cast<Eigen::Index>(c)) = Cyclotomic(mu.multiplicity(1) - 1);
    }
    return ClassFunction{std::move(v)};
}

IntegerMatrix product_decomposition(const CharacterTable& table, const ClassFunction& gamma) {
    const std::size_t k = table.class_count();
    if (gamma.size() != k) throw ShapeMismatch("class function length differs from class count");
    const auto K = static_cast<Eigen::Index>(k);

    // weighted conjugate rows: |c| * conj(chi_j(c)) / |G|
    CyclotomicMatrix dual(K, K);
    for (Eigen::Index j = 0; j < K; ++j)
        for (Eigen::Index c = 0; c < K; ++c)
            dual(j, c) = Cyclotomic(table.classes[static_cast<std::size_t>(c)].size) *
                         table.values(j, c).conj() / Rational(table.order);

    IntegerMatrix M(K, K);
    for (Eigen::Index i = 0; i < K; ++i) {
        CyclotomicVector prod(K);
        for (Eigen::Index c = 0; c < K; ++c) prod(c) = gamma.values(c) * table.values(i, c);
        for (Eigen::Index j = 0; j < K; ++j) {
            Cyclotomic m;
            for (Eigen::Index c = 0; c < K; ++c) m += prod(c) * dual(j, c);
            if (!m.is_integer() || m.to_integer() < 0)
                throw NotACharacter("multiplicity of " + chi(static_cast<std::size_t>(j)) + " in gamma*" +
                                    chi(static_cast<std::size_t>(i)) + " is " + m.to_string());
            M(i, j) = m.to_integer();
        }
    }
    return M;
}

std::optional<std::size_t> kernel_witness(const CharacterTable& table, const ClassFunction& gamma) {
    if (gamma.size() != table.class_count())
        throw ShapeMismatch("class function length differs from class count");
    for (std::size_t c = 1; c < gamma.size(); ++c)
        if (gamma[c] == gamma[0]) return c;
    return std::nullopt;
}

bool is_faithful(const CharacterTable& table, const ClassFunction& gamma) {
    return !kernel_witness(table, gamma).has_value();
}

bool is_real_valued(const ClassFunction& gamma) {
    for (std::size_t c = 0; c < gamma.size(); ++c)
        if (gamma[c] != gamma[c].conj()) return false;
    return true;
}

bool is_rational_valued(const ClassFunction& gamma) {
    for (std::size_t c = 0; c < gamma.size(); ++c)
        if (!gamma[c].is_rational()) return false;
    return true;
}

}  // namespace critgrp
