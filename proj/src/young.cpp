#include "critgrp/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace critgrp {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> p;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad partition part '" + item + "'");
        p.push_back(v);
    }
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

std::size_t RankBasis::index_of(const Partition& lambda) const {
    // partitions are sorted descending, so search with the reversed comparison
    auto it = std::lower_bound(partitions.begin(), partitions.end(), lambda,
                               [](const Partition& a, const Partition& b) { return a > b; });
    if (it == partitions.end() || *it != lambda)
        throw std::out_of_range("partition (" + lambda.to_string() + ") not in rank " +
                                std::to_string(n));
    return static_cast<std::size_t>(it - partitions.begin());
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

RankBasis partitions_of(int n) {
    if (n < 0) throw OutOfRange("partitions_of: n must be nonnegative");
    RankBasis basis;
    basis.n = n;
    std::vector<int> prefix;
    enumerate(n, n, prefix, basis.partitions);
    return basis;
}

long long partition_count(long n) {
    if (n < 0) return 0;
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p[static_cast<std::size_t>(n)];
}

std::vector<Partition> remove_corner(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts;
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
        std::vector<int> q = p;
        if (--q[r] == 0) q.pop_back();
        out.emplace_back(std::move(q));
    }
    return out;
}

std::vector<Partition> add_cell(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts;
    for (std::size_t r = 0; r <= p.size(); ++r) {
        if (r == p.size()) {
            std::vector<int> q = p;
            q.push_back(1);
            out.emplace_back(std::move(q));
        } else if (r == 0 || p[r - 1] > p[r]) {
            std::vector<int> q = p;
            ++q[r];
            out.emplace_back(std::move(q));
        }
    }
    return out;
}

IntegerMatrix up_matrix(int i) {
    if (i < 0) throw OutOfRange("up_matrix: rank must be nonnegative");
    const RankBasis from = partitions_of(i);
    const RankBasis to = partitions_of(i + 1);
    IntegerMatrix U = IntegerMatrix::Zero(static_cast<Eigen::Index>(to.size()),
                                          static_cast<Eigen::Index>(from.size()));
    for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& z : add_cell(from.partitions[c]))
            U(static_cast<Eigen::Index>(to.index_of(z)), static_cast<Eigen::Index>(c)) = 1;
    return U;
}

IntegerMatrix down_matrix(int i) {
    if (i < 1) throw OutOfRange("down_matrix: rank must be positive");
    const RankBasis from = partitions_of(i);
    const RankBasis to = partitions_of(i - 1);
    IntegerMatrix D = IntegerMatrix::Zero(static_cast<Eigen::Index>(to.size()),
                                          static_cast<Eigen::Index>(from.size()));
    for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& x : remove_corner(from.partitions[c]))
            D(static_cast<Eigen::Index>(to.index_of(x)), static_cast<Eigen::Index>(c)) = 1;
    return D;
}

IntegerMatrix ud_matrix(int n) {
    if (n < 1) throw OutOfRange("ud_matrix: n must be positive");
    return multiply(up_matrix(n - 1), down_matrix(n));
}

int corner_statistic(const Partition& lambda) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < lambda.parts.size(); ++i)
        if (lambda.parts[i] > lambda.parts[i + 1]) ++c;
    return c;
}

IntegerVector kronecker_row(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 2) throw OutOfRange("kronecker_row: |lambda| must be at least 2");
    const RankBasis basis = partitions_of(n);
    IntegerVector row = IntegerVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& smaller : remove_corner(lambda))
        for (const auto& mu : add_cell(smaller))
            if (mu != lambda) row(static_cast<Eigen::Index>(basis.index_of(mu))) = 1;
    row(static_cast<Eigen::Index>(basis.index_of(lambda))) = corner_statistic(lambda);
    return row;
}

IntegerMatrix kronecker_matrix(int n) {
    const RankBasis basis = partitions_of(n);
    const auto k = static_cast<Eigen::Index>(basis.size());
    IntegerMatrix M(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        M.row(i) = kronecker_row(basis.partitions[static_cast<std::size_t>(i)]).transpose();
    return M;
}

BigInt alpha_eval(int n, int i, const BigInt& t) {
    if (n < 1) throw OutOfRange("alpha_eval: n must be positive");
    if (i < 1) throw OutOfRange("alpha_eval: index must be positive");
    BigInt prod = 1;
    for (int k = 0; k <= n; ++k)
        if (partition_count(n - k) - partition_count(n - k - 1) >= i) prod *= t + k;
    return prod;
}

std::vector<BigInt> alpha_diagonal(int n, const BigInt& t) {
    const long long count = partition_count(n);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 1; i <= count; ++i) out.push_back(alpha_eval(n, static_cast<int>(i), t));
    return out;
}

BigInt reflection_factor(int n, int i) {
    BigInt q = 1;
    for (int j = 1; j <= n; ++j)
        if (partition_count(j) - partition_count(j - 1) >= i) q *= j;
    return q;
}

AbelianGroup reflection_critical_group_formula(int n) {
    if (n < 2) throw OutOfRange("reflection representation needs n >= 2");
    const long long top = partition_count(n) - partition_count(n - 1);
    std::vector<BigInt> factors;
    for (long long i = top; i >= 2; --i) {
        BigInt q = reflection_factor(n, static_cast<int>(i));
        if (q > 1) factors.push_back(std::move(q));
    }
    return AbelianGroup(std::move(factors));
}

bool ud_specialization_matches(int n, const BigInt& t) {
    IntegerMatrix A = ud_matrix(n);
    A.diagonal().array() += t;
    const std::vector<BigInt> alphas = alpha_diagonal(n, t);
    IntegerMatrix D = IntegerMatrix::Zero(A.rows(), A.cols());
    for (Eigen::Index i = 0; i < D.rows(); ++i) D(i, i) = alphas[static_cast<std::size_t>(i)];
    return cokernel(A) == cokernel(D);
}

}  // namespace critgrp
