#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the code paths it is used to check.

#include "critgrp/exactnum.hpp"
#include "critgrp/intlinalg.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using critgrp::BigInt;
using critgrp::IntegerMatrix;

// Integer polynomials, constant term first.
using Poly = std::vector<BigInt>;

inline Poly trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}

// Exact division; the caller guarantees divisibility.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    const std::size_t dd = den.size() - 1;
    Poly q(num.size() - dd, BigInt(0));
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i] / den[dd];
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return trim(q);
}

inline int mobius(long n) {
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

// Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}.
inline Poly cyclotomic_by_mobius(long m) {
    Poly num{BigInt(1)}, den{BigInt(1)};
    for (long d = 1; d <= m; ++d) {
        if (m % d) continue;
        Poly f(static_cast<std::size_t>(d) + 1, BigInt(0));
        f[0] = -1;
        f[static_cast<std::size_t>(d)] = 1;
        const int mu = mobius(m / d);
        if (mu == 1) num = poly_mul(num, f);
        if (mu == -1) den = poly_mul(den, f);
    }
    return poly_div_exact(num, den);
}

// Product in Z[x]/(x^m - 1), i.e. on formal sums of m-th roots of unity.
inline Poly cyclic_convolution(const Poly& a, const Poly& b, long m) {
    Poly r(static_cast<std::size_t>(m), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[(i + j) % static_cast<std::size_t>(m)] += a[i] * b[j];
    return r;
}

// Laplace expansion along the first row.
inline BigInt det_laplace(const IntegerMatrix& A) {
    const auto n = A.rows();
    if (n == 0) return BigInt(1);
    if (n == 1) return A(0, 0);
    BigInt total = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (A(0, j) == 0) continue;
        IntegerMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = A(r, c);
        const BigInt term = A(0, j) * det_laplace(minor);
        total += (j % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out, std::vector<int>& cur, int start = 0) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, out, cur, i + 1);
        cur.pop_back();
    }
}

// d_k = gcd of all k x k minors; returns d_1, ..., d_r where r is the rank.
inline std::vector<BigInt> determinantal_divisors(const IntegerMatrix& A) {
    std::vector<BigInt> out;
    const int rows = static_cast<int>(A.rows());
    const int cols = static_cast<int>(A.cols());
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(rows, k, rs, cur);
        subsets(cols, k, cs, cur);
        BigInt g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntegerMatrix minor(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) minor(i, j) = A(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
                g = gcd(g, det_laplace(minor));
            }
        if (g == 0) break;
        out.push_back(g);
    }
    return out;
}

// Smith diagonal (nonzero part) from determinantal divisors: s_k = d_k / d_{k-1}.
inline std::vector<BigInt> smith_from_minors(const IntegerMatrix& A) {
    const auto d = determinantal_divisors(A);
    std::vector<BigInt> s;
    BigInt prev = 1;
    for (const auto& dk : d) {
        s.push_back(dk / prev);
        prev = dk;
    }
    return s;
}

// Does (Z/d)^k embed in Z/f_1 + ... + Z/f_r? Searches all k-tuples of elements
// of exponent dividing d for one whose span has d^k elements.
inline bool embeds_by_search(long d, int k, const std::vector<long>& factors) {
    if (k == 0) return true;
    std::vector<std::vector<long>> torsion;  // elements x with d*x = 0
    std::vector<long> x(factors.size(), 0);
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
        if (i == factors.size()) {
            torsion.push_back(x);
            return;
        }
        for (long v = 0; v < factors[i]; ++v) {
            if ((d * v) % factors[i] != 0) continue;
            x[i] = v;
            gen(i + 1);
        }
    };
    gen(0);

    long target = 1;
    for (int i = 0; i < k; ++i) target *= d;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    std::function<bool(int)> search = [&](int depth) -> bool {
        if (depth == k) {
            std::set<std::vector<long>> span;
            std::vector<long> coeff(static_cast<std::size_t>(k), 0);
            for (long idx = 0; idx < target; ++idx) {
                long rest = idx;
                for (int i = 0; i < k; ++i) {
                    coeff[static_cast<std::size_t>(i)] = rest % d;
                    rest /= d;
                }
                std::vector<long> y(factors.size(), 0);
                for (int i = 0; i < k; ++i)
                    for (std::size_t c = 0; c < factors.size(); ++c)
                        y[c] = (y[c] + coeff[static_cast<std::size_t>(i)] * torsion[pick[static_cast<std::size_t>(i)]][c]) % factors[c];
                span.insert(y);
            }
            return static_cast<long>(span.size()) == target;
        }
        for (std::size_t e = 0; e < torsion.size(); ++e) {
            pick[static_cast<std::size_t>(depth)] = e;
            if (search(depth + 1)) return true;
        }
        return false;
    };
    return search(0);
}

// p(n) by Euler's pentagonal number recurrence.
inline long long partitions_pentagonal(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long long sign = (k % 2) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace oracle
