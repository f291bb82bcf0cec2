#pragma once

// Exact integer matrices, Smith normal form with unimodular transforms, and
// finite abelian groups given by invariant factors.
//
// The Smith decomposition is a template over the entry type so it runs both on
// BigInt (the library default) and on builtin integers in tests.

#include "critgrp/errors.hpp"
#include "critgrp/exactnum.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace critgrp {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = Matrix<BigInt>;
using IntegerVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;

template <typename Scalar>
struct SmithDecomposition {
    Matrix<Scalar> P;  // rows x rows, unimodular
    Matrix<Scalar> S;  // same shape as the input, diagonal
    Matrix<Scalar> Q;  // cols x cols, unimodular
    std::vector<Scalar> diagonal;  // s_1 | s_2 | ... , zeros last
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
    return x < 0 ? Scalar(-x) : x;
}

// Returns g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
template <typename Scalar>
Scalar extended_gcd(const Scalar& a, const Scalar& b, Scalar& x, Scalar& y) {
    Scalar old_r = a, r = b;
    Scalar old_s = 1, s = 0;
    Scalar old_t = 0, t = 1;
    while (r != 0) {
        const Scalar q = old_r / r;
        Scalar tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

// Replace rows (i, k) of M by [[x, y], [u, v]] * [row i; row k].
template <typename Scalar>
void combine_rows(Matrix<Scalar>& M, Eigen::Index i, Eigen::Index k, const Scalar& x,
                  const Scalar& y, const Scalar& u, const Scalar& v) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
        const Scalar a = M(i, c);
        const Scalar b = M(k, c);
        M(i, c) = x * a + y * b;
        M(k, c) = u * a + v * b;
    }
}

template <typename Scalar>
void combine_cols(Matrix<Scalar>& M, Eigen::Index j, Eigen::Index k, const Scalar& x,
                  const Scalar& y, const Scalar& u, const Scalar& v) {
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        const Scalar a = M(r, j);
        const Scalar b = M(r, k);
        M(r, j) = x * a + y * b;
        M(r, k) = u * a + v * b;
    }
}

}  // namespace detail

/// Smith normal form P*A*Q = S over the integers.
///
/// Pivot: the nonzero entry of least absolute value in the trailing submatrix,
/// ties broken by lowest (row, col). Rows and columns are cleared with Bezout
/// steps; a pivot that fails to divide the rest of the submatrix absorbs the
/// offending row and the step repeats. Diagonal entries come out nonnegative.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
    using Index = Eigen::Index;
    const Index rows = A.rows();
    const Index cols = A.cols();
    SmithDecomposition<Scalar> out;
    out.S = A;
    out.P = Matrix<Scalar>::Identity(rows, rows);
    out.Q = Matrix<Scalar>::Identity(cols, cols);
    auto& S = out.S;
    auto& P = out.P;
    auto& Q = out.Q;

    const Index steps = std::min(rows, cols);
    for (Index t = 0; t < steps; ++t) {
        Index pr = -1, pc = -1;
        Scalar best = 0;
        for (Index i = t; i < rows; ++i) {
            for (Index j = t; j < cols; ++j) {
                if (S(i, j) == 0) continue;
                const Scalar a = detail::abs_value(S(i, j));
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;  // trailing block is zero
        if (pr != t) {
            S.row(t).swap(S.row(pr));
            P.row(t).swap(P.row(pr));
        }
        if (pc != t) {
            S.col(t).swap(S.col(pc));
            Q.col(t).swap(Q.col(pc));
        }

        for (;;) {
            bool dirty = false;
            for (Index i = t + 1; i < rows; ++i) {
                if (S(i, t) == 0) continue;
                const Scalar a = S(t, t);
                const Scalar b = S(i, t);
                if (b % a == 0) {
                    const Scalar q = b / a;
                    S.row(i) -= q * S.row(t);
                    P.row(i) -= q * P.row(t);
                    continue;
                }
                Scalar x, y;
                const Scalar g = detail::extended_gcd(a, b, x, y);
                const Scalar u = -b / g;
                const Scalar v = a / g;
                detail::combine_rows(S, t, i, x, y, u, v);
                detail::combine_rows(P, t, i, x, y, u, v);
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (S(t, j) == 0) continue;
                const Scalar a = S(t, t);
                const Scalar b = S(t, j);
                if (b % a == 0) {
                    const Scalar q = b / a;
                    S.col(j) -= q * S.col(t);
                    Q.col(j) -= q * Q.col(t);
                    continue;
                }
                Scalar x, y;
                const Scalar g = detail::extended_gcd(a, b, x, y);
                const Scalar u = -b / g;
                const Scalar v = a / g;
                detail::combine_cols(S, t, j, x, y, u, v);
                detail::combine_cols(Q, t, j, x, y, u, v);
                dirty = true;  // column steps may refill column t
            }
            if (dirty) {
                bool column_clear = true;
                for (Index i = t + 1; i < rows; ++i)
                    if (S(i, t) != 0) column_clear = false;
                if (!column_clear) continue;
            }

            // Pivot must divide the whole trailing block.
            Index bad_row = -1;
            const Scalar pivot = S(t, t);
            for (Index i = t + 1; i < rows && bad_row < 0; ++i) {
                for (Index j = t + 1; j < cols; ++j) {
                    if (S(i, j) % pivot != 0) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row < 0) break;
            S.row(t) += S.row(bad_row);
            P.row(t) += P.row(bad_row);
        }

        if (S(t, t) < 0) {
            S.row(t) = -S.row(t);
            P.row(t) = -P.row(t);
        }
    }

    out.diagonal.reserve(static_cast<std::size_t>(steps));
    for (Index t = 0; t < steps; ++t) out.diagonal.push_back(S(t, t));
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> M) {
    using Index = Eigen::Index;
    if (M.rows() != M.cols()) throw ShapeMismatch("determinant of a non-square matrix");
    const Index n = M.rows();
    if (n == 0) return Scalar(1);
    Scalar sign = 1;
    Scalar prev = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (M(k, k) == 0) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (M(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return Scalar(0);
            M.row(k).swap(M.row(swap_row));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
            }
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

/// A finite abelian group Z/d_1 + ... + Z/d_r with d_i >= 2 and d_i | d_{i+1}.
class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Throws std::invalid_argument unless the list is a valid invariant-factor chain.
    explicit AbelianGroup(std::vector<BigInt> invariant_factors);

    /// Normalizes arbitrary cyclic orders (zeros are rejected, 1s and signs
    /// dropped) into invariant-factor form through a Smith decomposition.
    static AbelianGroup from_cyclic_factors(const std::vector<BigInt>& orders);

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    BigInt order() const;
    bool is_trivial() const { return factors_.empty(); }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    std::string to_string() const;

private:
    std::vector<BigInt> factors_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

struct Cokernel {
    std::size_t free_rank = 0;
    AbelianGroup torsion;

    friend bool operator==(const Cokernel&, const Cokernel&) = default;
};

/// Z^rows / A Z^cols for A acting on column vectors.
Cokernel cokernel(const IntegerMatrix& A);

/// Whether (Z/d)^k embeds in target: for every prime power p^a exactly
/// dividing d, at least k invariant factors of target are divisible by p^a.
bool subgroup_embeds(const BigInt& d, std::size_t k, const AbelianGroup& target);

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n);

IntegerMatrix multiply(const IntegerMatrix& A, const IntegerMatrix& B);
IntegerMatrix subtract(const IntegerMatrix& A, const IntegerMatrix& B);
IntegerMatrix scalar_identity(Eigen::Index n, const BigInt& c);

/// Plain-text matrix format: "rows cols" then rows lines of cols integers.
IntegerMatrix parse_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntegerMatrix& A);

}  // namespace critgrp
