#include "critgrp/intlinalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace critgrp {

AbelianGroup::AbelianGroup(std::vector<BigInt> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw std::invalid_argument("invariant factors must be at least 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
}

AbelianGroup AbelianGroup::from_cyclic_factors(const std::vector<BigInt>& orders) {
    const auto n = static_cast<Eigen::Index>(orders.size());
    IntegerMatrix D = IntegerMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (orders[static_cast<std::size_t>(i)] == 0)
            throw std::invalid_argument("cyclic factor of infinite order");
        D(i, i) = orders[static_cast<std::size_t>(i)];
    }
    return cokernel(D).torsion;
}

BigInt AbelianGroup::order() const {
    BigInt n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " ⊕ ";
        os << "ℤ/" << factors_[i] << "ℤ";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.to_string(); }

Cokernel cokernel(const IntegerMatrix& A) {
    const auto snf = smith_normal_form(A);
    Cokernel out;
    out.free_rank = static_cast<std::size_t>(A.rows()) - snf.diagonal.size();
    std::vector<BigInt> torsion;
    for (const auto& s : snf.diagonal) {
        if (s == 0)
            ++out.free_rank;
        else if (s > 1)
            torsion.push_back(s);
    }
    out.torsion = AbelianGroup(std::move(torsion));
    return out;
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, unsigned>> out;
    if (n < 2) return out;
    for (BigInt p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

bool subgroup_embeds(const BigInt& d, std::size_t k, const AbelianGroup& target) {
    if (k == 0) return true;
    for (const auto& [p, e] : factorize(d)) {
        BigInt pa = 1;
        for (unsigned i = 0; i < e; ++i) pa *= p;
        std::size_t count = 0;
        for (const auto& f : target.invariant_factors())
            if (f % pa == 0) ++count;
        if (count < k) return false;
    }
    return true;
}

IntegerMatrix multiply(const IntegerMatrix& A, const IntegerMatrix& B) {
    if (A.cols() != B.rows())
        throw ShapeMismatch("multiply: " + std::to_string(A.rows()) + "x" +
                            std::to_string(A.cols()) + " by " + std::to_string(B.rows()) + "x" +
                            std::to_string(B.cols()));
    IntegerMatrix C = IntegerMatrix::Zero(A.rows(), B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index k = 0; k < A.cols(); ++k) {
            if (A(i, k) == 0) continue;
            for (Eigen::Index j = 0; j < B.cols(); ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

IntegerMatrix subtract(const IntegerMatrix& A, const IntegerMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw ShapeMismatch("subtract: operand shapes differ");
    return A - B;
}

IntegerMatrix scalar_identity(Eigen::Index n, const BigInt& c) {
    IntegerMatrix I = IntegerMatrix::Zero(n, n);
    I.diagonal().setConstant(c);
    return I;
}

IntegerMatrix parse_matrix(std::istream& in) {
    long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw ParseError("matrix header must be 'rows cols' with positive sizes");
    IntegerMatrix A(rows, cols);
    std::string token;
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            if (!(in >> token))
                throw ParseError("matrix ended early at entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            try {
                A(i, j) = BigInt(token);
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + token + "'");
            }
        }
    }
    if (in >> token) throw ParseError("trailing data after matrix: '" + token + "'");
    return A;
}

void write_matrix(std::ostream& out, const IntegerMatrix& A) {
    out << A.rows() << ' ' << A.cols() << '\n';
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            if (j) out << ' ';
            out << A(i, j);
        }
        out << '\n';
    }
}

}  // namespace critgrp
