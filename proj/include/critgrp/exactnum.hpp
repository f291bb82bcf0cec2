#pragma once

// Exact rational and cyclotomic arithmetic.
//
// Every character value handled by the library is a Cyclotomic: an element of
// Q(zeta_m) stored over the power basis {1, zeta_m, ..., zeta_m^(phi(m)-1)}
// reduced modulo the m-th cyclotomic polynomial. Values of different orders
// are combined in Q(zeta_lcm); results are never descended to a smaller field.

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace critgrp {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

long euler_phi(long m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Obtained by dividing x^m - 1 by Phi_d for every proper divisor d of m.
std::vector<BigInt> cyclotomic_polynomial(long m);

class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    explicit Cyclotomic(const BigInt& v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(const Rational& v) : order_(1), coeffs_(1, v) {}

    /// zeta_m^k for any integer k (negative exponents allowed).
    static Cyclotomic zeta(long m, long k = 1);

    /// Sum of coeffs[k] * zeta_m^k; coeffs may have any length and is reduced.
    static Cyclotomic from_coefficients(long m, std::vector<Rational> coeffs);

    long order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    /// Throws NotAnInteger unless is_rational().
    Rational to_rational() const;
    /// Throws NotAnInteger unless is_integer().
    BigInt to_integer() const;

    /// The same number written over Q(zeta_m); m must be a multiple of order().
    Cyclotomic embed(long m) const;

    /// Image under the automorphism zeta -> zeta^k, gcd(k, order()) = 1.
    Cyclotomic galois(long k) const;
    Cyclotomic conj() const;
    /// Product of all Galois conjugates; always rational.
    Rational norm() const;
    /// Multiplicative inverse via the norm. Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Rational& rhs);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Rational& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

private:
    Cyclotomic(long m, std::vector<Rational> reduced) : order_(m), coeffs_(std::move(reduced)) {}

    long order_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

inline Cyclotomic conj(const Cyclotomic& c) { return c.conj(); }

using CyclotomicMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CyclotomicVector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

}  // namespace critgrp

namespace Eigen {

template <>
struct NumTraits<critgrp::Cyclotomic> : GenericNumTraits<critgrp::Cyclotomic> {
    using Real = critgrp::Cyclotomic;
    using NonInteger = critgrp::Cyclotomic;
    using Nested = critgrp::Cyclotomic;
    using Literal = critgrp::Cyclotomic;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
