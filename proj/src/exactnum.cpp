#include "critgrp/exactnum.hpp"

#include "critgrp/errors.hpp"

#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace critgrp {

namespace {

std::vector<BigInt> compute_cyclotomic(long m);

// Per-thread memo; keeps the module free of shared mutable state.
const std::vector<BigInt>& cached_cyclotomic(long m) {
    thread_local std::map<long, std::vector<BigInt>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) {
        it = cache.emplace(m, compute_cyclotomic(m)).first;
    }
    return it->second;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<BigInt> divide_monic(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, BigInt(0));
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = rem[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    return quot;
}

std::vector<BigInt> compute_cyclotomic(long m) {
    std::vector<BigInt> poly(static_cast<std::size_t>(m) + 1, BigInt(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) poly = divide_monic(poly, cached_cyclotomic(d));
    }
    return poly;
}

// Reduce a polynomial in zeta_m modulo Phi_m in place.
void reduce(long m, std::vector<Rational>& p) {
    const auto& phi = cached_cyclotomic(m);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        const Rational c = p[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) {
            if (phi[j] == 1) {
                p[i - d + j] -= c;
            } else if (phi[j] == -1) {
                p[i - d + j] += c;
            } else if (phi[j] != 0) {
                p[i - d + j] -= c * Rational(phi[j]);
            }
        }
    }
    p.resize(d, Rational(0));
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

}  // namespace

long euler_phi(long m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<BigInt> cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    return cached_cyclotomic(m);
}

Cyclotomic Cyclotomic::zeta(long m, long k) {
    if (m < 1) throw std::invalid_argument("Cyclotomic::zeta: order must be positive");
    long e = k % m;
    if (e < 0) e += m;
    std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    reduce(m, p);
    return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::from_coefficients(long m, std::vector<Rational> coeffs) {
    if (m < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
    reduce(m, coeffs);
    return Cyclotomic(m, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_integer() const {
    return is_rational() && denominator(coeffs_[0]) == 1;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw NotAnInteger("value " + to_string() + " is not rational");
    return coeffs_[0];
}

BigInt Cyclotomic::to_integer() const {
    if (!is_integer()) throw NotAnInteger("value " + to_string() + " is not a rational integer");
    return numerator(coeffs_[0]);
}

Cyclotomic Cyclotomic::embed(long m) const {
    if (m == order_) return *this;
    if (m < 1 || m % order_ != 0)
        throw std::invalid_argument("Cyclotomic::embed: target order must be a multiple");
    const std::size_t step = static_cast<std::size_t>(m / order_);
    std::vector<Rational> p(step * (coeffs_.size() - 1) + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    reduce(m, p);
    return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (order_ == 1) return *this;
    long e = k % order_;
    if (e < 0) e += order_;
    if (std::gcd(e, order_) != 1)
        throw std::invalid_argument("Cyclotomic::galois: exponent must be a unit mod the order");
    std::vector<Rational> p(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        p[static_cast<std::size_t>((static_cast<long>(i) * e) % order_)] += coeffs_[i];
    }
    reduce(order_, p);
    return Cyclotomic(order_, std::move(p));
}

Cyclotomic Cyclotomic::conj() const { return galois(order_ - 1); }

Rational Cyclotomic::norm() const {
    Cyclotomic prod(1L);
    for (long k = 1; k <= order_; ++k) {
        if (std::gcd(k, order_) == 1) prod *= galois(k);
    }
    return prod.to_rational();
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
    Cyclotomic others(1L);
    for (long k = 2; k <= order_; ++k) {
        if (std::gcd(k, order_) == 1) others *= galois(k);
    }
    // this * others is the norm, a nonzero rational.
    const Rational n = (*this * others).to_rational();
    return others / n;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (order_ == rhs.order_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    const long m = lcm_order(order_, rhs.order_);
    *this = embed(m);
    return *this += rhs.embed(m);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (rhs.order_ == 1) {
        for (auto& c : coeffs_) c *= rhs.coeffs_[0];
        return *this;
    }
    if (order_ == 1) {
        const Rational s = coeffs_[0];
        *this = rhs;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    if (order_ != rhs.order_) {
        const long m = lcm_order(order_, rhs.order_);
        *this = embed(m);
        return *this *= rhs.embed(m);
    }
    std::vector<Rational> p(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] != 0) p[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    reduce(order_, p);
    coeffs_ = std::move(p);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& rhs) {
    if (rhs == 0) throw std::domain_error("Cyclotomic: division by zero");
    for (auto& c : coeffs_) c /= rhs;
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const long m = std::lcm(a.order_, b.order_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << "E(" << order_ << ')';
        if (k > 1) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace critgrp
