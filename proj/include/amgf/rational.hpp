// Exact rationals over GMP, always kept in lowest terms.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace amgf {

using Integer = mpz_class;

/// Arbitrary-precision rational number in canonical form: positive
/// denominator, coprime numerator and denominator, zero stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    /// Throws std::domain_error("division by zero") when den == 0.
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error("division by zero").
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n/d", or just "n" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// Canonical value of n/d.
Rational rat_normalize(const Integer& n, const Integer& d);

/// C(n, k); zero outside 0 <= k <= n. Requires n >= 0.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

Rational pow(const Rational& base, unsigned long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace amgf
