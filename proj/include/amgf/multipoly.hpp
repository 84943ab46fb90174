// Sparse polynomials in the four indeterminates a1, a2, b1, b2 with exact
// rational coefficients.
#pragma once

#include "amgf/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace amgf {

/// Exponents of (a1, a2, b1, b2).
using Exponent = std::array<std::uint32_t, 4>;

enum class Var : std::size_t { a1 = 0, a2 = 1, b1 = 2, b2 = 3 };

/// Values substituted for (a1, a2, b1, b2).
using Assignment = std::array<Rational, 4>;

class MultiPoly {
public:
    // Lex order a1 > a2 > b1 > b2; std::greater puts the leading term first.
    using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Rational& c);

    static MultiPoly monomial(const Rational& c, const Exponent& e);
    static MultiPoly variable(Var v);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Coefficient of the monomial e (zero when absent).
    Rational coefficient(const Exponent& e) const;
    /// Constant term.
    Rational constant() const { return coefficient(Exponent{}); }

    /// True iff every stored coefficient has denominator 1.
    bool is_integral() const;
    /// Maximum total degree; -1 for the zero polynomial.
    long total_degree() const;
    /// Every term has total degree d (the zero polynomial qualifies).
    bool is_homogeneous(long d) const;

    Rational eval(const Assignment& v) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Terms in lex order, e.g. "3*a1*b2^2 - 1/2*a2 + 1".
    std::string str() const;

private:
    void add_term(const Exponent& e, const Rational& c);

    TermMap terms_;
};

/// Raised by exact_div when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
public:
    explicit NotDivisible(MultiPoly remainder);
    const MultiPoly& remainder() const { return remainder_; }

private:
    MultiPoly remainder_;
};

/// Returns r with r * q == p. Multivariate division on the lex order; throws
/// NotDivisible carrying the nonzero remainder otherwise, and
/// std::domain_error when q is zero.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace amgf
