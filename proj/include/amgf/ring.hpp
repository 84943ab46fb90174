// The coefficient-ring contract shared by the series engine.
//
// A ring R plugs in by specializing RingTraits<R>. Arithmetic goes through
// the ordinary operators; everything else (embeddings, integrality, units,
// exact division, rendering) goes through the traits.
#pragma once

#include "amgf/multipoly.hpp"
#include "amgf/rational.hpp"

#include <concepts>
#include <stdexcept>
#include <string>

namespace amgf {

template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr const char* name = "QQ";
    static Rational from_integer(const Integer& n) { return Rational(n); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool is_one(const Rational& a) { return a.is_one(); }
    static bool is_integral(const Rational& a) { return a.is_integer(); }
    static bool is_unit(const Rational& a) { return !a.is_zero(); }
    static Rational inverse(const Rational& a) {
        if (a.is_zero()) throw std::domain_error("not a unit: 0");
        return Rational(1) / a;
    }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
    static std::string render(const Rational& a) { return a.str(); }
};

template <>
struct RingTraits<MultiPoly> {
    static constexpr const char* name = "QQ[a1,a2,b1,b2]";
    static MultiPoly from_integer(const Integer& n) { return MultiPoly(n); }
    static MultiPoly from_rational(const Rational& q) { return MultiPoly(q); }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static bool is_one(const MultiPoly& a) { return a.is_one(); }
    static bool is_integral(const MultiPoly& a) { return a.is_integral(); }
    // Units of QQ[a1,a2,b1,b2] are the nonzero constants.
    static bool is_unit(const MultiPoly& a) { return !a.is_zero() && a.is_constant(); }
    static MultiPoly inverse(const MultiPoly& a) {
        if (!is_unit(a)) throw std::domain_error("not a unit: " + a.str());
        return MultiPoly(Rational(1) / a.constant());
    }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return amgf::exact_div(a, b); }
    static std::string render(const MultiPoly& a) { return a.str(); }
};

template <typename R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q, const Integer& n) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a * q } -> std::convertible_to<R>;
    { RingTraits<R>::from_integer(n) } -> std::same_as<R>;
    { RingTraits<R>::from_rational(q) } -> std::same_as<R>;
    { RingTraits<R>::is_zero(a) } -> std::same_as<bool>;
    { RingTraits<R>::is_one(a) } -> std::same_as<bool>;
    { RingTraits<R>::is_integral(a) } -> std::same_as<bool>;
    { RingTraits<R>::is_unit(a) } -> std::same_as<bool>;
    { RingTraits<R>::inverse(a) } -> std::same_as<R>;
    { RingTraits<R>::exact_div(a, b) } -> std::same_as<R>;
    { RingTraits<R>::render(a) } -> std::convertible_to<std::string>;
};

template <CoefficientRing R>
bool is_integral_coeff(const R& c) {
    return RingTraits<R>::is_integral(c);
}

}  // namespace amgf
