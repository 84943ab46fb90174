// Seeded random generators shared by the property tests.
#pragma once

#include "amgf/multipoly.hpp"
#include "amgf/series.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace amgf::testing {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(std::numeric_limits<std::int64_t>::min() / 2,
                                                    std::numeric_limits<std::int64_t>::max() / 2);
    std::uniform_int_distribution<std::int64_t> den(1, std::numeric_limits<std::int64_t>::max() / 2);
    Integer n, d;
    mpz_set_si(n.get_mpz_t(), num(rng));
    mpz_set_si(d.get_mpz_t(), den(rng));
    return Rational(n, d);
}

inline Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

/// Up to max_terms terms of total degree <= max_degree.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t max_terms = 8, unsigned max_degree = 6) {
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    std::uniform_int_distribution<unsigned> exponent(0, max_degree);
    MultiPoly p;
    const std::size_t terms = count(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent e{};
        unsigned budget = exponent(rng);
        for (std::size_t i = 0; i < 4 && budget > 0; ++i) {
            std::uniform_int_distribution<unsigned> part(0, budget);
            e[i] = part(rng);
            budget -= e[i];
        }
        p += MultiPoly::monomial(small_rational(rng), e);
    }
    return p;
}

/// Integer coefficients in [-lim, lim].
inline QSeries random_integral_series(std::mt19937_64& rng, std::size_t order, long lim = 5) {
    std::uniform_int_distribution<long> c(-lim, lim);
    std::vector<Rational> v(order + 1);
    for (auto& x : v) x = c(rng);
    return QSeries(std::move(v));
}

inline QSeries random_rational_series(std::mt19937_64& rng, std::size_t order) {
    std::vector<Rational> v(order + 1);
    for (auto& x : v) x = small_rational(rng);
    return QSeries(std::move(v));
}

inline QSeries with_zero_constant(QSeries s) { return s.with_coeff(0, Rational(0)); }

}  // namespace amgf::testing
