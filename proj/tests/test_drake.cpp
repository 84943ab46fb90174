#include "amgf/am.hpp"
#include "amgf/drake.hpp"

#include <doctest.h>

using namespace amgf;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

MultiPoly v(Var x) { return MultiPoly::variable(x); }

}  // namespace

TEST_CASE("drake_closed_form") {
    CHECK(drake_closed_form({0, 0, 0, 0}) == 1);
    CHECK(drake_closed_form({1, 0, 0, 0}) == -1);
    CHECK(drake_closed_form({1, 0, 0, 1}) == 1);
    CHECK(drake_closed_form({0, 0, 2, 0}) == 2);
    CHECK(DrakeExponent{1, 2, 0, 1}.index() == 5);
}

TEST_CASE("drake_exponents enumerates every tuple of a given degree") {
    CHECK(drake_exponents(0).size() == 1);
    CHECK(drake_exponents(1).size() == 4);
    CHECK(drake_exponents(7).size() == 120);
    for (const auto& e : drake_exponents(5)) CHECK(e.index() == 6);
}

TEST_CASE("drake_inverse_series low orders") {
    const PolySeries g = drake_inverse_series(3);
    CHECK(g[0].is_zero());
    CHECK(g[1] == MultiPoly(1));
    CHECK(g[2] == -(v(Var::a1) + v(Var::a2) + v(Var::b1) + v(Var::b2)));
    for (const auto& e : drake_exponents(2)) CHECK(g[3].coefficient(e.exponent()) == drake_closed_form(e));
    CHECK(g[3].size() == drake_exponents(2).size());
}

TEST_CASE("drake_inverse_series matches the closed form and is homogeneous") {
    const std::size_t N = 7;
    const PolySeries g = drake_inverse_series(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const auto degree = static_cast<unsigned>(n - 1);
        CHECK(g[n].is_homogeneous(degree));
        const auto tuples = drake_exponents(degree);
        CHECK(g[n].size() == tuples.size());
        for (const auto& e : tuples) {
            CHECK(g[n].coefficient(e.exponent()) == drake_closed_form(e));
            // a1 <-> b2, a2 <-> b1
            const DrakeExponent swapped{e.d2, e.d1, e.a2, e.a1};
            CHECK(drake_closed_form(swapped) == drake_closed_form(e));
            CHECK(g[n].coefficient(swapped.exponent()) == g[n].coefficient(e.exponent()));
        }
    }
}

TEST_CASE("k = 2 specialization of the inverse series") {
    const QSeries s = specialize(drake_inverse_series(5), k2_specialization());
    CHECK(s == QSeries(std::vector<Rational>{0, 1, -2, 5, -16, 64}));
    CHECK(s == a2_inverse_series(5));
}

TEST_CASE("solve_drake_f") {
    const std::size_t N = 6;
    const PolySeries f = solve_drake_f(N);
    CHECK(f[1] == MultiPoly(1));
    CHECK(integrality_check(f).integral);
    CHECK(compose(drake_inverse_series(N), f) == PolySeries::x(N));
    CHECK(specialize(f, k2_specialization()) == tree_series(2, N));
}

TEST_CASE("verify_drake_functional_eq") {
    const PolySeries f = solve_drake_f(5);
    CHECK(verify_drake_functional_eq(f));
    CHECK_FALSE(verify_drake_functional_eq(PolySeries::x(5)));
    CHECK(verify_drake_functional_eq(PolySeries::x(1)));
    CHECK_FALSE(verify_drake_functional_eq(f.with_coeff(3, f[3] + v(Var::b1))));
    CHECK_THROWS_AS(verify_drake_functional_eq(PolySeries::one(3)), std::domain_error);
}

TEST_CASE("inv_a2_coefficient") {
    CHECK(inv_a2_coefficient(1) == 1);
    CHECK(inv_a2_coefficient(3) == 5);
    CHECK(inv_a2_coefficient(4) == -16);
    CHECK_THROWS_AS(inv_a2_coefficient(0), std::domain_error);
    const QSeries expansion = a2_inverse_series(14);
    for (std::size_t n = 1; n <= 14; ++n) CHECK(expansion[n] == Rational(inv_a2_coefficient(n)));
}

TEST_CASE("beta series identity") {
    const BivariateSeries lhs = beta_lhs(10);
    const BivariateSeries rhs = beta_rhs(10);
    CHECK(lhs.at(0, 0) == 1);
    CHECK(rhs.at(0, 0) == 1);
    CHECK(lhs.at(1, 0) == q(1, 2));
    CHECK(rhs.at(1, 0) == q(1, 2));
    CHECK(rhs.at(2, 3) == q(2 * 6, 720));
    CHECK(rhs.at(11, 0) == 0);
    CHECK(beta_series_identity(10));
    CHECK(beta_series_identity(1));
    CHECK_THROWS_AS(beta_series_identity(0), std::domain_error);
}

TEST_CASE("beta identity on the diagonal u = v = -x") {
    const auto diag = beta_diagonal_egf(11);
    REQUIRE(diag.size() == 13);
    CHECK(diag[0] == 0);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(diag[n] == inv_a2_coefficient(n));
}

TEST_CASE("bivariate series bounds") {
    BivariateSeries b(3);
    CHECK_THROWS_AS(b.set(2, 2, Rational(1)), std::out_of_range);
    b.set(1, 2, Rational(5));
    CHECK(b.at(1, 2) == 5);
}
