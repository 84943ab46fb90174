#include "amgf/am.hpp"

#include <doctest.h>

using namespace amgf;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

QSeries s(std::initializer_list<Rational> c) { return QSeries(std::vector<Rational>(c)); }

/// Solves (sum_{j<k} e^{jx}) M = kx coefficient by coefficient.
std::vector<Rational> m_h1_by_back_substitution(long k, std::size_t order) {
    std::vector<Rational> denom(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        for (long j = 0; j < k; ++j) denom[n] += pow(Rational(j), n);
    }
    std::vector<Rational> m(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational rest;
        for (std::size_t j = 0; j < n; ++j) rest += Rational(binomial(n, j)) * m[j] * denom[n - j];
        m[n] = ((n == 1 ? Rational(k) : Rational(0)) - rest) / denom[0];
    }
    return m;
}

}  // namespace

TEST_CASE("bernoulli_numbers") {
    CHECK(bernoulli_numbers(4) == s({1, q(-1, 2), q(1, 6), 0, q(-1, 30)}));
    const QSeries b = bernoulli_numbers(12);
    CHECK(b[0] == 1);
    for (std::size_t n = 3; n <= 12; n += 2) CHECK(b[n] == 0);
    CHECK(b[12] == q(-691, 2730));
}

TEST_CASE("bernoulli_poly_at against the expanded polynomials") {
    // B_1(u) = u - 1/2, B_2(u) = u^2 - u + 1/6, B_4(u) = u^4 - 2u^3 + u^2 - 1/30
    for (long num = -3; num <= 3; ++num) {
        const Rational u = q(num, 3);
        CHECK(bernoulli_poly_at(1, u) == u - q(1, 2));
        CHECK(bernoulli_poly_at(2, u) == u * u - u + q(1, 6));
        CHECK(bernoulli_poly_at(4, u) == pow(u, 4) - Rational(2) * pow(u, 3) + u * u - q(1, 30));
    }
    CHECK(bernoulli_poly_at(2, q(1, 2)) == q(-1, 12));
    CHECK(bernoulli_poly_at(1, 1) == q(1, 2));
    const QSeries b = bernoulli_numbers(12);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(bernoulli_poly_at(n, 0) == b[n]);
}

TEST_CASE("m_series_gf") {
    const QSeries genocchi = m_series_gf(1, 2, 8);
    CHECK(genocchi == s({0, 1, -1, 0, 1, 0, -3, 0, 17}));
    const auto oracle2 = m_h1_by_back_substitution(2, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(genocchi[n] == oracle2[n]);

    CHECK(m_series_gf(1, 3, 4) == s({0, 1, -2, 1, 4}));
    const auto oracle3 = m_h1_by_back_substitution(3, 12);
    const QSeries m3 = m_series_gf(1, 3, 12);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(m3[n] == oracle3[n]);

    for (long k : {-5, -1, 1, 4}) CHECK(m_series_gf(k, k, 6) == scale(Rational(k), QSeries::x(6)));
    CHECK_THROWS_AS(m_series_gf(1, 0, 4), std::domain_error);
}

TEST_CASE("m_direct") {
    CHECK(m_direct(2, 1, 2) == -1);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(m_direct(n, 0, 7) == 0);
    CHECK(m_direct(4, 1, 3) == 4);
    CHECK_THROWS_AS(m_direct(3, 1, 0), std::domain_error);
}

TEST_CASE("both routes agree and are integral on a small grid") {
    for (long h = -4; h <= 4; ++h) {
        for (long k = -4; k <= 4; ++k) {
            if (k == 0) continue;
            const QSeries gf = m_series_gf(h, k, 16);
            const auto direct = m_direct_table(h, k, 16);
            for (std::size_t n = 0; n <= 16; ++n) {
                CHECK(gf[n] == direct[n]);
                CHECK(gf[n].is_integer());
            }
            CHECK(direct[5] == m_direct(5, h, k));
        }
    }
}

TEST_CASE("shifting h by k adds k x e^{hx}") {
    // kx(e^{(h+k)x} - e^{hx})/(e^{kx} - 1) = kx e^{hx}, whose EGF coefficient is n k h^{n-1}.
    for (long h = -3; h <= 3; ++h) {
        for (long k : {-3, -1, 2, 5}) {
            const QSeries diff = sub(m_series_gf(h + k, k, 12), m_series_gf(h, k, 12));
            CHECK(diff[0] == 0);
            for (std::size_t n = 1; n <= 12; ++n) {
                CHECK(diff[n] == Rational(static_cast<long>(n) * k) * pow(Rational(h), n - 1));
            }
        }
    }
}

TEST_CASE("reduction_factor") {
    const QSeries q21 = reduction_factor(2, 1, 6);
    CHECK(q21 == add(QSeries::one(6), exp_line(1, 6)));
    CHECK(q21 == s({2, 1, 1, 1, 1, 1, 1}));
    for (long k = 1; k <= 5; ++k) CHECK(reduction_factor(1, k, 8) == QSeries::one(8));
    CHECK(reduction_factor(-1, 1, 6) == scale(Rational(-1), exp_line(-1, 6)));
    CHECK(reduction_factor(-1, 1, 3) == s({-1, 1, -1, 1}));
    CHECK_THROWS_AS(reduction_factor(1, 0, 3), std::domain_error);

    for (long h = -5; h <= 5; ++h) {
        for (long k = -5; k <= 5; ++k) {
            if (k == 0) continue;
            const QSeries f = reduction_factor(h, k, 10);
            CHECK(integrality_check(f).integral);
            CHECK(mul(f, m_series_gf(1, std::labs(k), 10)) == m_series_gf(h, k, 10));
        }
    }
}

TEST_CASE("direct inverse series") {
    for (long k = 1; k <= 4; ++k) {
        CHECK(comp_inverse(tree_series(k, 12)) == inverse_tree_series_direct(k, 12));
    }
    CHECK(inverse_tree_series_direct(-3, 6) == inverse_tree_series_direct(3, 6));
    CHECK(inverse_tree_series_direct(2, 10) == a2_inverse_series(10));
    CHECK(a2_inverse_series(5) == s({0, 1, -2, 5, -16, 64}));
}

TEST_CASE("Genocchi numbers three ways") {
    const QSeries gf = m_series_gf(1, 2, 16);
    CHECK(subst_exp_minus_one(comp_inverse(tree_series(2, 16))) == gf);
    CHECK(subst_exp_minus_one(a2_inverse_series(16)) == gf);
}

TEST_CASE("am_certify") {
    const auto c12 = am_certify(1, 2, 12);
    CHECK(c12.valid());
    REQUIRE(c12.steps.size() == 5);
    CHECK(c12.steps[0].name == "reduction-factor");
    CHECK(c12.steps[1].name == "tree-series");
    CHECK(c12.steps[2].name == "comp-inverse");
    CHECK(c12.steps[3].name == "subst-exp");
    CHECK(c12.steps[4].name == "final-equality");
    CHECK(c12.str() ==
          "reduction-factor: OK\ntree-series: OK\ncomp-inverse: OK\nsubst-exp: OK\nfinal-equality: OK\nCERTIFIED\n");

    CHECK(am_certify(0, 5, 12).valid());
    CHECK(m_series_gf(0, 5, 12).is_zero());
    CHECK(am_certify(7, -3, 12).valid());
    CHECK(am_certify(-8, 8, 10).valid());
    CHECK_THROWS_AS(am_certify(1, 0, 4), std::domain_error);
}

TEST_CASE("am_certify refutes every injected fault") {
    for (const char* name : {step::reduction_factor, step::tree_series, step::comp_inverse, step::subst_exp,
                             step::final_equality}) {
        CertifyOptions opts;
        opts.inject_fault = name;
        const auto cert = am_certify(3, 2, 8, opts);
        CHECK_FALSE(cert.valid());
        CHECK(cert.str().ends_with("REFUTED\n"));
        bool named = false;
        for (const auto& st : cert.steps) {
            if (st.name == name) {
                named = true;
                CHECK_FALSE(st.ok());
                CHECK(st.str().starts_with(std::string(name) + ": FAIL at n=2, value="));
            }
        }
        CHECK(named);
    }
}
