#include "amgf/combinat.hpp"
#include "amgf/fixpoint.hpp"

#include <doctest.h>

using namespace amgf;

namespace {

QSeries s(std::initializer_list<Rational> c) { return QSeries(std::vector<Rational>(c)); }

QSeries exp_minus_one(std::size_t order) { return sub(exp_line(1, order), QSeries::one(order)); }

}  // namespace

TEST_CASE("pk_of_series") {
    CHECK(pk_of_series(1, s({0, 5, 7})) == QSeries::one(2));
    CHECK(pk_of_series(2, QSeries(3)) == QSeries::constant(2, 3));
    CHECK(pk_of_series(3, QSeries::x(2)) == s({3, 3, 2}));
    CHECK_THROWS_AS(pk_of_series(0, QSeries::x(2)), std::domain_error);
}

TEST_CASE("p_k(A) times A equals (1+A)^k - 1") {
    const QSeries a = s({0, 1, -2, 5, 3});
    for (long k = 1; k <= 6; ++k) {
        QSeries power = QSeries::one(4);
        for (long i = 0; i < k; ++i) power = mul(power, add(QSeries::one(4), a));
        CHECK(mul(a, pk_of_series(k, a)) == sub(power, QSeries::one(4)));
    }
}

TEST_CASE("solve_fixed_point: constant map") {
    const PhiSpec<Rational> phi{"const-x", [](const QSeries& a) { return QSeries::x(a.order()); }};
    const auto r = solve_fixed_point(phi, 5);
    CHECK(r.solution == QSeries::x(5));
    CHECK(r.iterations == 1);
    CHECK(r.stabilized);
}

TEST_CASE("solve_fixed_point: k = 2 tree series against enumeration") {
    const auto r = solve_fixed_point(am_phi(2), 4);
    CHECK(r.solution == s({0, 1, 2, 7, 36}));
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(r.solution[n] == Rational(count_alternating_trees(static_cast<unsigned>(n + 1))));
    }
}

TEST_CASE("solve_fixed_point: divergence is an error") {
    const PhiSpec<Rational> phi{"shift", [](const QSeries& a) {
                                    return add(a, mul(QSeries::x(a.order()), QSeries::x(a.order())));
                                }};
    CHECK_THROWS_AS(solve_fixed_point(phi, 4), NotContraction);
}

TEST_CASE("solve_fixed_point: perturbation probe catches a non-contraction") {
    // Converges to x from zero, but output 2 reads input 2.
    const PhiSpec<Rational> phi{"self-read", [](const QSeries& a) {
                                    const std::size_t N = a.order();
                                    return add(QSeries::x(N), scale(a[2], QSeries::basis(2, N)));
                                }};
    CHECK_THROWS_AS(solve_fixed_point(phi, 4), NotContraction);
    FixpointOptions lax;
    lax.check_contraction = false;
    CHECK(solve_fixed_point(phi, 4, lax).solution == QSeries::x(4));
}

TEST_CASE("am_phi solutions") {
    CHECK(tree_series(2, 3) == s({0, 1, 2, 7}));
    CHECK(tree_series(1, 8) == exp_minus_one(8));
    CHECK(tree_series(3, 2) == s({0, 1, 3}));
    CHECK_THROWS_AS(am_phi(0), std::domain_error);
}

TEST_CASE("am_phi iterates settle one coefficient per step") {
    const std::size_t N = 10;
    for (long k = 1; k <= 4; ++k) {
        const PhiSpec<Rational> phi = am_phi(k);
        const QSeries final_solution = tree_series(k, N);
        QSeries a(N);
        for (std::size_t m = 0; m <= N + 1; ++m) {
            for (std::size_t n = 0; n <= std::min(m, N); ++n) CHECK(a[n] == final_solution[n]);
            a = phi.apply(a);
        }
    }
}

TEST_CASE("verify_exp_form") {
    CHECK(verify_exp_form(tree_series(2, 10), 2));
    CHECK_FALSE(verify_exp_form(QSeries::x(4), 2));
    CHECK(verify_exp_form(exp_minus_one(6), 1));
    for (long k = 3; k <= 5; ++k) CHECK(verify_exp_form(tree_series(k, 8), k));
    CHECK_THROWS_AS(verify_exp_form(QSeries::one(3), 2), std::domain_error);
}

TEST_CASE("verify_postnikov_form") {
    const QSeries a = tree_series(2, 10);
    CHECK(verify_postnikov_form(a));
    CHECK_FALSE(verify_postnikov_form(QSeries(6)));
    CHECK_FALSE(verify_postnikov_form(a.with_coeff(4, a[4] + 1)));
}

TEST_CASE("k = 2 solution satisfies all three exponential forms") {
    const std::size_t N = 12;
    const QSeries a = tree_series(2, N);
    const QSeries b = add(QSeries::one(N), a);
    const QSeries two_plus_a = add(QSeries::constant(2, N), a);
    CHECK(mul(b, b) == exp_series(truncate(mul_by_x(two_plus_a), N)));
    CHECK(verify_postnikov_form(a));
    CHECK(verify_exp_form(a, 2));
}

TEST_CASE("tree series is integral for k = 1..6 at order 24") {
    for (long k = 1; k <= 6; ++k) {
        const auto rep = integrality_check(tree_series(k, 24));
        CHECK_MESSAGE(rep.integral, "k=" << k);
    }
}
