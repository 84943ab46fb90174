// x-adic fixed-point solving for functional equations A = Phi(A), and the
// exponential forms those solutions must satisfy.
#pragma once

#include "amgf/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace amgf {

class NotContraction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Right-hand side of A = Phi(A). Coefficient n of apply(A) must depend
/// only on coefficients 0..n-1 of A.
template <CoefficientRing R>
struct PhiSpec {
    std::string name;
    std::function<Series<R>(const Series<R>&)> apply;
};

template <CoefficientRing R>
struct FixpointResult {
    Series<R> solution;
    std::size_t iterations = 0;
    bool stabilized = false;
};

struct FixpointOptions {
    /// Perturb each coefficient of the solution and confirm that no lower or
    /// equal output coefficient moves.
    bool check_contraction = true;
};

/// Iterates A <- Phi(A) from the zero series until A = Phi(A), at most N+1
/// times. Throws NotContraction if the iteration does not settle, if an
/// already-settled coefficient changes, or if the perturbation probe fails.
template <CoefficientRing R>
FixpointResult<R> solve_fixed_point(const PhiSpec<R>& phi, std::size_t order, FixpointOptions opts = {}) {
    Series<R> current(order);
    std::size_t iterations = 0;
    for (;;) {
        Series<R> next = phi.apply(current);
        require_same_order(next, current);
        if (next == current) break;
        if (iterations == order + 1) {
            throw NotContraction(phi.name + ": not a contraction (no fixed point after " +
                                 std::to_string(iterations) + " iterations)");
        }
        // After `iterations` applications, coefficients below `iterations` are final.
        for (std::size_t n = 0; n < iterations && n <= order; ++n) {
            if (!(next[n] == current[n])) {
                throw NotContraction(phi.name + ": not a contraction (coefficient " + std::to_string(n) +
                                     " moved at iteration " + std::to_string(iterations + 1) + ")");
            }
        }
        current = std::move(next);
        ++iterations;
    }

    if (opts.check_contraction) {
        const auto one = RingTraits<R>::from_integer(1);
        for (std::size_t n = 0; n <= order; ++n) {
            const Series<R> moved = phi.apply(current.with_coeff(n, current[n] + one));
            for (std::size_t i = 0; i <= n; ++i) {
                if (!(moved[i] == current[i])) {
                    throw NotContraction(phi.name + ": not a contraction (output " + std::to_string(i) +
                                         " depends on input " + std::to_string(n) + ")");
                }
            }
        }
    }
    return {std::move(current), iterations, true};
}

/// p_k(A) = sum_{j=1}^{k} C(k,j) A^{j-1}, by Horner's rule.
template <CoefficientRing R = Rational>
Series<R> pk_of_series(long k, const Series<R>& a) {
    if (k < 1) throw std::domain_error("p_k requires k >= 1");
    using T = RingTraits<R>;
    const std::size_t N = a.order();
    Series<R> s = Series<R>::constant(T::from_integer(binomial(k, k)), N);
    for (long j = k - 1; j >= 1; --j) {
        s = add(mul(s, a), Series<R>::constant(T::from_integer(binomial(k, j)), N));
    }
    return s;
}

/// Phi(A) = sum_{n>=1} p_k(A)^{n-1} x^n/n!.
template <CoefficientRing R = Rational>
PhiSpec<R> am_phi(long k) {
    if (k < 1) throw std::domain_error("am_phi requires k >= 1");
    return {"am-phi(k=" + std::to_string(k) + ")", [k](const Series<R>& a) {
                const std::size_t N = a.order();
                const Series<R> p = pk_of_series<R>(k, a);
                Series<R> result(N);
                Series<R> power = Series<R>::one(N);
                for (std::size_t n = 1; n <= N; ++n) {
                    result = add(result, mul(power, Series<R>::basis(n, N)));
                    if (n < N) power = mul(power, p);
                }
                return result;
            }};
}

/// Solution A of (1+A)^k = exp(x p_k(A)) with A(0) = 0.
inline QSeries tree_series(long k, std::size_t order, FixpointOptions opts = {}) {
    return solve_fixed_point(am_phi<Rational>(k), order, opts).solution;
}

/// Checks (1+A)^k = exp(x p_k(A)) and, with B = 1+A,
/// B = exp(x (1 + B + ... + B^{k-1}) / k).
template <CoefficientRing R = Rational>
bool verify_exp_form(const Series<R>& a, long k) {
    using T = RingTraits<R>;
    if (!T::is_zero(a[0])) throw std::domain_error("verify_exp_form: A must have zero constant term");
    if (k < 1) throw std::domain_error("verify_exp_form requires k >= 1");
    const std::size_t N = a.order();
    const Series<R> b = add(Series<R>::one(N), a);

    Series<R> lhs = Series<R>::one(N);
    for (long i = 0; i < k; ++i) lhs = mul(lhs, b);
    const Series<R> rhs = exp_series(truncate(mul_by_x(pk_of_series<R>(k, a)), N));
    if (!(lhs == rhs)) return false;

    Series<R> geometric(N), power = Series<R>::one(N);
    for (long j = 0; j < k; ++j) {
        geometric = add(geometric, power);
        power = mul(power, b);
    }
    const Rational inv_k{Integer(1), Integer(k)};
    const Series<R> exponent = map_coeffs(truncate(mul_by_x(geometric), N), [&](const R& v) -> R { return v * inv_k; });
    return b == exp_series(exponent);
}

/// Checks 1+A = exp((x/2)(2+A)).
template <CoefficientRing R = Rational>
bool verify_postnikov_form(const Series<R>& a) {
    using T = RingTraits<R>;
    const std::size_t N = a.order();
    const Series<R> two_plus_a = add(Series<R>::constant(T::from_integer(2), N), a);
    const Rational half{Integer(1), Integer(2)};
    const Series<R> exponent = map_coeffs(truncate(mul_by_x(two_plus_a), N), [&](const R& v) -> R { return v * half; });
    return add(Series<R>::one(N), a) == exp_series(exponent);
}

}  // namespace amgf
