// Truncated exponential generating functions over a coefficient ring.
//
// A Series<R> of order N holds c_0..c_N and stands for sum c_n x^n/n!.
// Coefficients are stored EGF-normalized, so a series is Hurwitz exactly
// when every c_n is integral. Binary operations require equal orders and
// never truncate silently.
#pragma once

#include "amgf/rational.hpp"
#include "amgf/ring.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amgf {

namespace detail {

/// Row n of Pascal's triangle, cached per thread.
inline const std::vector<Integer>& pascal_row(std::size_t n) {
    thread_local std::vector<std::vector<Integer>> rows{{Integer(1)}};
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<Integer> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t j = 1; j < prev.size(); ++j) next[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(next));
    }
    return rows[n];
}

}  // namespace detail

template <CoefficientRing R>
class Series {
public:
    using Traits = RingTraits<R>;

    /// Zero series of the given order.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    /// Series whose order is coeffs.size() - 1.
    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    static Series constant(const R& c, std::size_t order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series one(std::size_t order) { return constant(Traits::from_integer(1), order); }

    /// x^n/n!, i.e. the series whose only nonzero coefficient is c_n = 1.
    static Series basis(std::size_t n, std::size_t order) {
        Series s(order);
        if (n <= order) s.coeffs_[n] = Traits::from_integer(1);
        return s;
    }

    static Series x(std::size_t order) { return basis(1, order); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Copy with coefficient n replaced.
    Series with_coeff(std::size_t n, R value) const {
        Series s = *this;
        s.coeffs_.at(n) = std::move(value);
        return s;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (!Traits::is_zero(c)) return false;
        }
        return true;
    }

    friend bool operator==(const Series&, const Series&) = default;

    /// One "n<TAB>c_n" line per coefficient.
    std::string str() const {
        std::ostringstream os;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) os << n << '\t' << Traits::render(coeffs_[n]) << '\n';
        return os.str();
    }

private:
    std::vector<R> coeffs_;
};

using QSeries = Series<Rational>;
using PolySeries = Series<MultiPoly>;

template <CoefficientRing R>
void require_same_order(const Series<R>& f, const Series<R>& g) {
    if (f.order() != g.order()) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()));
    }
}

/// Coefficientwise image under a ring map (e.g. specialization).
template <CoefficientRing R, typename Fn>
auto map_coeffs(const Series<R>& f, Fn&& fn) {
    using S = std::decay_t<decltype(fn(f[0]))>;
    std::vector<S> c;
    c.reserve(f.order() + 1);
    for (const auto& v : f.coeffs()) c.push_back(fn(v));
    return Series<S>(std::move(c));
}

/// e^{hx}: c_n = h^n.
template <CoefficientRing R = Rational>
Series<R> exp_line(const Rational& h, std::size_t order) {
    std::vector<R> c;
    c.reserve(order + 1);
    Rational p = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(RingTraits<R>::from_rational(p));
        p *= h;
    }
    return Series<R>(std::move(c));
}

template <CoefficientRing R>
Series<R> truncate(const Series<R>& f, std::size_t order) {
    if (order > f.order()) throw std::invalid_argument("truncate: cannot raise the order");
    return Series<R>(std::vector<R>(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

template <CoefficientRing R>
Series<R> add(const Series<R>& f, const Series<R>& g) {
    require_same_order(f, g);
    std::vector<R> c(f.coeffs());
    for (std::size_t n = 0; n <= f.order(); ++n) c[n] = c[n] + g[n];
    return Series<R>(std::move(c));
}

template <CoefficientRing R>
Series<R> sub(const Series<R>& f, const Series<R>& g) {
    require_same_order(f, g);
    std::vector<R> c(f.coeffs());
    for (std::size_t n = 0; n <= f.order(); ++n) c[n] = c[n] - g[n];
    return Series<R>(std::move(c));
}

template <CoefficientRing R>
Series<R> scale(const R& k, const Series<R>& f) {
    std::vector<R> c(f.coeffs());
    for (auto& v : c) v = k * v;
    return Series<R>(std::move(c));
}

template <CoefficientRing R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) { return add(f, g); }
template <CoefficientRing R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) { return sub(f, g); }

/// Binomial convolution: (fg)_n = sum_j C(n,j) f_j g_{n-j}.
template <CoefficientRing R>
Series<R> mul(const Series<R>& f, const Series<R>& g) {
    require_same_order(f, g);
    using T = RingTraits<R>;
    const std::size_t N = f.order();
    std::vector<R> c(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& row = detail::pascal_row(n);
        R acc;
        for (std::size_t j = 0; j <= n; ++j) {
            if (T::is_zero(f[j]) || T::is_zero(g[n - j])) continue;
            R term = f[j] * g[n - j];
            if (row[j] != 1) term = term * Rational(row[j]);
            acc = acc + term;
        }
        c[n] = std::move(acc);
    }
    return Series<R>(std::move(c));
}

template <CoefficientRing R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) { return mul(f, g); }

/// Multiplicative inverse by triangular back-substitution; c_0 must be a unit.
template <CoefficientRing R>
Series<R> reciprocal(const Series<R>& f) {
    using T = RingTraits<R>;
    if (!T::is_unit(f[0])) throw std::domain_error("reciprocal: constant term is not a unit");
    const R inv0 = T::inverse(f[0]);
    const std::size_t N = f.order();
    std::vector<R> g(N + 1);
    g[0] = inv0;
    for (std::size_t n = 1; n <= N; ++n) {
        const auto& row = detail::pascal_row(n);
        R acc;
        for (std::size_t j = 0; j < n; ++j) {
            if (T::is_zero(g[j]) || T::is_zero(f[n - j])) continue;
            acc = acc + g[j] * f[n - j] * Rational(row[j]);
        }
        g[n] = -(inv0 * acc);
    }
    return Series<R>(std::move(g));
}

/// f/x, of order N-1: c'_n = c_{n+1}/(n+1). Requires c_0 = 0.
template <CoefficientRing R>
Series<R> div_by_x(const Series<R>& f) {
    if (!RingTraits<R>::is_zero(f[0])) throw std::domain_error("not divisible by x");
    if (f.order() == 0) throw std::domain_error("div_by_x: series of order 0 has no terms left");
    std::vector<R> c(f.order());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f[n + 1] * Rational(Integer(1), Integer(n + 1));
    return Series<R>(std::move(c));
}

/// x*f, of order N+1: c'_n = n*c_{n-1}. Loses nothing.
template <CoefficientRing R>
Series<R> mul_by_x(const Series<R>& f) {
    std::vector<R> c(f.order() + 2);
    for (std::size_t n = 1; n < c.size(); ++n) c[n] = f[n - 1] * Rational(static_cast<long>(n));
    return Series<R>(std::move(c));
}

/// EGF derivative (coefficient shift), of order N-1.
template <CoefficientRing R>
Series<R> derivative(const Series<R>& f) {
    if (f.order() == 0) throw std::domain_error("derivative: series of order 0");
    return Series<R>(std::vector<R>(f.coeffs().begin() + 1, f.coeffs().end()));
}

/// Antiderivative with constant term 0, of order N+1.
template <CoefficientRing R>
Series<R> antiderivative(const Series<R>& f) {
    std::vector<R> c;
    c.reserve(f.order() + 2);
    c.emplace_back();
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return Series<R>(std::move(c));
}

/// f(g(x)) by accumulating f_m g^m/m!. Requires g_0 = 0.
template <CoefficientRing R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    require_same_order(f, g);
    using T = RingTraits<R>;
    if (!T::is_zero(g[0])) throw std::domain_error("compose: inner series has nonzero constant term");
    const std::size_t N = f.order();
    Series<R> result = Series<R>::constant(f[0], N);
    Series<R> power = Series<R>::one(N);  // g^m / m!
    for (std::size_t m = 1; m <= N; ++m) {
        const Rational inv_m{Integer(1), Integer(m)};
        power = map_coeffs(mul(power, g), [&](const R& v) -> R { return v * inv_m; });
        if (!T::is_zero(f[m])) result = add(result, scale(f[m], power));
    }
    return result;
}

/// g with f(g(x)) = x, solved one coefficient at a time. Requires c_0 = 0
/// and c_1 a unit.
template <CoefficientRing R>
Series<R> comp_inverse(const Series<R>& f) {
    using T = RingTraits<R>;
    if (!T::is_zero(f[0])) throw std::domain_error("comp_inverse: constant term is not zero");
    const std::size_t N = f.order();
    if (N == 0) return Series<R>(0);
    if (!T::is_unit(f[1])) throw std::domain_error("comp_inverse: linear coefficient is not a unit");
    const R inv1 = T::inverse(f[1]);
    std::vector<R> g(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        // With g_n = 0, coefficient n of f(g) is everything except f_1*g_n.
        const Series<R> partial = compose(truncate(f, n), Series<R>(std::vector<R>(g.begin(), g.begin() + n + 1)));
        R target = n == 1 ? T::from_integer(1) : R{};
        g[n] = inv1 * (target - partial[n]);
    }
    return Series<R>(std::move(g));
}

/// exp(f) from y' = f'y, y_0 = 1. Requires f_0 = 0.
template <CoefficientRing R>
Series<R> exp_series(const Series<R>& f) {
    using T = RingTraits<R>;
    if (!T::is_zero(f[0])) throw std::domain_error("exp_series: constant term is not zero");
    const std::size_t N = f.order();
    std::vector<R> y(N + 1);
    y[0] = T::from_integer(1);
    for (std::size_t n = 0; n < N; ++n) {
        const auto& row = detail::pascal_row(n);
        R acc;
        for (std::size_t j = 0; j <= n; ++j) {
            if (T::is_zero(f[j + 1]) || T::is_zero(y[n - j])) continue;
            acc = acc + f[j + 1] * y[n - j] * Rational(row[j]);
        }
        y[n + 1] = std::move(acc);
    }
    return Series<R>(std::move(y));
}

/// log(f) as the antiderivative of f'/f with constant term 0. Requires f_0 = 1.
template <CoefficientRing R>
Series<R> log_series(const Series<R>& f) {
    using T = RingTraits<R>;
    if (!T::is_one(f[0])) throw std::domain_error("log_series: constant term is not 1");
    if (f.order() == 0) return Series<R>(0);
    const Series<R> d = derivative(f);
    return antiderivative(mul(d, reciprocal(truncate(f, d.order()))));
}

/// f(e^x - 1).
template <CoefficientRing R>
Series<R> subst_exp_minus_one(const Series<R>& f) {
    const std::size_t N = f.order();
    return compose(f, sub(exp_line<R>(1, N), Series<R>::one(N)));
}

template <CoefficientRing R>
struct IntegralityReport {
    bool integral = true;
    std::optional<std::size_t> first_fail_index;
    std::optional<R> fail_value;
};

/// Smallest index whose coefficient is not integral, if any.
template <CoefficientRing R>
IntegralityReport<R> integrality_check(const Series<R>& f) {
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (!RingTraits<R>::is_integral(f[n])) return {false, n, f[n]};
    }
    return {};
}

}  // namespace amgf
