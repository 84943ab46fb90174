#include "amgf/drake.hpp"

#include <string>

namespace amgf {

namespace {

MultiPoly var(Var v) { return MultiPoly::variable(v); }

PolySeries poly_constant(const MultiPoly& c, std::size_t order) { return PolySeries::constant(c, order); }

/// 1 + c F
PolySeries one_plus(const MultiPoly& c, const PolySeries& f) {
    return add(PolySeries::one(f.order()), scale(c, f));
}

}  // namespace

std::vector<DrakeExponent> drake_exponents(unsigned degree) {
    std::vector<DrakeExponent> out;
    for (unsigned a1 = 0; a1 <= degree; ++a1) {
        for (unsigned a2 = 0; a1 + a2 <= degree; ++a2) {
            for (unsigned d1 = 0; a1 + a2 + d1 <= degree; ++d1) {
                out.push_back({a1, a2, d1, degree - a1 - a2 - d1});
            }
        }
    }
    return out;
}

Rational drake_closed_form(const DrakeExponent& e) {
    const unsigned n = e.index();
    Integer v = factorial(e.a1 + e.a2) * factorial(e.d1 + e.d2) * binomial(e.a1 + e.d1, e.a1) *
                binomial(e.a2 + e.d2, e.a2);
    if ((n - 1) % 2 == 1) v = -v;
    return Rational(v);
}

MultiPoly drake_slope() { return var(Var::a1) * var(Var::b2) - var(Var::a2) * var(Var::b1); }

MultiPoly drake_offset() { return var(Var::a1) - var(Var::a2) - var(Var::b1) + var(Var::b2); }

PolySeries drake_inverse_series(std::size_t order) {
    const MultiPoly slope = drake_slope();
    const MultiPoly offset = drake_offset();
    // Univariate template log(1+x); log(1+s x) has coefficients l_n s^n.
    const QSeries log1p = log_series(add(QSeries::one(order), QSeries::x(order)));

    std::vector<MultiPoly> g(order + 1);
    std::array<MultiPoly, 4> powers{1, 1, 1, 1};
    for (std::size_t n = 1; n <= order; ++n) {
        powers[0] *= var(Var::a1);
        powers[1] *= var(Var::a2);
        powers[2] *= var(Var::b1);
        powers[3] *= var(Var::b2);
        const MultiPoly log_coeff = (powers[0] + powers[3] - powers[1] - powers[2]) * log1p[n];
        // (D G)_n = offset * G_n + n * slope * G_{n-1}
        const MultiPoly rhs = log_coeff - slope * g[n - 1] * Rational(static_cast<long>(n));
        try {
            g[n] = exact_div(rhs, offset);
        } catch (const NotDivisible& ex) {
            throw DrakeDivisibilityError("Drake divisibility violated at n=" + std::to_string(n) +
                                         ", remainder " + ex.remainder().str());
        }
    }
    return PolySeries(std::move(g));
}

PolySeries solve_drake_f(std::size_t order, FixpointOptions opts) {
    const MultiPoly slope = drake_slope();
    const MultiPoly offset = drake_offset();
    PhiSpec<MultiPoly> phi{"drake-phi", [slope, offset](const PolySeries& f) {
                               const std::size_t N = f.order();
                               const PolySeries base = add(scale(slope, f), poly_constant(offset, N));
                               PolySeries sum(N), power = PolySeries::one(N);
                               for (std::size_t n = 1; n <= N; ++n) {
                                   sum = add(sum, mul(power, PolySeries::basis(n, N)));
                                   if (n < N) power = mul(power, base);
                               }
                               return mul(mul(one_plus(var(Var::b1), f), one_plus(var(Var::a2), f)), sum);
                           }};
    return solve_fixed_point(phi, order, opts).solution;
}

bool verify_drake_functional_eq(const PolySeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("verify_drake_functional_eq: F must have zero constant term");
    const std::size_t N = f.order();
    const PolySeries lhs = mul(one_plus(var(Var::a1), f), one_plus(var(Var::b2), f));
    const PolySeries exponent = truncate(mul_by_x(add(scale(drake_slope(), f), poly_constant(drake_offset(), N))), N);
    const PolySeries rhs = mul(mul(one_plus(var(Var::a2), f), one_plus(var(Var::b1), f)), exp_series(exponent));
    return lhs == rhs;
}

Assignment k2_specialization() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

QSeries specialize(const PolySeries& f, const Assignment& v) {
    return map_coeffs(f, [&](const MultiPoly& p) { return p.eval(v); });
}

Integer inv_a2_coefficient(std::size_t n) {
    if (n < 1) throw std::domain_error("inv_a2_coefficient requires n >= 1");
    Integer sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += factorial(i) * factorial(n - 1 - i);
    return (n - 1) % 2 == 0 ? sum : Integer(-sum);
}

BivariateSeries::BivariateSeries(std::size_t max_degree) : max_degree_(max_degree), c_(max_degree + 1) {
    for (std::size_t i = 0; i <= max_degree; ++i) c_[i].resize(max_degree + 1 - i);
}

const Rational& BivariateSeries::at(std::size_t i, std::size_t j) const {
    static const Rational zero;
    if (i + j > max_degree_) return zero;
    return c_[i][j];
}

void BivariateSeries::set(std::size_t i, std::size_t j, Rational value) {
    if (i + j > max_degree_) throw std::out_of_range("bivariate coefficient beyond truncation");
    c_[i][j] = std::move(value);
}

BivariateSeries beta_lhs(std::size_t max_degree) {
    BivariateSeries s(max_degree);
    for (std::size_t i = 0; i <= max_degree; ++i) {
        for (std::size_t j = 0; i + j <= max_degree; ++j) {
            s.set(i, j, Rational(factorial(i) * factorial(j), factorial(i + j + 1)));
        }
    }
    return s;
}

BivariateSeries beta_rhs(std::size_t max_degree) {
    // Numerator log(1-u) + log(1-v): -u^d/d and -v^d/d in degree d.
    auto numerator = [](std::size_t d, std::size_t i) -> Rational {
        if (d == 0) return {};
        if (i == d || i == 0) return Rational(Integer(-1), Integer(d));
        return {};
    };
    BivariateSeries r(max_degree);
    // Degree d+1 of (uv - u - v) R: uv R_{d-1} - (u+v) R_d = N_{d+1}, so
    // (u+v) R_d = uv R_{d-1} - N_{d+1}. Coefficients are indexed by the u-power.
    for (std::size_t d = 0; d <= max_degree; ++d) {
        std::vector<Rational> t(d + 2);
        for (std::size_t i = 0; i <= d + 1; ++i) {
            Rational v = -numerator(d + 1, i);
            if (d >= 1 && i >= 1 && i <= d) v += r.at(i - 1, d - i);
            t[i] = std::move(v);
        }
        std::vector<Rational> q(d + 1);
        q[0] = t[0];
        for (std::size_t i = 1; i <= d; ++i) q[i] = t[i] - q[i - 1];
        if (!(q[d] == t[d + 1])) {
            throw std::domain_error("beta identity: division by u+v left a remainder in degree " + std::to_string(d));
        }
        for (std::size_t i = 0; i <= d; ++i) r.set(i, d - i, q[i]);
    }
    return r;
}

bool beta_series_identity(std::size_t max_degree) {
    if (max_degree < 1) throw std::domain_error("beta_series_identity requires M >= 1");
    return beta_lhs(max_degree) == beta_rhs(max_degree);
}

std::vector<Integer> beta_diagonal_egf(std::size_t max_degree) {
    const BivariateSeries r = beta_rhs(max_degree);
    std::vector<Integer> out(max_degree + 2);
    for (std::size_t d = 0; d <= max_degree; ++d) {
        Rational diag;
        for (std::size_t i = 0; i <= d; ++i) diag += r.at(i, d - i);
        if (d % 2 == 1) diag = -diag;
        // x * x^d sits at n = d+1; the EGF coefficient carries (d+1)!.
        const Rational egf = diag * Rational(factorial(d + 1));
        if (!egf.is_integer()) throw std::domain_error("beta diagonal coefficient is not an integer");
        out[d + 1] = egf.numerator();
    }
    return out;
}

}  // namespace amgf
