// The four-parameter series F in a1, a2, b1, b2 and its compositional
// inverse log(((1+a1 x)(1+b2 x))/((1+a2 x)(1+b1 x))) / ((a1 b2 - a2 b1) x + a1 - a2 - b1 + b2).
#pragma once

#include "amgf/fixpoint.hpp"
#include "amgf/multipoly.hpp"
#include "amgf/series.hpp"

#include <stdexcept>
#include <vector>

namespace amgf {

/// Exponents of a1^a1 a2^a2 b1^d1 b2^d2; the monomial lives at index n = degree + 1.
struct DrakeExponent {
    unsigned a1 = 0;
    unsigned a2 = 0;
    unsigned d1 = 0;
    unsigned d2 = 0;

    unsigned index() const { return a1 + a2 + d1 + d2 + 1; }
    Exponent exponent() const { return {a1, a2, d1, d2}; }
};

/// All exponent tuples with a1 + a2 + d1 + d2 = degree.
std::vector<DrakeExponent> drake_exponents(unsigned degree);

class DrakeDivisibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (-1)^{n-1} (a1+a2)! (d1+d2)! C(a1+d1, a1) C(a2+d2, a2).
Rational drake_closed_form(const DrakeExponent& e);

/// a1 b2 - a2 b1
MultiPoly drake_slope();
/// a1 - a2 - b1 + b2
MultiPoly drake_offset();

/// The inverse series, solved order by order from D(x) G = L(x) with an
/// exact polynomial division by a1 - a2 - b1 + b2 at every step. Throws
/// DrakeDivisibilityError on a nonzero remainder.
PolySeries drake_inverse_series(std::size_t order);

/// Fixed point of F = (1 + b1 F)(1 + a2 F) sum_{n>=1} (c F + e)^{n-1} x^n/n!.
PolySeries solve_drake_f(std::size_t order, FixpointOptions opts = {});

/// (1 + a1 F)(1 + b2 F) = (1 + a2 F)(1 + b1 F) exp(x (c F + e)) to the order of F.
bool verify_drake_functional_eq(const PolySeries& f);

/// a1 = b2 = 1, a2 = b1 = 0.
Assignment k2_specialization();

QSeries specialize(const PolySeries& f, const Assignment& v);

/// (-1)^{n-1} sum_{i=0}^{n-1} i! (n-1-i)!. Requires n >= 1.
Integer inv_a2_coefficient(std::size_t n);

/// Truncated ordinary power series in u, v with total degree <= M.
class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t max_degree);

    std::size_t max_degree() const { return max_degree_; }
    /// Coefficient of u^i v^j; zero beyond the truncation.
    const Rational& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Rational value);

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::size_t max_degree_;
    std::vector<std::vector<Rational>> c_;  // c_[i][j], i + j <= max_degree
};

/// sum_{i,j} i! j! / (i+j+1)! u^i v^j
BivariateSeries beta_lhs(std::size_t max_degree);

/// (log(1-u) + log(1-v)) / (uv - u - v), divided out degree by degree.
/// Throws std::domain_error if a homogeneous division leaves a remainder.
BivariateSeries beta_rhs(std::size_t max_degree);

/// Both sides agree up to total degree M. Requires M >= 1.
bool beta_series_identity(std::size_t max_degree);

/// EGF coefficients n = 0..M+1 of x * R(-x, -x), R the right-hand side above.
std::vector<Integer> beta_diagonal_egf(std::size_t max_degree);

}  // namespace amgf
