// Bernoulli polynomials and the numbers M_n(h,k) = k^n (B_n(h/k) - B_n),
// computed both from their generating function and directly, plus the
// integrality certificate that walks the tree-series proof chain.
#pragma once

#include "amgf/fixpoint.hpp"
#include "amgf/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amgf {

struct AmParams {
    long h = 1;
    long k = 1;
    std::size_t order = 0;
};

/// B_0..B_N from x/(e^x - 1).
QSeries bernoulli_numbers(std::size_t order);

/// B_n(q): coefficient n of e^{qx} * x/(e^x - 1).
Rational bernoulli_poly_at(std::size_t n, const Rational& q);
/// Same, reusing precomputed Bernoulli numbers of order >= n.
Rational bernoulli_poly_at(std::size_t n, const Rational& q, const QSeries& bernoulli);

/// k x (e^{hx} - 1)/(e^{kx} - 1) to order N; coefficient n is M_n(h,k).
/// Throws std::domain_error for k = 0.
QSeries m_series_gf(long h, long k, std::size_t order);

/// k^n (B_n(h/k) - B_n). Throws std::domain_error for k = 0.
Rational m_direct(std::size_t n, long h, long k);
/// m_direct for n = 0..N with one Bernoulli table.
std::vector<Rational> m_direct_table(long h, long k, std::size_t order);

/// Q with Q * gf(1,|k|) = gf(h,k), order N.
QSeries reduction_factor(long h, long k, std::size_t order);

/// |k| x log(1+x) / ((1+x)^|k| - 1), expanded directly. k != 0.
QSeries inverse_tree_series_direct(long k, std::size_t order);

/// 2 log(1+x) / (2 + x).
QSeries a2_inverse_series(std::size_t order);

struct CertificateStep {
    std::string name;
    IntegralityReport<Rational> integrality;
    // Cross-check against the independent route for this step.
    bool consistent = true;
    std::optional<std::size_t> mismatch_index;
    std::optional<Rational> mismatch_value;
    std::string error;

    bool ok() const { return integrality.integral && consistent && error.empty(); }
    /// "name: OK" or "name: FAIL at n=..., value=...".
    std::string str() const;
};

struct IntegralityCertificate {
    long h = 0;
    long k = 0;
    std::size_t order = 0;
    std::vector<CertificateStep> steps;
    bool final_equality = false;

    bool valid() const;
    /// One line per step, then CERTIFIED or REFUTED.
    std::string str() const;
};

namespace step {
inline constexpr const char* reduction_factor = "reduction-factor";
inline constexpr const char* tree_series = "tree-series";
inline constexpr const char* comp_inverse = "comp-inverse";
inline constexpr const char* subst_exp = "subst-exp";
inline constexpr const char* final_equality = "final-equality";
}  // namespace step

struct CertifyOptions {
    /// Corrupt the series produced by the named step (test hook).
    std::optional<std::string> inject_fault;
};

/// Runs reduction-factor, tree-series, comp-inverse, subst-exp and
/// final-equality for (h, k) and records each outcome.
IntegralityCertificate am_certify(long h, long k, std::size_t order, const CertifyOptions& opts = {});

}  // namespace amgf
