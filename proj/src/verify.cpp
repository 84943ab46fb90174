#include "amgf/verify.hpp"

#include "amgf/am.hpp"
#include "amgf/combinat.hpp"
#include "amgf/drake.hpp"
#include "amgf/fixpoint.hpp"
#include "amgf/series.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace amgf {

namespace {

struct Check {
    const char* id;
    const char* module;
    // Returns an empty string on success, otherwise what went wrong.
    std::function<std::string(bool quick, bool fault)> run;
};

template <typename... Parts>
std::string describe(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string theorem_sweep(bool quick, bool fault) {
    const long range = quick ? 4 : 8;
    const std::size_t order = quick ? 16 : 32;
    for (long h = -range; h <= range; ++h) {
        for (long k = -range; k <= range; ++k) {
            if (k == 0) continue;
            const QSeries gf = m_series_gf(h, k, order);
            auto direct = m_direct_table(h, k, order);
            if (fault && h == 1 && k == 2) direct[3] += 1;
            for (std::size_t n = 0; n <= order; ++n) {
                if (!(gf[n] == direct[n])) {
                    return describe("M_", n, "(", h, ",", k, "): gf ", gf[n], " != direct ", direct[n]);
                }
                if (!gf[n].is_integer()) return describe("M_", n, "(", h, ",", k, ") = ", gf[n], " not integral");
            }
        }
    }
    return {};
}

std::string reduction_theorem(bool quick, bool fault) {
    const long range = quick ? 4 : 8;
    const std::size_t order = quick ? 16 : 32;
    for (long h = -range; h <= range; ++h) {
        for (long k = -range; k <= range; ++k) {
            if (k == 0) continue;
            QSeries q = reduction_factor(h, k, order);
            if (fault && h == 2 && k == 1) q = q.with_coeff(1, q[1] + 1);
            if (const auto rep = integrality_check(q); !rep.integral) {
                return describe("Q(", h, ",", k, ") not integral at n=", *rep.first_fail_index);
            }
            if (!(mul(q, m_series_gf(1, std::labs(k), order)) == m_series_gf(h, k, order))) {
                return describe("Q(", h, ",", k, ") * gf(1,", std::labs(k), ") != gf(", h, ",", k, ")");
            }
        }
    }
    return {};
}

/// Independent Genocchi oracle: G with (e^x + 1) G = 2x, solved triangularly.
std::vector<Rational> genocchi_by_division(std::size_t order) {
    std::vector<Rational> g(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        // (e^x + 1) has EGF coefficients 2, 1, 1, ...
        Rational rest;
        for (std::size_t j = 0; j < n; ++j) rest += Rational(binomial(n, j)) * g[j];
        const Rational target = n == 1 ? Rational(2) : Rational(0);
        g[n] = (target - rest) / Rational(2);
    }
    return g;
}

std::string genocchi_tri_route(bool quick, bool fault) {
    const std::size_t order = quick ? 8 : 16;
    const QSeries gf = m_series_gf(1, 2, order);
    QSeries via_tree = subst_exp_minus_one(comp_inverse(tree_series(2, order)));
    if (fault) via_tree = via_tree.with_coeff(4, via_tree[4] + 1);
    const QSeries via_log = subst_exp_minus_one(a2_inverse_series(order));
    if (!(gf == via_tree)) return "generating function differs from the tree-series route";
    if (!(gf == via_log)) return "generating function differs from the 2log(1+x)/(2+x) route";
    const auto oracle = genocchi_by_division(order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (!(gf[n] == oracle[n])) return describe("Genocchi oracle mismatch at n=", n);
    }
    const long first[] = {0, 1, -1, 0, 1, 0, -3, 0, 17};
    for (std::size_t n = 0; n < 9 && n <= order; ++n) {
        if (!(gf[n] == Rational(first[n]))) return describe("Genocchi value mismatch at n=", n);
    }
    return {};
}

std::string tree_oracle(bool quick, bool fault) {
    const std::size_t max_n = quick ? 5 : 7;
    const QSeries a = tree_series(2, max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        Integer count = count_alternating_trees(static_cast<unsigned>(n + 1));
        if (fault && n == 3) count += 1;
        if (!(a[n] == Rational(count))) {
            return describe("a_", n, " = ", a[n], " but ", count, " alternating trees on ", n + 1, " vertices");
        }
    }
    return {};
}

std::string inverse_consistency(bool quick, bool fault) {
    const std::size_t order = quick ? 12 : 24;
    for (long k = 1; k <= 6; ++k) {
        QSeries inverse = comp_inverse(tree_series(k, order));
        if (fault && k == 3) inverse = inverse.with_coeff(5, inverse[5] + 1);
        const QSeries direct = inverse_tree_series_direct(k, order);
        if (!(inverse == direct)) return describe("k=", k, ": inverse of tree series != kx log(1+x)/((1+x)^k-1)");
        if (!integrality_check(inverse).integral) return describe("k=", k, ": inverse not integral");
    }
    return {};
}

std::string footnote_formula(bool quick, bool fault) {
    const std::size_t order = quick ? 10 : 20;
    const QSeries inverse = comp_inverse(tree_series(2, order));
    for (std::size_t n = 1; n <= order; ++n) {
        Integer expected = inv_a2_coefficient(n);
        if (fault && n == 6) expected += 1;
        if (!(inverse[n] == Rational(expected))) return describe("n=", n, ": ", inverse[n], " != ", expected);
    }
    return {};
}

std::string drake_closed_form_check(bool quick, bool fault) {
    const std::size_t order = quick ? 4 : 8;
    PolySeries g = drake_inverse_series(order);
    if (fault) g = g.with_coeff(2, g[2] + MultiPoly::variable(Var::a1));
    for (std::size_t n = 1; n <= order; ++n) {
        const auto degree = static_cast<unsigned>(n - 1);
        if (!g[n].is_homogeneous(degree)) return describe("coefficient ", n, " is not homogeneous of degree ", degree);
        const auto tuples = drake_exponents(degree);
        if (g[n].size() != tuples.size()) return describe("coefficient ", n, " has extra or missing monomials");
        for (const auto& e : tuples) {
            if (!(g[n].coefficient(e.exponent()) == drake_closed_form(e))) {
                return describe("closed form mismatch at n=", n, " (", e.a1, ",", e.a2, ",", e.d1, ",", e.d2, ")");
            }
        }
    }
    const QSeries special = specialize(g, k2_specialization());
    for (std::size_t n = 1; n <= order; ++n) {
        if (!(special[n] == Rational(inv_a2_coefficient(n)))) return describe("k=2 specialization differs at n=", n);
    }
    return {};
}

std::string drake_fixed_point(bool quick, bool fault) {
    const std::size_t order = quick ? 4 : 8;
    PolySeries f = solve_drake_f(order);
    if (fault) f = f.with_coeff(3, f[3] + MultiPoly(1));
    if (const auto rep = integrality_check(f); !rep.integral) {
        return describe("F not integral at n=", *rep.first_fail_index);
    }
    if (!verify_drake_functional_eq(f)) return "F fails the functional equation";
    if (!(compose(drake_inverse_series(order), f) == PolySeries::x(order))) return "inverse(F) != x";
    return {};
}

std::string beta_identity(bool quick, bool fault) {
    const std::size_t degree = quick ? 5 : 10;
    if (!beta_series_identity(degree)) return describe("series identity fails at total degree ", degree);
    const std::size_t max_n = quick ? 6 : 12;
    auto diag = beta_diagonal_egf(max_n - 1);
    if (fault) diag[2] += 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (diag[n] != inv_a2_coefficient(n)) return describe("u=v=-x specialization differs at n=", n);
    }
    return {};
}

std::string hurwitz_closure(bool quick, bool fault) {
    const int instances = quick ? 100 : 200;
    const std::size_t order = quick ? 6 : 12;
    std::mt19937_64 rng(20231023);
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto random_series = [&](bool zero_constant, bool unit_linear) {
        std::vector<Rational> c(order + 1);
        for (auto& v : c) v = coeff(rng);
        if (zero_constant) c[0] = 0;
        if (unit_linear) c[1] = 1;
        return QSeries(std::move(c));
    };
    for (int i = 0; i < instances; ++i) {
        QSeries p = mul(random_series(false, false), random_series(false, false));
        if (fault && i == 7) p = p.with_coeff(2, p[2] + Rational(Integer(1), Integer(3)));
        if (!integrality_check(p).integral) return describe("product not integral, instance ", i);
        if (!integrality_check(compose(random_series(false, false), random_series(true, false))).integral) {
            return describe("composition not integral, instance ", i);
        }
        if (!integrality_check(comp_inverse(random_series(true, true))).integral) {
            return describe("compositional inverse not integral, instance ", i);
        }
    }
    return {};
}

const std::vector<Check>& checks() {
    static const std::vector<Check> all{
        {"theorem-sweep", "am", theorem_sweep},
        {"genocchi-tri-route", "am", genocchi_tri_route},
        {"tree-oracle", "combinat", tree_oracle},
        {"inverse-consistency", "fixpoint", inverse_consistency},
        {"footnote-formula", "drake", footnote_formula},
        {"drake-closed-form", "drake", drake_closed_form_check},
        {"drake-fixed-point", "drake", drake_fixed_point},
        {"beta-identity", "drake", beta_identity},
        {"reduction-theorem", "am", reduction_theorem},
        {"hurwitz-closure", "egf", hurwitz_closure},
    };
    return all;
}

CheckResult run_one(const Check& c, const VerifyOptions& opts) {
    CheckResult r;
    r.id = c.id;
    r.module = c.module;
    const bool fault = opts.inject_fault && *opts.inject_fault == c.id;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = c.run(opts.quick, fault);
        r.passed = r.detail.empty();
    } catch (const std::exception& ex) {
        r.detail = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<std::string> verify_check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : checks()) ids.emplace_back(c.id);
    return ids;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<const Check*> selected;
    for (const auto& c : checks()) {
        if (!opts.only || *opts.only == c.id) selected.push_back(&c);
    }
    if (selected.empty()) throw std::invalid_argument("no check named " + opts.only.value_or(""));
    std::vector<CheckResult> results;
    if (!opts.parallel) {
        for (const Check* c : selected) results.push_back(run_one(*c, opts));
        return results;
    }
    std::vector<std::future<CheckResult>> pending;
    for (const Check* c : selected) pending.push_back(std::async(std::launch::async, run_one, std::cref(*c), std::cref(opts)));
    for (auto& p : pending) results.push_back(p.get());
    return results;
}

std::string render(const CheckResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    std::string line = std::string(r.passed ? "PASS " : "FAIL ") + r.module + "/" + r.id + " (" + secs + "s)";
    if (!r.detail.empty()) line += ": " + r.detail;
    return line;
}

}  // namespace amgf
