#include "amgf/am.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace amgf {

namespace {

void require_nonzero_k(long k) {
    if (k == 0) throw std::domain_error("k must be nonzero");
}

QSeries exp_minus_one(const Rational& h, std::size_t order) {
    return sub(exp_line(h, order), QSeries::one(order));
}

/// 1 + x as a series.
QSeries one_plus_x(std::size_t order) { return add(QSeries::one(order), QSeries::x(order)); }

}  // namespace

QSeries bernoulli_numbers(std::size_t order) { return reciprocal(div_by_x(exp_minus_one(1, order + 1))); }

Rational bernoulli_poly_at(std::size_t n, const Rational& q, const QSeries& bernoulli) {
    if (bernoulli.order() < n) throw std::invalid_argument("bernoulli table too short");
    return mul(exp_line(q, n), truncate(bernoulli, n))[n];
}

Rational bernoulli_poly_at(std::size_t n, const Rational& q) { return bernoulli_poly_at(n, q, bernoulli_numbers(n)); }

QSeries m_series_gf(long h, long k, std::size_t order) {
    require_nonzero_k(k);
    const QSeries denominator = div_by_x(exp_minus_one(k, order + 1));
    return scale(Rational(k), mul(exp_minus_one(h, order), reciprocal(denominator)));
}

std::vector<Rational> m_direct_table(long h, long k, std::size_t order) {
    require_nonzero_k(k);
    const QSeries bernoulli = bernoulli_numbers(order);
    const Rational q{Integer(h), Integer(k)};
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        out.push_back(pow(Rational(k), n) * (bernoulli_poly_at(n, q, bernoulli) - bernoulli[n]));
    }
    return out;
}

Rational m_direct(std::size_t n, long h, long k) {
    require_nonzero_k(k);
    const QSeries bernoulli = bernoulli_numbers(n);
    return pow(Rational(k), n) * (bernoulli_poly_at(n, Rational(Integer(h), Integer(k)), bernoulli) - bernoulli[n]);
}

QSeries reduction_factor(long h, long k, std::size_t order) {
    require_nonzero_k(k);
    // Both generating functions are x times a series with unit constant term.
    const QSeries target = div_by_x(m_series_gf(h, k, order + 1));
    const QSeries base = div_by_x(m_series_gf(1, std::labs(k), order + 1));
    return mul(target, reciprocal(base));
}

QSeries inverse_tree_series_direct(long k, std::size_t order) {
    require_nonzero_k(k);
    const long m = std::labs(k);
    const QSeries log1p = log_series(one_plus_x(order));
    QSeries power = QSeries::one(order + 1);
    for (long i = 0; i < m; ++i) power = mul(power, one_plus_x(order + 1));
    const QSeries denominator = div_by_x(sub(power, QSeries::one(order + 1)));
    return scale(Rational(m), mul(log1p, reciprocal(denominator)));
}

QSeries a2_inverse_series(std::size_t order) {
    const QSeries two_plus_x = add(QSeries::constant(2, order), QSeries::x(order));
    return scale(Rational(2), mul(log_series(one_plus_x(order)), reciprocal(two_plus_x)));
}

std::string CertificateStep::str() const {
    std::ostringstream os;
    os << name << ": ";
    if (ok()) {
        os << "OK";
        return os.str();
    }
    os << "FAIL";
    if (!error.empty()) {
        os << " (" << error << ")";
    } else if (!integrality.integral) {
        os << " at n=" << *integrality.first_fail_index << ", value=" << *integrality.fail_value;
    } else if (mismatch_index) {
        os << " at n=" << *mismatch_index << ", value=" << *mismatch_value;
    }
    return os.str();
}

bool IntegralityCertificate::valid() const {
    if (!final_equality || steps.empty()) return false;
    for (const auto& s : steps) {
        if (!s.ok()) return false;
    }
    return true;
}

std::string IntegralityCertificate::str() const {
    std::string out;
    for (const auto& s : steps) out += s.str() + '\n';
    out += valid() ? "CERTIFIED\n" : "REFUTED\n";
    return out;
}

namespace {

/// Records integrality of `s` and, when given, equality with `expected`.
CertificateStep make_step(const char* name, const QSeries& s, const QSeries* expected = nullptr) {
    CertificateStep st;
    st.name = name;
    st.integrality = integrality_check(s);
    if (expected != nullptr) {
        for (std::size_t n = 0; n <= s.order(); ++n) {
            if (!(s[n] == (*expected)[n])) {
                st.consistent = false;
                st.mismatch_index = n;
                st.mismatch_value = s[n];
                break;
            }
        }
    }
    return st;
}

QSeries maybe_corrupt(const QSeries& s, const char* name, const CertifyOptions& opts) {
    if (!opts.inject_fault || *opts.inject_fault != name) return s;
    const std::size_t n = std::min<std::size_t>(2, s.order());
    return s.with_coeff(n, s[n] + Rational(Integer(1), Integer(2)));
}

}  // namespace

IntegralityCertificate am_certify(long h, long k, std::size_t order, const CertifyOptions& opts) {
    require_nonzero_k(k);
    const long m = std::labs(k);
    IntegralityCertificate cert;
    cert.h = h;
    cert.k = k;
    cert.order = order;
    auto& steps = cert.steps;

    auto guarded = [&](const char* name, auto&& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            CertificateStep st;
            st.name = name;
            st.error = ex.what();
            steps.push_back(std::move(st));
        }
    };

    QSeries q(order), a(order), inverse(order), g(order);
    guarded(step::reduction_factor, [&] {
        q = maybe_corrupt(reduction_factor(h, k, order), step::reduction_factor, opts);
        steps.push_back(make_step(step::reduction_factor, q));
    });
    guarded(step::tree_series, [&] {
        a = maybe_corrupt(tree_series(m, order), step::tree_series, opts);
        auto st = make_step(step::tree_series, a);
        st.consistent = verify_exp_form(a, m);
        steps.push_back(std::move(st));
    });
    guarded(step::comp_inverse, [&] {
        inverse = maybe_corrupt(comp_inverse(a), step::comp_inverse, opts);
        const QSeries direct = inverse_tree_series_direct(m, order);
        steps.push_back(make_step(step::comp_inverse, inverse, &direct));
    });
    guarded(step::subst_exp, [&] {
        g = maybe_corrupt(subst_exp_minus_one(inverse), step::subst_exp, opts);
        const QSeries gf = m_series_gf(1, m, order);
        steps.push_back(make_step(step::subst_exp, g, &gf));
    });
    guarded(step::final_equality, [&] {
        const QSeries gf = maybe_corrupt(m_series_gf(h, k, order), step::final_equality, opts);
        const QSeries product = mul(q, g);
        auto st = make_step(step::final_equality, gf, &product);
        if (st.consistent) {
            const auto direct = m_direct_table(h, k, order);
            for (std::size_t n = 0; n <= order; ++n) {
                if (!(gf[n] == direct[n])) {
                    st.consistent = false;
                    st.mismatch_index = n;
                    st.mismatch_value = gf[n];
                    break;
                }
            }
        }
        steps.push_back(std::move(st));
    });
    cert.final_equality = steps.back().name == step::final_equality && steps.back().ok();
    return cert;
}

}  // namespace amgf
