#include "amgf/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace amgf {

namespace {

constexpr std::array<const char*, 4> kVarNames{"a1", "a2", "b1", "b2"};

long degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool divides(const Exponent& d, const Exponent& e) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (d[i] > e[i]) return false;
    }
    return true;
}

Exponent operator+(const Exponent& x, const Exponent& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

Exponent operator-(const Exponent& x, const Exponent& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

std::string render_monomial(const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[i];
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::monomial(const Rational& c, const Exponent& e) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    Exponent e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(1, e);
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponent{} && terms_.begin()->second.is_one();
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational{} : it->second;
}

bool MultiPoly::is_integral() const {
    for (const auto& [e, c] : terms_) {
        if (!c.is_integer()) return false;
    }
    return true;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

bool MultiPoly::is_homogeneous(long d) const {
    for (const auto& [e, c] : terms_) {
        if (degree_of(e) != d) return false;
    }
    return true;
}

Rational MultiPoly::eval(const Assignment& v) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] != 0) t *= pow(v[i], e[i]);
        }
        sum += t;
    }
    return sum;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(ea + eb, ca);
            if (inserted) {
                it->second *= cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const std::string mono = render_monomial(e);
        if (mono.empty()) {
            os << mag;
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag << '*' << mono;
        }
    }
    return os.str();
}

NotDivisible::NotDivisible(MultiPoly remainder)
    : std::domain_error("not divisible, remainder " + remainder.str()), remainder_(std::move(remainder)) {}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) {
        throw std::domain_error("division by zero");
    }
    const auto& [lead_e, lead_c] = *q.terms().begin();
    if (q.size() == 1 && lead_e == Exponent{}) {
        return p * (Rational(1) / lead_c);
    }
    MultiPoly quotient, remainder, rest = p;
    while (!rest.is_zero()) {
        const auto [e, c] = *rest.terms().begin();
        if (divides(lead_e, e)) {
            MultiPoly t = MultiPoly::monomial(c / lead_c, e - lead_e);
            quotient += t;
            rest -= t * q;
        } else {
            MultiPoly t = MultiPoly::monomial(c, e);
            remainder += t;
            rest -= t;
        }
    }
    if (!remainder.is_zero()) {
        throw NotDivisible(std::move(remainder));
    }
    return quotient;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace amgf
