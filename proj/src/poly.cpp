#include "hyperred/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperred {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // lexicographic: larger exponent on an earlier symbol ranks higher
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly::Poly(ContextPtr ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (!hyperred::is_zero(c)) terms_.emplace(Exponents(ctx_->size(), 0), c);
}

Poly Poly::symbol(const ContextPtr& ctx, int sym_index, unsigned power) {
    Poly p(ctx);
    Exponents e(ctx->size(), 0);
    e[sym_index] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::variable(const ContextPtr& ctx, int var_1based, unsigned power) {
    return symbol(ctx, ctx->var_index(var_1based), power);
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (hyperred::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (hyperred::is_zero(it->second)) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_context(ctx_, o.ctx_);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_context(ctx_, o.ctx_);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_context(ctx_, o.ctx_);
    Poly r(ctx_);
    Exponents e(ctx_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(ctx_);
    if (hyperred::is_zero(c)) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = constant(ctx_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return terms_ == o.terms_;
}

unsigned Poly::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

const std::pair<const Exponents, Rational>& Poly::leading() const {
    return *terms_.rbegin();
}

Poly Poly::derivative(int sym_index) const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[sym_index] == 0) continue;
        Exponents d = e;
        d[sym_index] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(e[sym_index])));
    }
    return r;
}

Exponents Poly::monomial_content() const {
    Exponents m(ctx_->size(), 0);
    if (terms_.empty()) return m;
    m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Poly Poly::shift_down(const Exponents& s) const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        for (size_t i = 0; i < d.size(); ++i) d[i] -= s[i];
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

Rational Poly::content() const {
    if (terms_.empty()) return 0;
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_class gg, ll;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(ll.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        g = gg;
        l = ll;
    }
    Rational r(g, l);
    r.canonicalize();
    if (sgn(leading().second) < 0) r = -r;
    return r;
}

Poly Poly::times_monomial(const Exponents& e, const Rational& c) const {
    Poly r(ctx_);
    if (hyperred::is_zero(c)) return r;
    Exponents t(e.size());
    for (const auto& [me, mc] : terms_) {
        for (size_t i = 0; i < t.size(); ++i) t[i] = me[i] + e[i];
        r.terms_.emplace(t, mc * c);
    }
    return r;
}

bool Poly::divide_exact(const Poly& n, const Poly& d, Poly& q) {
    if (d.is_zero()) return false;
    if (n.is_zero()) {
        q = Poly(n.ctx_);
        return true;
    }
    if (d.is_constant()) {
        q = n * (Rational(1) / d.constant_value());
        return true;
    }
    if (n.total_degree() < d.total_degree()) return false;
    Poly r = n;
    Poly quo(n.ctx_);
    const Exponents& de = d.leading().first;
    const Rational& dc = d.leading().second;
    Exponents e(de.size());
    long guard = 5000;
    while (!r.is_zero()) {
        const auto& rl = r.leading();
        for (size_t i = 0; i < e.size(); ++i) {
            if (rl.first[i] < de[i]) return false;
            e[i] = rl.first[i] - de[i];
        }
        Rational cq = rl.second / dc;
        quo.add_term(e, cq);
        r = r - d.times_monomial(e, cq);
        if (--guard < 0) return false;
    }
    q = std::move(quo);
    return true;
}

Rational Poly::eval_exact(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<bool>& mask, const std::vector<Rational>& values) const {
    Poly r(ctx_);
    Exponents d(ctx_->size());
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (mask[i]) {
                d[i] = 0;
                for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
            } else {
                d[i] = e[i];
            }
        }
        r.add_term(d, t);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (sgn(c) < 0) { os << "-"; c = -c; }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        bool has_sym = false;
        std::ostringstream mono;
        for (size_t i = 0; i < it->first.size(); ++i) {
            unsigned p = it->first[i];
            if (p == 0) continue;
            if (has_sym) mono << "*";
            mono << ctx_->symbol(static_cast<int>(i)).name;
            if (p > 1) mono << "^" << p;
            has_sym = true;
        }
        if (!has_sym) {
            os << to_string(c);
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << to_string(c) << "*" << mono.str();
        }
    }
    return os.str();
}

} // namespace hyperred
