#include "hyperred/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hyperred {

bool poly_less(const Poly& a, const Poly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    GrlexLess lt;
    for (auto ia = ta.begin(), ib = tb.begin(); ia != ta.end(); ++ia, ++ib) {
        if (lt(ia->first, ib->first)) return true;
        if (lt(ib->first, ia->first)) return false;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return false;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)) {
    check_same_context(num_.context(), den.context());
    fac_.push_back(std::move(den));
    normalize();
}

RatFun::RatFun(Poly num, std::vector<Poly> den_factors)
    : num_(std::move(num)), fac_(std::move(den_factors)) {
    for (const auto& f : fac_) check_same_context(num_.context(), f.context());
    normalize();
}

RatFun::RatFun(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.context(), 1)) {}

RatFun RatFun::constant(const ContextPtr& ctx, const Rational& c) {
    return RatFun(Poly::constant(ctx, c));
}

RatFun RatFun::variable(const ContextPtr& ctx, int var_1based) {
    return RatFun(Poly::variable(ctx, var_1based));
}

void RatFun::normalize() {
    for (const auto& f : fac_)
        if (f.is_zero())
            fail(ErrorCode::DenominatorVanishes, "zero denominator polynomial");
    if (num_.is_zero()) {
        fac_.clear();
        den_ = Poly::constant(context(), 1);
        return;
    }
    // make each factor primitive, folding contents and constants into num
    for (size_t i = 0; i < fac_.size();) {
        if (fac_[i].is_constant()) {
            num_ = num_ * (Rational(1) / fac_[i].constant_value());
            fac_.erase(fac_.begin() + static_cast<long>(i));
            continue;
        }
        Rational c = fac_[i].content();
        if (c != 1) {
            fac_[i] = fac_[i] * (Rational(1) / c);
            num_ = num_ * (Rational(1) / c);
        }
        ++i;
    }
    // cancel the numerator against each factor it divides by
    for (size_t i = 0; i < fac_.size();) {
        Poly q;
        if (!num_.is_constant() && Poly::divide_exact(num_, fac_[i], q)) {
            num_ = std::move(q);
            fac_.erase(fac_.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    std::sort(fac_.begin(), fac_.end(), poly_less);
    den_ = Poly::constant(context(), 1);
    for (const auto& f : fac_) den_ = den_ * f;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

// multiset split of two sorted factor lists into common / only-left / only-right
void split_factors(const std::vector<Poly>& a, const std::vector<Poly>& b,
                   std::vector<Poly>& common, std::vector<Poly>& ra, std::vector<Poly>& rb) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (poly_less(a[i], b[j])) ra.push_back(a[i++]);
        else if (poly_less(b[j], a[i])) rb.push_back(b[j++]);
        else { common.push_back(a[i]); ++i; ++j; }
    }
    for (; i < a.size(); ++i) ra.push_back(a[i]);
    for (; j < b.size(); ++j) rb.push_back(b[j]);
}

Poly product(const ContextPtr& ctx, const std::vector<Poly>& fs) {
    Poly p = Poly::constant(ctx, 1);
    for (const auto& f : fs) p = p * f;
    return p;
}

} // namespace

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, fac_);
    // denominator = common factors times both remainders
    std::vector<Poly> common, ra, rb;
    split_factors(fac_, o.fac_, common, ra, rb);
    Poly pa = product(context(), ra);
    Poly pb = product(context(), rb);
    std::vector<Poly> den = std::move(common);
    den.insert(den.end(), ra.begin(), ra.end());
    den.insert(den.end(), rb.begin(), rb.end());
    return RatFun(num_ * pb + o.num_ * pa, std::move(den));
}

RatFun RatFun::operator-(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ - o.num_, fac_);
    std::vector<Poly> common, ra, rb;
    split_factors(fac_, o.fac_, common, ra, rb);
    Poly pa = product(context(), ra);
    Poly pb = product(context(), rb);
    std::vector<Poly> den = std::move(common);
    den.insert(den.end(), ra.begin(), ra.end());
    den.insert(den.end(), rb.begin(), rb.end());
    return RatFun(num_ * pb - o.num_ * pa, std::move(den));
}

RatFun ratfun_sum(const ContextPtr& ctx, std::vector<RatFun> terms) {
    std::erase_if(terms, [](const RatFun& t) { return t.is_zero(); });
    if (terms.empty()) return RatFun::zero(ctx);
    if (terms.size() == 1) return terms[0];
    // common denominator: multiset union of all factor lists, so each factor
    // appears with its maximal multiplicity and is expanded only once
    std::vector<Poly> uni = terms[0].den_factors();
    for (size_t i = 1; i < terms.size(); ++i) {
        std::vector<Poly> merged;
        std::set_union(uni.begin(), uni.end(), terms[i].den_factors().begin(),
                       terms[i].den_factors().end(), std::back_inserter(merged), poly_less);
        uni = std::move(merged);
    }
    Poly num(ctx);
    for (const auto& t : terms) {
        std::vector<Poly> missing;
        std::set_difference(uni.begin(), uni.end(), t.den_factors().begin(),
                            t.den_factors().end(), std::back_inserter(missing), poly_less);
        num = num + t.num() * product(ctx, missing);
    }
    return RatFun(std::move(num), std::move(uni));
}

RatFun RatFun::operator*(const RatFun& o) const {
    // cancel each factor against the opposite numerator before multiplying
    Poly n1 = num_, n2 = o.num_, q;
    std::vector<Poly> den;
    den.reserve(fac_.size() + o.fac_.size());
    for (const auto& f : fac_) {
        if (!n2.is_constant() && Poly::divide_exact(n2, f, q)) n2 = std::move(q);
        else den.push_back(f);
    }
    for (const auto& f : o.fac_) {
        if (!n1.is_constant() && Poly::divide_exact(n1, f, q)) n1 = std::move(q);
        else den.push_back(f);
    }
    return RatFun(n1 * n2, std::move(den));
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
    if (num_.is_zero())
        fail(ErrorCode::DenominatorVanishes, "inverse of zero rational function");
    return RatFun(den_, num_);
}

bool ratfun_equal(const RatFun& p, const RatFun& q) {
    check_same_context(p.context(), q.context());
    return (p.num() * q.den() - q.num() * p.den()).is_zero();
}

RatFun theta_deriv(const RatFun& r, int var_1based) {
    int sym = r.context()->var_index(var_1based);
    Poly z = Poly::symbol(r.context(), sym);
    Poly dn = r.num().derivative(sym);
    // Per-factor quotient rule. A factor with one fixed power k of z_i obeys
    // theta(f) = k*f and cancels without squaring; only the remaining factors
    // get squared.
    long k = 0;
    Poly g = Poly::constant(r.context(), 1);
    std::vector<Poly> den;
    den.reserve(r.den_factors().size() + 2);
    bool any_nonuniform = false;
    for (const auto& f : r.den_factors()) {
        const auto& ft = f.terms();
        unsigned e0 = ft.begin()->first[static_cast<size_t>(sym)];
        bool uniform = true;
        for (const auto& [e, c] : ft)
            if (e[static_cast<size_t>(sym)] != e0) { uniform = false; break; }
        if (uniform) {
            k += e0;
            den.push_back(f);
        } else {
            any_nonuniform = true;
            g = g * f;
            den.push_back(f);
            den.push_back(f);
        }
    }
    Poly nk = z * dn - r.num() * Rational(k);
    if (!any_nonuniform) return RatFun(std::move(nk), std::move(den));
    Poly dg = g.derivative(sym);
    return RatFun(nk * g - r.num() * (z * dg), std::move(den));
}

Rational eval_ratfun_exact(const RatFun& f, const std::vector<Rational>& point) {
    Rational d = f.den().eval_exact(point);
    if (is_zero(d))
        fail(ErrorCode::DenominatorVanishes, "denominator vanishes at substitution point");
    return f.num().eval_exact(point) / d;
}

std::string RatFun::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

// --- expression parser ------------------------------------------------------
//
// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := ('-')* primary ('^' uint)?
// primary:= uint | symbol | '(' expr ')'

namespace {

struct ExprParser {
    const ContextPtr& ctx;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    RatFun expr() {
        RatFun v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    RatFun term() {
        RatFun v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    RatFun factor() {
        bool neg = false;
        while (true) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) {}
            else break;
        }
        RatFun v = primary();
        if (eat('^')) {
            std::string digits;
            bool eneg = eat('-');
            skip();
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            if (digits.empty()) fail(ErrorCode::ParseError, "expected exponent in '" + s + "'");
            long e = std::stol(digits);
            RatFun p = RatFun::one(ctx);
            for (long i = 0; i < e; ++i) p = p * v;
            v = eneg ? p.inverse() : p;
        }
        return neg ? -v : v;
    }

    RatFun primary() {
        skip();
        if (pos >= s.size()) fail(ErrorCode::ParseError, "unexpected end of expression: '" + s + "'");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFun v = expr();
            if (!eat(')')) fail(ErrorCode::ParseError, "missing ')' in '" + s + "'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return RatFun::constant(ctx, parse_rational(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name += s[pos++];
            return RatFun(Poly::symbol(ctx, ctx->require(name)));
        }
        fail(ErrorCode::ParseError, "unexpected character '" + std::string(1, c) + "' in '" + s + "'");
    }
};

} // namespace

RatFun parse_ratfun(const ContextPtr& ctx, const std::string& text) {
    ExprParser p{ctx, text};
    RatFun v = p.expr();
    p.skip();
    if (p.pos != text.size())
        fail(ErrorCode::ParseError, "trailing input in '" + text + "'");
    return v;
}

Poly parse_poly(const ContextPtr& ctx, const std::string& text) {
    RatFun f = parse_ratfun(ctx, text);
    if (!(f.den().is_constant()))
        fail(ErrorCode::ParseError, "expected polynomial, got rational function: '" + text + "'");
    return f.num() * (Rational(1) / f.den().constant_value());
}

} // namespace hyperred
