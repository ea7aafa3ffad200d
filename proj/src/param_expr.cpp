#include "hyperred/param_expr.hpp"

#include <cctype>
#include <sstream>

namespace hyperred {

ParamExpr::ParamExpr(ContextPtr ctx, Rational offset)
    : ctx_(std::move(ctx)), offset_(std::move(offset)) {}

ParamExpr ParamExpr::atom(const ContextPtr& ctx, const std::string& name) {
    int i = ctx->require(name);
    if (ctx->symbol(i).kind != SymbolKind::Parameter)
        fail(ErrorCode::ParseError, "'" + name + "' is a variable, not a parameter atom");
    ParamExpr p(ctx, 0);
    p.atoms_[i] = 1;
    return p;
}

ParamExpr ParamExpr::operator+(const ParamExpr& o) const {
    check_same_context(ctx_, o.ctx_);
    ParamExpr r = *this;
    r.offset_ += o.offset_;
    for (const auto& [i, c] : o.atoms_) {
        auto [it, inserted] = r.atoms_.emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (hyperred::is_zero(it->second)) r.atoms_.erase(it);
        }
    }
    return r;
}

ParamExpr ParamExpr::operator-() const {
    ParamExpr r = *this;
    r.offset_ = -r.offset_;
    for (auto& [i, c] : r.atoms_) c = -c;
    return r;
}

ParamExpr ParamExpr::operator-(const ParamExpr& o) const { return *this + (-o); }

ParamExpr ParamExpr::operator+(const Rational& c) const {
    ParamExpr r = *this;
    r.offset_ += c;
    return r;
}

ParamExpr ParamExpr::operator-(const Rational& c) const { return *this + (-c); }

ParamExpr ParamExpr::operator*(const Rational& c) const {
    ParamExpr r(ctx_, offset_ * c);
    if (hyperred::is_zero(c)) return r;
    for (const auto& [i, a] : atoms_) r.atoms_[i] = a * c;
    return r;
}

Poly ParamExpr::to_poly() const {
    Poly p = Poly::constant(ctx_, offset_);
    for (const auto& [i, c] : atoms_) p = p + Poly::symbol(ctx_, i) * c;
    return p;
}

const Rational& ParamExpr::value() const {
    if (!is_number())
        fail(ErrorCode::ParseError, "parameter '" + str() + "' is not numeric");
    return offset_;
}

std::string ParamExpr::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : atoms_) {
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << to_string(c) << "*";
        } else {
            os << (sgn(c) < 0 ? "-" : "+");
            Rational a = abs(c);
            if (a != 1) os << to_string(a) << "*";
        }
        os << ctx_->symbol(i).name;
        first = false;
    }
    if (first) return to_string(offset_);
    if (sgn(offset_) > 0) os << "+" << to_string(offset_);
    else if (sgn(offset_) < 0) os << "-" << to_string(-offset_);
    return os.str();
}

ParamExpr parse_param_expr(const ContextPtr& ctx, const std::string& text) {
    // sums of terms: [+|-] [rat '*'] atom | [+|-] rat
    ParamExpr acc(ctx, 0);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos == text.size()) fail(ErrorCode::ParseError, "empty parameter expression");
    bool first = true;
    while (pos < text.size()) {
        skip();
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip();
        } else if (!first) {
            fail(ErrorCode::ParseError, "expected '+' or '-' in '" + text + "'");
        }
        first = false;
        Rational coeff = 1;
        bool saw_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                num += text[pos++];
            skip();
            if (pos < text.size() && text[pos] == '/') {
                size_t save = pos;
                ++pos;
                skip();
                std::string den;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    den += text[pos++];
                if (den.empty()) { pos = save; }
                else num += "/" + den;
            }
            coeff = parse_rational(num);
            saw_number = true;
            skip();
            if (pos < text.size() && text[pos] == '*') { ++pos; skip(); }
        }
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
            acc = acc + ParamExpr::atom(ctx, name) * (sign * coeff);
        } else if (saw_number) {
            acc = acc + (sign * coeff);
        } else {
            fail(ErrorCode::ParseError, "unexpected input in parameter expression '" + text + "'");
        }
        skip();
    }
    return acc;
}

} // namespace hyperred
