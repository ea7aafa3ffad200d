#pragma once

#include <map>

#include "hyperred/ratfun.hpp"

namespace hyperred {

// Affine combination of parameter atoms with rational coefficients plus a
// rational offset. Houses a, b_i, c and all integer shifts of them.
class ParamExpr {
public:
    ParamExpr() = default;
    ParamExpr(ContextPtr ctx, Rational offset);

    static ParamExpr atom(const ContextPtr& ctx, const std::string& name);
    static ParamExpr number(const ContextPtr& ctx, const Rational& v) {
        return ParamExpr(ctx, v);
    }

    const ContextPtr& context() const { return ctx_; }
    const std::map<int, Rational>& atoms() const { return atoms_; }
    const Rational& offset() const { return offset_; }

    bool is_number() const { return atoms_.empty(); }
    bool is_zero() const { return atoms_.empty() && is_integer_zero(); }
    // Triggered Table-1 style condition: all atoms cancel and the offset is
    // an integer.
    bool is_integer_valued() const { return atoms_.empty() && hyperred::is_integer(offset_); }

    ParamExpr operator+(const ParamExpr& o) const;
    ParamExpr operator-(const ParamExpr& o) const;
    ParamExpr operator-() const;
    ParamExpr operator+(const Rational& c) const;
    ParamExpr operator-(const Rational& c) const;
    ParamExpr operator*(const Rational& c) const;
    ParamExpr shifted(long k) const { return *this + Rational(k); }

    bool operator==(const ParamExpr& o) const {
        return atoms_ == o.atoms_ && offset_ == o.offset_;
    }
    bool operator!=(const ParamExpr& o) const { return !(*this == o); }

    Poly to_poly() const;
    RatFun to_ratfun() const { return RatFun(to_poly()); }

    // Requires is_number().
    const Rational& value() const;

    std::string str() const;

private:
    bool is_integer_zero() const { return sgn(offset_) == 0; }

    ContextPtr ctx_;
    std::map<int, Rational> atoms_; // symbol index -> coefficient, no zeros
    Rational offset_ = 0;
};

// Parses an affine string over the context's parameter atoms, e.g. "a-1",
// "c+2", "3/2", "a1+b2-1/2", "2*a".
ParamExpr parse_param_expr(const ContextPtr& ctx, const std::string& text);

} // namespace hyperred
