#pragma once

#include <functional>
#include <map>

#include "hyperred/ratfun.hpp"

namespace hyperred {

// Multi-index of a commuting theta-monomial, one entry per variable z_i.
using ThetaMono = std::vector<unsigned>;

unsigned mono_degree(const ThetaMono& m);

// Finite sum of rational-function-weighted theta-monomials acting on a
// function of z_1..z_r.
class ThetaExpr {
public:
    using TermMap = std::map<ThetaMono, RatFun, GrlexLess>;

    ThetaExpr() = default;
    explicit ThetaExpr(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static ThetaExpr zero(const ContextPtr& ctx) { return ThetaExpr(ctx); }
    static ThetaExpr identity(const ContextPtr& ctx);
    static ThetaExpr monomial(const ContextPtr& ctx, ThetaMono m, RatFun coeff);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int arity() const { return ctx_->num_vars(); }

    void add_term(const ThetaMono& m, const RatFun& c);

    ThetaExpr operator+(const ThetaExpr& o) const;
    ThetaExpr operator-(const ThetaExpr& o) const;
    ThetaExpr scaled(const RatFun& c) const;

    RatFun coeff(const ThetaMono& m) const; // zero RatFun if absent

    // Structural equality of normalized coefficient maps.
    bool operator==(const ThetaExpr& o) const;
    // Semantic equality coefficient-by-coefficient via ratfun_equal.
    bool equivalent(const ThetaExpr& o) const;

    std::string str() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
};

// theta_i applied to the expression as an operator identity:
// each term R*theta^a becomes theta(R)*theta^a + R*theta^(a+e_i).
ThetaExpr apply_theta(int var_1based, const ThetaExpr& e);

// Operator product outer . inner.
ThetaExpr compose(const ThetaExpr& outer, const ThetaExpr& inner);

// One rewrite system: a derivative basis plus the generator relations that
// express a reducible sub-monomial of any non-basis monomial.
struct RewriteSystem {
    ContextPtr ctx;
    std::vector<ThetaMono> basis;
    std::function<bool(const ThetaMono&)> is_basis;
    std::function<ThetaMono(const ThetaMono&)> choose; // reducible beta inside alpha
    std::function<ThetaExpr(const ThetaMono&)> expand;  // identity for theta^beta
};

// Normalizes e so every remaining monomial lies in the basis. Monomials whose
// one-step expansions feed back into each other at the same total degree are
// resolved by linear elimination over the rational-function field (the same
// division that produces the inverted prefactors of the degree-3 relations).
ThetaExpr rewrite_to_basis(const ThetaExpr& e, const RewriteSystem& rules,
                           long budget = -1);

// Basis-only normal form of a single theta-monomial.
ThetaExpr theta_normal_form(const ThetaMono& alpha, const RewriteSystem& rules,
                            long budget = -1);

} // namespace hyperred
