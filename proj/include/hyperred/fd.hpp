#pragma once

#include "hyperred/param_expr.hpp"
#include "hyperred/theta.hpp"

namespace hyperred {

// Parameter tuple of the r-variable function: a; b_1..b_r; c.
struct FdParams {
    ParamExpr a;
    std::vector<ParamExpr> b;
    ParamExpr c;

    int r() const { return static_cast<int>(b.size()); }
    const ContextPtr& context() const { return a.context(); }
    ParamExpr sum_b() const;
    FdParams shifted(long ma, const std::vector<long>& mb, long mc) const;
    bool operator==(const FdParams& o) const = default;
    std::string str() const;
};

struct FdShift {
    long m_a = 0;
    std::vector<long> m_b;
    long m_c = 0;
};

// F(params) = sum coeffs[k] * theta^(k) F(target), coeffs ordered
// (constant, theta_1, ..., theta_r).
struct FdReduction {
    std::vector<RatFun> coeffs;
    FdParams target;
};

enum class FdStepKind { AUp, ADown, BUp, BDown, CUp, CDown };

struct FdStep {
    FdStepKind kind;
    int i = 0; // 1-based b index for BUp/BDown
};

struct ExceptionalHit {
    std::string which; // e.g. "a", "b2", "c-a", "c-sum(b)"
    Rational value;
};

// Basis {1, theta_1..theta_r}; mixed rule from the (z_i - z_j) relation and
// the square rule from the canonical second-order equations.
RewriteSystem fd_rules(const FdParams& params);

// Returns (E, target) with F(target) = E applied to F(params); E is degree
// <= 1 and therefore already basis-normal.
std::pair<ThetaExpr, FdParams> fd_unit_step(const FdParams& params, FdStep which);

FdReduction fd_index_change(const FdShift& shift, const FdParams& params);

std::vector<ExceptionalHit> fd_exceptional(const FdParams& params);

// Context with parameter atoms a, b1..br, c and variables z1..zr, plus the
// fully symbolic parameter tuple over it.
ContextPtr fd_context(int r);
FdParams fd_symbolic_params(const ContextPtr& ctx);

} // namespace hyperred
