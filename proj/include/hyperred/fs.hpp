#pragma once

#include "hyperred/fd.hpp"

namespace hyperred {

// Parameter tuple a1, a2; b1, b2, b3; c of the three-variable function.
struct FsParams {
    ParamExpr a1, a2;
    std::vector<ParamExpr> b; // exactly 3
    ParamExpr c;

    const ContextPtr& context() const { return a1.context(); }
    ParamExpr sum_b() const { return b[0] + b[1] + b[2]; }
    bool operator==(const FsParams& o) const = default;
    std::string str() const;
};

struct FsShift {
    long m_a1 = 0, m_a2 = 0;
    std::vector<long> m_b; // 3 entries
    long m_c = 0;
};

// F(params) = [A + B th1 + C th2 + D th3 + E th12 + F th13] F(target),
// coeffs in that order.
struct FsReduction {
    std::vector<RatFun> coeffs; // 6 entries
    FsParams target;
};

// D0 = a1+a2-(c-1), D1 = a2+b1-(c-1), D2 = a1+b2+b3-(c-1), D3 = sum b-(c-1).
struct DFactors {
    ParamExpr D0, D1, D2, D3;
};
DFactors fs_dfactors(const FsParams& params);

enum class FsStepKind { A1Up, A1Down, A2Up, A2Down, BUp, BDown, CUp, CDown };

struct FsStep {
    FsStepKind kind;
    int i = 0; // 1-based b index
};

// Basis {1, th1, th2, th3, th1 th2, th1 th3}; generators: the (z2 - z3)
// relation for th2 th3 plus the three canonical square rules.
RewriteSystem fs_rules(const FsParams& params);

// (E, target) with F(target) = E applied to F(params); E already basis-normal.
std::pair<ThetaExpr, FsParams> fs_unit_step(const FsParams& params, FsStep which);

FsReduction fs_index_change(const FsShift& shift, const FsParams& params);

std::vector<ExceptionalHit> fs_exceptional(const FsParams& params);

ContextPtr fs_context();
FsParams fs_symbolic_params(const ContextPtr& ctx);

} // namespace hyperred
