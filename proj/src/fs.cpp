#include "hyperred/fs.hpp"

#include <sstream>

namespace hyperred {

namespace {

ThetaMono mono(unsigned p1, unsigned p2, unsigned p3) { return ThetaMono{p1, p2, p3}; }

void check_factor(const ParamExpr& p, const std::string& what) {
    if (p.is_zero())
        fail(ErrorCode::ExceptionalStep, "step factor " + what + " vanishes identically");
}

} // namespace

std::string FsParams::str() const {
    std::ostringstream os;
    os << "(" << a1.str() << "," << a2.str() << ";" << b[0].str() << "," << b[1].str()
       << "," << b[2].str() << ";" << c.str() << ")";
    return os.str();
}

ContextPtr fs_context() {
    return make_context({"a1", "a2", "b1", "b2", "b3", "c"}, 3);
}

FsParams fs_symbolic_params(const ContextPtr& ctx) {
    FsParams p;
    p.a1 = ParamExpr::atom(ctx, "a1");
    p.a2 = ParamExpr::atom(ctx, "a2");
    p.b = {ParamExpr::atom(ctx, "b1"), ParamExpr::atom(ctx, "b2"),
           ParamExpr::atom(ctx, "b3")};
    p.c = ParamExpr::atom(ctx, "c");
    return p;
}

DFactors fs_dfactors(const FsParams& p) {
    ParamExpr cm1 = p.c.shifted(-1);
    return DFactors{
        p.a1 + p.a2 - cm1,
        p.a2 + p.b[0] - cm1,
        p.a1 + p.b[1] + p.b[2] - cm1,
        p.b[0] + p.b[1] + p.b[2] - cm1,
    };
}

RewriteSystem fs_rules(const FsParams& params) {
    const ContextPtr ctx = params.context();
    RewriteSystem rules;
    rules.ctx = ctx;
    rules.basis = {mono(0, 0, 0), mono(1, 0, 0), mono(0, 1, 0),
                   mono(0, 0, 1), mono(1, 1, 0), mono(1, 0, 1)};
    rules.is_basis = [](const ThetaMono& m) {
        unsigned d = mono_degree(m);
        if (d <= 1) return true;
        if (d != 2) return false;
        return m[0] == 1 && (m[1] == 1 || m[2] == 1);
    };
    rules.choose = [](const ThetaMono& m) -> ThetaMono {
        if (m[1] >= 1 && m[2] >= 1) return mono(0, 1, 1);
        for (int i = 0; i < 3; ++i)
            if (m[static_cast<size_t>(i)] >= 2) {
                ThetaMono b(3, 0);
                b[static_cast<size_t>(i)] = 2;
                return b;
            }
        fail(ErrorCode::NonTermination, "no applicable rule for monomial");
    };
    const FsParams p = params;
    rules.expand = [ctx, p](const ThetaMono& beta) -> ThetaExpr {
        RatFun one = RatFun::one(ctx);
        RatFun z1 = RatFun::variable(ctx, 1);
        RatFun z2 = RatFun::variable(ctx, 2);
        RatFun z3 = RatFun::variable(ctx, 3);
        RatFun cm1 = p.c.shifted(-1).to_ratfun();
        ThetaExpr e(ctx);
        if (beta == mono(0, 1, 1)) {
            RatFun den = z2 - z3;
            e.add_term(mono(0, 1, 0), p.b[2].to_ratfun() * z3 / den);
            e.add_term(mono(0, 0, 1), -(p.b[1].to_ratfun() * z2) / den);
            return e;
        }
        if (beta == mono(2, 0, 0)) {
            RatFun om = one - z1;
            RatFun a1 = p.a1.to_ratfun(), b1 = p.b[0].to_ratfun();
            e.add_term(mono(1, 1, 0), -(one / om));
            e.add_term(mono(1, 0, 1), -(one / om));
            e.add_term(mono(1, 0, 0), ((a1 + b1) * z1 - cm1) / om);
            e.add_term(mono(0, 0, 0), a1 * b1 * z1 / om);
            return e;
        }
        if (beta == mono(0, 2, 0)) {
            RatFun om = one - z2;
            RatFun a2 = p.a2.to_ratfun(), b2 = p.b[1].to_ratfun();
            e.add_term(mono(0, 1, 1), -one);
            e.add_term(mono(1, 1, 0), -(one / om));
            e.add_term(mono(0, 1, 0), ((a2 + b2) * z2 - cm1) / om);
            e.add_term(mono(0, 0, 1), b2 * z2 / om);
            e.add_term(mono(0, 0, 0), a2 * b2 * z2 / om);
            return e;
        }
        if (beta == mono(0, 0, 2)) {
            RatFun om = one - z3;
            RatFun a2 = p.a2.to_ratfun(), b3 = p.b[2].to_ratfun();
            e.add_term(mono(0, 1, 1), -one);
            e.add_term(mono(1, 0, 1), -(one / om));
            e.add_term(mono(0, 0, 1), ((a2 + b3) * z3 - cm1) / om);
            e.add_term(mono(0, 1, 0), b3 * z3 / om);
            e.add_term(mono(0, 0, 0), a2 * b3 * z3 / om);
            return e;
        }
        fail(ErrorCode::NonTermination, "unknown rule target");
    };
    return rules;
}

namespace {

// Six-coefficient operator of the printed inverse steps; q holds the
// parameters exactly as the table's symbols denote them (the lower side of
// the shifted pair for X-steps, the upper side for the c-step).
ThetaExpr inverse_table(const FsParams& q, FsStepKind kind, int bi) {
    const ContextPtr ctx = q.context();
    RatFun one = RatFun::one(ctx);
    RatFun z1 = RatFun::variable(ctx, 1);
    RatFun z2 = RatFun::variable(ctx, 2);
    RatFun z3 = RatFun::variable(ctx, 3);
    RatFun a1 = q.a1.to_ratfun(), a2 = q.a2.to_ratfun();
    RatFun b1 = q.b[0].to_ratfun(), b2 = q.b[1].to_ratfun(), b3 = q.b[2].to_ratfun();
    RatFun c = q.c.to_ratfun();
    DFactors df = fs_dfactors(q);
    RatFun D0 = df.D0.to_ratfun(), D1 = df.D1.to_ratfun();
    RatFun D2 = df.D2.to_ratfun(), D3 = df.D3.to_ratfun();
    RatFun w2 = z1 + z2 - z1 * z2; // z1+z2-z1z2
    RatFun w3 = z1 + z3 - z1 * z3;
    RatFun A, B, C, D, E, F;
    switch (kind) {
    case FsStepKind::A1Down: {
        check_factor(df.D0, "D0");
        check_factor(df.D2, "D2");
        A = (a1 * a1 + a1 * (b1 * z1 + D1 + D3 - b1 - b1) + a2 * (b1 * z1 + D2 - a1) +
             (b1 * z1 - c + one) * (D2 - a1)) / D0 / D2;
        B = (z1 - one) * (a2 + D2) / D0 / D2;
        C = b1 * z1 * (z2 - one) / z2 / D0 / D2;
        D = b1 * z1 * (z3 - one) / z3 / D0 / D2;
        E = -(w2 / z2 / D0 / D2);
        F = -(w3 / z3 / D0 / D2);
        break;
    }
    case FsStepKind::A2Down: {
        check_factor(df.D0, "D0");
        check_factor(df.D1, "D1");
        A = ((b2 * z2 + b3 * z3 + D1) * (a1 + D1) - b1 * D1) / D0 / D1;
        B = (z1 - one) * (b2 * z2 + b3 * z3) / z1 / D0 / D1;
        C = (z2 - one) * (b1 + D0) / D0 / D1;
        D = (z3 - one) * (b1 + D0) / D0 / D1;
        // printed numerator reads z1+z2-z1*z3; the z2<->z3 swap symmetry with
        // the F coefficient and the round-trip identity both force z1*z2
        E = -(w2 / z1 / D0 / D1);
        F = -(w3 / z1 / D0 / D1);
        break;
    }
    case FsStepKind::CUp: {
        check_factor(df.D0, "D0");
        check_factor(df.D1, "D1");
        check_factor(df.D2, "D2");
        check_factor(df.D3, "D3");
        RatFun cm1 = c - one;
        RatFun g = a1 * (D1 + D2) + D1 * D3;
        // printed first summand reads a1*(a2+D3)*(D1+D3); inverting the
        // lowering step forces D1+D2, matching the D1+D2 of B, E and F
        A = -(cm1 * (a1 * (a2 + D3) * (D1 + D2) + D1 * (D2 + a2 - a1) * D3)) / D0 / D1 / D2 / D3;
        B = -(cm1 * (z1 - one) * (a2 * (D1 + D2) + D2 * D3)) / z1 / D0 / D1 / D2 / D3;
        C = cm1 * (one - z2) * g / z2 / D0 / D1 / D2 / D3;
        D = cm1 * (one - z3) * g / z3 / D0 / D1 / D2 / D3;
        E = cm1 * w2 * (D1 + D2) / z1 / z2 / D0 / D1 / D2 / D3;
        F = cm1 * w3 * (D1 + D2) / z1 / z3 / D0 / D1 / D2 / D3;
        break;
    }
    case FsStepKind::BDown: {
        if (bi == 1) {
            check_factor(df.D1, "D1");
            check_factor(df.D3, "D3");
            A = (a2 * (a1 * z1 + D3) + (a1 * z1 + D1 - a2) * D3) / D1 / D3;
            B = (z1 - one) * (a2 + D3) / D1 / D3;
            C = a1 * z1 * (z2 - one) / z2 / D1 / D3;
            D = a1 * z1 * (z3 - one) / z3 / D1 / D3;
            E = -(w2 / z2 / D1 / D3);
            F = -(w3 / z3 / D1 / D3);
        } else {
            check_factor(df.D2, "D2");
            check_factor(df.D3, "D3");
            RatFun zi = bi == 2 ? z2 : z3;
            A = (a1 * (a2 * zi + D3) + D3 * (a2 * zi + D3 - b1)) / D2 / D3;
            B = a2 * (z1 - one) * zi / z1 / D2 / D3;
            if (bi == 2) {
                C = (z2 - one) * (a1 + D3) / D2 / D3;
                D = z2 * (z3 - one) * (a1 + D3) / z3 / D2 / D3;
                E = -(w2 / z1 / D2 / D3);
                F = -(z2 * w3 / z1 / z3 / D2 / D3);
            } else {
                C = (z2 - one) * z3 * (a1 + D3) / z2 / D2 / D3;
                D = (z3 - one) * (a1 + D3) / D2 / D3;
                E = -(z3 * w2 / z1 / z2 / D2 / D3);
                F = -(w3 / z1 / D2 / D3);
            }
        }
        break;
    }
    default:
        fail(ErrorCode::DegenerateInput, "not an inverse step");
    }
    ThetaExpr e(ctx);
    e.add_term(mono(0, 0, 0), A);
    e.add_term(mono(1, 0, 0), B);
    e.add_term(mono(0, 1, 0), C);
    e.add_term(mono(0, 0, 1), D);
    e.add_term(mono(1, 1, 0), E);
    e.add_term(mono(1, 0, 1), F);
    return e;
}

} // namespace

std::pair<ThetaExpr, FsParams> fs_unit_step(const FsParams& params, FsStep which) {
    const ContextPtr ctx = params.context();
    RatFun one = RatFun::one(ctx);
    ThetaExpr e(ctx);
    FsParams target = params;
    switch (which.kind) {
    case FsStepKind::A1Up: {
        check_factor(params.a1, "a1");
        e.add_term(mono(0, 0, 0), one);
        e.add_term(mono(1, 0, 0), one / params.a1.to_ratfun());
        target.a1 = params.a1.shifted(1);
        return {std::move(e), std::move(target)};
    }
    case FsStepKind::A2Up: {
        check_factor(params.a2, "a2");
        RatFun inv = one / params.a2.to_ratfun();
        e.add_term(mono(0, 0, 0), one);
        e.add_term(mono(0, 1, 0), inv);
        e.add_term(mono(0, 0, 1), inv);
        target.a2 = params.a2.shifted(1);
        return {std::move(e), std::move(target)};
    }
    case FsStepKind::BUp: {
        const ParamExpr& bi = params.b[static_cast<size_t>(which.i - 1)];
        check_factor(bi, "b" + std::to_string(which.i));
        e.add_term(mono(0, 0, 0), one);
        ThetaMono m(3, 0);
        m[static_cast<size_t>(which.i - 1)] = 1;
        e.add_term(m, one / bi.to_ratfun());
        target.b[static_cast<size_t>(which.i - 1)] = bi.shifted(1);
        return {std::move(e), std::move(target)};
    }
    case FsStepKind::CDown: {
        ParamExpr cm1 = params.c.shifted(-1);
        check_factor(cm1, "c-1");
        RatFun inv = one / cm1.to_ratfun();
        e.add_term(mono(0, 0, 0), one);
        e.add_term(mono(1, 0, 0), inv);
        e.add_term(mono(0, 1, 0), inv);
        e.add_term(mono(0, 0, 1), inv);
        target.c = cm1;
        return {std::move(e), std::move(target)};
    }
    case FsStepKind::A1Down:
        target.a1 = params.a1.shifted(-1);
        return {inverse_table(target, which.kind, 0), std::move(target)};
    case FsStepKind::A2Down:
        target.a2 = params.a2.shifted(-1);
        return {inverse_table(target, which.kind, 0), std::move(target)};
    case FsStepKind::BDown:
        target.b[static_cast<size_t>(which.i - 1)] =
            params.b[static_cast<size_t>(which.i - 1)].shifted(-1);
        return {inverse_table(target, which.kind, which.i), std::move(target)};
    case FsStepKind::CUp:
        target.c = params.c.shifted(1);
        return {inverse_table(target, which.kind, 0), std::move(target)};
    }
    fail(ErrorCode::DegenerateInput, "unknown step kind");
}

FsReduction fs_index_change(const FsShift& shift, const FsParams& params) {
    if (shift.m_b.size() != 3)
        fail(ErrorCode::DegenerateInput, "shift arity does not match parameters");

    enum class Slot { A1, A2, B, C };
    struct Link { FsParams base; FsStep step; };
    std::vector<Link> links;
    FsParams cur = params;
    auto walk = [&](Slot slot, int i, long count) {
        for (long k = 0; k < std::abs(count); ++k) {
            long delta = count > 0 ? 1 : -1;
            FsParams next = cur;
            FsStep step;
            step.i = i;
            switch (slot) {
            case Slot::A1:
                next.a1 = next.a1.shifted(delta);
                step.kind = delta > 0 ? FsStepKind::A1Down : FsStepKind::A1Up;
                break;
            case Slot::A2:
                next.a2 = next.a2.shifted(delta);
                step.kind = delta > 0 ? FsStepKind::A2Down : FsStepKind::A2Up;
                break;
            case Slot::B:
                next.b[static_cast<size_t>(i - 1)] =
                    next.b[static_cast<size_t>(i - 1)].shifted(delta);
                step.kind = delta > 0 ? FsStepKind::BDown : FsStepKind::BUp;
                break;
            case Slot::C:
                next.c = next.c.shifted(delta);
                step.kind = delta > 0 ? FsStepKind::CDown : FsStepKind::CUp;
                break;
            }
            links.push_back({next, step});
            cur = next;
        }
    };
    walk(Slot::A1, 0, shift.m_a1);
    walk(Slot::A2, 0, shift.m_a2);
    for (int i = 1; i <= 3; ++i) walk(Slot::B, i, shift.m_b[static_cast<size_t>(i - 1)]);
    walk(Slot::C, 0, shift.m_c);

    const FsParams target = cur;
    // left-to-right composition keeps the theta-derivatives acting on the
    // small unit-step factors instead of the accumulated coefficients
    ThetaExpr acc = ThetaExpr::identity(params.context());
    for (const auto& l : links) {
        auto [e, tgt] = fs_unit_step(l.base, l.step);
        (void)tgt;
        acc = rewrite_to_basis(compose(acc, e), fs_rules(l.base));
    }

    FsReduction red;
    red.target = target;
    for (const ThetaMono& m :
         {mono(0, 0, 0), mono(1, 0, 0), mono(0, 1, 0), mono(0, 0, 1), mono(1, 1, 0), mono(1, 0, 1)})
        red.coeffs.push_back(acc.coeff(m));
    return red;
}

std::vector<ExceptionalHit> fs_exceptional(const FsParams& params) {
    std::vector<ExceptionalHit> hits;
    auto check = [&](const ParamExpr& e, const std::string& which) {
        if (e.is_integer_valued()) hits.push_back({which, e.offset()});
    };
    check(params.a1, "a1");
    check(params.a2, "a2");
    for (int i = 0; i < 3; ++i)
        check(params.b[static_cast<size_t>(i)], "b" + std::to_string(i + 1));
    check(params.c - params.a1 - params.a2, "c-a1-a2");
    check(params.c - params.sum_b(), "c-sum(b)");
    check(params.a1 + params.b[1] + params.b[2] - params.c, "a1+b2+b3-c");
    check(params.a2 + params.b[0] - params.c, "a2+b1-c");
    return hits;
}

} // namespace hyperred
