#include "hyperred/fd.hpp"

#include <sstream>

namespace hyperred {

namespace {

void check_prefactor(const ParamExpr& p, const std::string& what) {
    if (p.is_zero())
        fail(ErrorCode::ExceptionalStep, "step prefactor " + what + " vanishes identically");
}

RatFun zvar(const ContextPtr& ctx, int i) { return RatFun::variable(ctx, i); }

ThetaMono unit(int r, int i) {
    ThetaMono m(static_cast<size_t>(r), 0);
    m[static_cast<size_t>(i - 1)] = 1;
    return m;
}

} // namespace

ParamExpr FdParams::sum_b() const {
    ParamExpr s = ParamExpr::number(context(), 0);
    for (const auto& bi : b) s = s + bi;
    return s;
}

FdParams FdParams::shifted(long ma, const std::vector<long>& mb, long mc) const {
    FdParams q = *this;
    q.a = q.a.shifted(ma);
    for (size_t i = 0; i < q.b.size(); ++i) q.b[i] = q.b[i].shifted(mb[i]);
    q.c = q.c.shifted(mc);
    return q;
}

std::string FdParams::str() const {
    std::ostringstream os;
    os << "(" << a.str() << ";";
    for (int i = 0; i < r(); ++i) os << (i ? "," : "") << b[static_cast<size_t>(i)].str();
    os << ";" << c.str() << ")";
    return os.str();
}

ContextPtr fd_context(int r) {
    if (r < 1) fail(ErrorCode::DegenerateInput, "need at least one variable");
    std::vector<std::string> names{"a"};
    for (int i = 1; i <= r; ++i) names.push_back("b" + std::to_string(i));
    names.push_back("c");
    return make_context(std::move(names), r);
}

FdParams fd_symbolic_params(const ContextPtr& ctx) {
    FdParams p;
    p.a = ParamExpr::atom(ctx, "a");
    for (int i = 1; i <= ctx->num_vars(); ++i)
        p.b.push_back(ParamExpr::atom(ctx, "b" + std::to_string(i)));
    p.c = ParamExpr::atom(ctx, "c");
    return p;
}

RewriteSystem fd_rules(const FdParams& params) {
    const ContextPtr ctx = params.context();
    const int r = params.r();
    RewriteSystem rules;
    rules.ctx = ctx;
    rules.basis.push_back(ThetaMono(static_cast<size_t>(r), 0));
    for (int i = 1; i <= r; ++i) rules.basis.push_back(unit(r, i));
    rules.is_basis = [](const ThetaMono& m) { return mono_degree(m) <= 1; };
    rules.choose = [r](const ThetaMono& m) -> ThetaMono {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (m[i] >= 1 && m[j] >= 1) {
                    ThetaMono b(m.size(), 0);
                    b[i] = b[j] = 1;
                    return b;
                }
        for (int i = 0; i < r; ++i)
            if (m[i] >= 2) {
                ThetaMono b(m.size(), 0);
                b[i] = 2;
                return b;
            }
        fail(ErrorCode::NonTermination, "no applicable rule for monomial");
    };
    const FdParams p = params;
    rules.expand = [ctx, r, p](const ThetaMono& beta) -> ThetaExpr {
        int first = -1, second = -1;
        for (int i = 0; i < r; ++i) {
            if (beta[i] == 2) { first = second = i; break; }
            if (beta[i] == 1) (first < 0 ? first : second) = i;
        }
        ThetaExpr e(ctx);
        if (first != second) {
            // theta_i theta_j -> (b_j z_j theta_i - b_i z_i theta_j)/(z_i - z_j)
            int i = first + 1, j = second + 1;
            RatFun den = zvar(ctx, i) - zvar(ctx, j);
            RatFun bi = p.b[static_cast<size_t>(first)].to_ratfun();
            RatFun bj = p.b[static_cast<size_t>(second)].to_ratfun();
            e.add_term(unit(r, i), bj * zvar(ctx, j) / den);
            e.add_term(unit(r, j), -(bi * zvar(ctx, i)) / den);
            return e;
        }
        // square rule for theta_i^2
        int i = first + 1;
        RatFun zi = zvar(ctx, i);
        RatFun omz = RatFun::one(ctx) - zi;
        RatFun bi = p.b[static_cast<size_t>(first)].to_ratfun();
        RatFun a = p.a.to_ratfun();
        RatFun c = p.c.to_ratfun();
        RatFun rii = ((a + bi) * zi - (c - RatFun::one(ctx))) / omz;
        RatFun pi = bi * zi / omz;
        for (int j = 1; j <= r; ++j) {
            if (j == i) continue;
            ThetaMono m = unit(r, i);
            m[static_cast<size_t>(j - 1)] += 1;
            e.add_term(m, RatFun::constant(ctx, -1));
            e.add_term(unit(r, j), pi);
        }
        e.add_term(unit(r, i), rii);
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), a * pi);
        return e;
    };
    return rules;
}

std::pair<ThetaExpr, FdParams> fd_unit_step(const FdParams& params, FdStep which) {
    const ContextPtr ctx = params.context();
    const int r = params.r();
    ThetaExpr e(ctx);
    FdParams target = params;
    const RatFun one = RatFun::one(ctx);
    switch (which.kind) {
    case FdStepKind::AUp: {
        check_prefactor(params.a, "a");
        RatFun a = params.a.to_ratfun();
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), one);
        for (int j = 1; j <= r; ++j) e.add_term(unit(r, j), one / a);
        target.a = params.a.shifted(1);
        break;
    }
    case FdStepKind::BUp: {
        const ParamExpr& bi = params.b[static_cast<size_t>(which.i - 1)];
        check_prefactor(bi, "b" + std::to_string(which.i));
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), one);
        e.add_term(unit(r, which.i), one / bi.to_ratfun());
        target.b[static_cast<size_t>(which.i - 1)] = bi.shifted(1);
        break;
    }
    case FdStepKind::CDown: {
        ParamExpr cm1 = params.c.shifted(-1);
        check_prefactor(cm1, "c-1");
        RatFun d = cm1.to_ratfun();
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), one);
        for (int j = 1; j <= r; ++j) e.add_term(unit(r, j), one / d);
        target.c = cm1;
        break;
    }
    case FdStepKind::ADown: {
        ParamExpr ca = params.c - params.a;
        check_prefactor(ca, "c-a");
        RatFun d = ca.to_ratfun();
        RatFun cst = RatFun::zero(ctx);
        for (int j = 1; j <= r; ++j) {
            RatFun zj = zvar(ctx, j);
            e.add_term(unit(r, j), (one - zj) / d);
            cst = cst - params.b[static_cast<size_t>(j - 1)].to_ratfun() * zj;
        }
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), (cst + d) / d);
        target.a = params.a.shifted(-1);
        break;
    }
    case FdStepKind::BDown: {
        ParamExpr cb = params.c - params.sum_b();
        check_prefactor(cb, "c-sum(b)");
        RatFun d = cb.to_ratfun();
        RatFun zi = zvar(ctx, which.i);
        for (int j = 1; j <= r; ++j) {
            RatFun zj = zvar(ctx, j);
            e.add_term(unit(r, j), zi * (one - zj) / zj / d);
        }
        e.add_term(ThetaMono(static_cast<size_t>(r), 0),
                   (d - params.a.to_ratfun() * zi) / d);
        target.b[static_cast<size_t>(which.i - 1)] =
            params.b[static_cast<size_t>(which.i - 1)].shifted(-1);
        break;
    }
    case FdStepKind::CUp: {
        ParamExpr ca = params.c - params.a;
        ParamExpr cb = params.c - params.sum_b();
        check_prefactor(params.c, "c");
        check_prefactor(ca, "c-a");
        check_prefactor(cb, "c-sum(b)");
        RatFun c = params.c.to_ratfun();
        RatFun fca = ca.to_ratfun(), fcb = cb.to_ratfun();
        RatFun cab = (ca + cb - params.c).to_ratfun(); // c - a - sum(b)
        for (int j = 1; j <= r; ++j) {
            RatFun zj = zvar(ctx, j);
            e.add_term(unit(r, j), c * (one - zj) / zj / fca / fcb);
        }
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), c * cab / fca / fcb);
        target.c = params.c.shifted(1);
        break;
    }
    }
    return {std::move(e), std::move(target)};
}

FdReduction fd_index_change(const FdShift& shift, const FdParams& params) {
    const int r = params.r();
    if (r < 1) fail(ErrorCode::DegenerateInput, "need at least one variable");
    if (static_cast<int>(shift.m_b.size()) != r)
        fail(ErrorCode::DegenerateInput, "shift arity does not match parameters");

    // chain of intermediate parameter tuples, slot order a, b1..br, c;
    // each link carries the step taken at its far end, so that
    // F(chain[k]) = E_k F(chain[k+1])
    enum class Slot { A, B, C };
    struct Link { FdParams base; FdStep step; };
    std::vector<Link> links;
    FdParams cur = params;
    auto walk = [&](Slot slot, int i, long count) {
        for (long k = 0; k < std::abs(count); ++k) {
            long delta = count > 0 ? 1 : -1;
            FdParams next = cur;
            switch (slot) {
            case Slot::A: next.a = next.a.shifted(delta); break;
            case Slot::B:
                next.b[static_cast<size_t>(i - 1)] =
                    next.b[static_cast<size_t>(i - 1)].shifted(delta);
                break;
            case Slot::C: next.c = next.c.shifted(delta); break;
            }
            FdStep step;
            step.i = i;
            switch (slot) {
            case Slot::A: step.kind = delta > 0 ? FdStepKind::ADown : FdStepKind::AUp; break;
            case Slot::B: step.kind = delta > 0 ? FdStepKind::BDown : FdStepKind::BUp; break;
            case Slot::C: step.kind = delta > 0 ? FdStepKind::CDown : FdStepKind::CUp; break;
            }
            links.push_back({next, step});
            cur = next;
        }
    };
    walk(Slot::A, 0, shift.m_a);
    for (int i = 1; i <= r; ++i) walk(Slot::B, i, shift.m_b[static_cast<size_t>(i - 1)]);
    walk(Slot::C, 0, shift.m_c);

    const FdParams target = cur;
    // left-to-right composition keeps the theta-derivatives acting on the
    // small unit-step factors instead of the accumulated coefficients
    ThetaExpr acc = ThetaExpr::identity(params.context());
    for (const auto& l : links) {
        auto [e, tgt] = fd_unit_step(l.base, l.step);
        (void)tgt;
        acc = rewrite_to_basis(compose(acc, e), fd_rules(l.base));
    }

    FdReduction red;
    red.target = target;
    red.coeffs.push_back(acc.coeff(ThetaMono(static_cast<size_t>(r), 0)));
    for (int i = 1; i <= r; ++i) red.coeffs.push_back(acc.coeff(unit(r, i)));
    return red;
}

std::vector<ExceptionalHit> fd_exceptional(const FdParams& params) {
    std::vector<ExceptionalHit> hits;
    auto check = [&](const ParamExpr& e, const std::string& which) {
        if (e.is_integer_valued()) hits.push_back({which, e.offset()});
    };
    check(params.a, "a");
    for (int i = 1; i <= params.r(); ++i)
        check(params.b[static_cast<size_t>(i - 1)], "b" + std::to_string(i));
    check(params.c - params.a, "c-a");
    check(params.c - params.sum_b(), "c-sum(b)");
    return hits;
}

} // namespace hyperred
