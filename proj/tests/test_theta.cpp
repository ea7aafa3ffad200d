#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperred/fd.hpp"

using namespace hyperred;

namespace {

ThetaExpr rand_expr(const ContextPtr& ctx, std::mt19937& rng, int nterms = 3,
                    unsigned maxdeg = 2) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<unsigned> expo(0, maxdeg);
    ThetaExpr e(ctx);
    for (int t = 0; t < nterms; ++t) {
        ThetaMono m(static_cast<size_t>(ctx->num_vars()));
        for (auto& x : m) x = expo(rng);
        int num = coef(rng), den = 1 + static_cast<int>(expo(rng));
        RatFun r = RatFun::constant(ctx, Rational(num, den));
        if (expo(rng) % 2) r = r * RatFun::variable(ctx, 1);
        e.add_term(m, r);
    }
    return e;
}

} // namespace

TEST_CASE("apply_theta on simple expressions") {
    auto ctx = fd_context(2);
    ThetaExpr id = ThetaExpr::identity(ctx);

    ThetaExpr t1 = apply_theta(1, id);
    CHECK(t1.terms().size() == 1);
    CHECK(t1.coeff(ThetaMono{1, 0}) == RatFun::one(ctx));

    // theta_1 (z1 * theta_2) = z1 theta_2 + z1 theta_1 theta_2
    RatFun z1 = RatFun::variable(ctx, 1);
    ThetaExpr e = ThetaExpr::monomial(ctx, ThetaMono{0, 1}, z1);
    ThetaExpr te = apply_theta(1, e);
    CHECK(te.terms().size() == 2);
    CHECK(te.coeff(ThetaMono{0, 1}) == z1);
    CHECK(te.coeff(ThetaMono{1, 1}) == z1);
}

TEST_CASE("theta operators commute") {
    auto ctx = fd_context(3);
    std::mt19937 rng(31);
    for (int it = 0; it < 10; ++it) {
        ThetaExpr e = rand_expr(ctx, rng);
        CHECK(apply_theta(1, apply_theta(2, e)).equivalent(apply_theta(2, apply_theta(1, e))));
        CHECK(apply_theta(2, apply_theta(3, e)).equivalent(apply_theta(3, apply_theta(2, e))));
    }
}

TEST_CASE("compose with identity") {
    auto ctx = fd_context(2);
    std::mt19937 rng(37);
    ThetaExpr id = ThetaExpr::identity(ctx);
    for (int it = 0; it < 10; ++it) {
        ThetaExpr e = rand_expr(ctx, rng);
        CHECK(compose(id, e).equivalent(e));
        CHECK(compose(e, id).equivalent(e));
    }
}

TEST_CASE("compose obeys the Leibniz rule on coefficients") {
    auto ctx = fd_context(2);
    RatFun f = parse_ratfun(ctx, "z1/(1-z1)");
    ThetaExpr fe = ThetaExpr::monomial(ctx, ThetaMono{0, 0}, f);
    ThetaExpr t1 = ThetaExpr::monomial(ctx, ThetaMono{1, 0}, RatFun::one(ctx));
    // theta_1 . f = theta_1(f) + f theta_1
    ThetaExpr lhs = compose(t1, fe);
    CHECK(ratfun_equal(lhs.coeff(ThetaMono{0, 0}), theta_deriv(f, 1)));
    CHECK(ratfun_equal(lhs.coeff(ThetaMono{1, 0}), f));
}

TEST_CASE("compose is associative") {
    auto ctx = fd_context(2);
    std::mt19937 rng(41);
    for (int it = 0; it < 6; ++it) {
        ThetaExpr a = rand_expr(ctx, rng, 2, 1);
        ThetaExpr b = rand_expr(ctx, rng, 2, 1);
        ThetaExpr c = rand_expr(ctx, rng, 2, 1);
        CHECK(compose(compose(a, b), c).equivalent(compose(a, compose(b, c))));
    }
}

TEST_CASE("mixed second derivative reduces to first derivatives") {
    auto ctx = fd_context(2);
    FdParams p = fd_symbolic_params(ctx);
    RewriteSystem rules = fd_rules(p);
    ThetaExpr nf = theta_normal_form(ThetaMono{1, 1}, rules);
    CHECK(nf.terms().size() == 2);
    CHECK(ratfun_equal(nf.coeff(ThetaMono{1, 0}), parse_ratfun(ctx, "b2*z2/(z1-z2)")));
    CHECK(ratfun_equal(nf.coeff(ThetaMono{0, 1}), parse_ratfun(ctx, "-b1*z1/(z1-z2)")));
}

TEST_CASE("normal forms stay inside the basis up to degree 4") {
    auto ctx = fd_context(2);
    FdParams p = fd_symbolic_params(ctx);
    RewriteSystem rules = fd_rules(p);
    for (unsigned i = 0; i <= 4; ++i)
        for (unsigned j = 0; i + j <= 4; ++j) {
            ThetaExpr nf = theta_normal_form(ThetaMono{i, j}, rules);
            for (const auto& [m, cf] : nf.terms()) CHECK(mono_degree(m) <= 1);
        }
}

TEST_CASE("rewriting a basis element is the identity") {
    auto ctx = fd_context(2);
    FdParams p = fd_symbolic_params(ctx);
    RewriteSystem rules = fd_rules(p);
    ThetaExpr e = ThetaExpr::monomial(ctx, ThetaMono{1, 0}, parse_ratfun(ctx, "a/(1-z1)"));
    CHECK(rewrite_to_basis(e, rules).equivalent(e));
}

TEST_CASE("exhausted budget reports non-termination") {
    auto ctx = fd_context(2);
    FdParams p = fd_symbolic_params(ctx);
    RewriteSystem rules = fd_rules(p);
    ThetaExpr e = ThetaExpr::monomial(ctx, ThetaMono{3, 3}, RatFun::one(ctx));
    CHECK_THROWS_AS(rewrite_to_basis(e, rules, 1), Error);
    try {
        rewrite_to_basis(e, rules, 1);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NonTermination);
    }
}
