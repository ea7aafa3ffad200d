#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperred/fs.hpp"

using namespace hyperred;

namespace {

const ThetaMono M0{0, 0, 0}, M1{1, 0, 0}, M2{0, 1, 0}, M3{0, 0, 1};
const ThetaMono M12{1, 1, 0}, M13{1, 0, 1};

ThetaExpr from_strings(const ContextPtr& ctx,
                       const std::vector<std::pair<ThetaMono, std::string>>& terms) {
    ThetaExpr e(ctx);
    for (const auto& [m, s] : terms) e.add_term(m, parse_ratfun(ctx, s));
    return e;
}

void check_coeffs(const FsReduction& red, const std::vector<std::string>& expected) {
    REQUIRE(red.coeffs.size() == 6);
    const ContextPtr& ctx = red.target.context();
    for (size_t k = 0; k < 6; ++k)
        CHECK(ratfun_equal(red.coeffs[k], parse_ratfun(ctx, expected[k])));
}

} // namespace

TEST_CASE("zero shift is the identity reduction") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    FsReduction red = fs_index_change({0, 0, {0, 0, 0}, 0}, p);
    CHECK(red.target == p);
    CHECK(red.coeffs[0] == RatFun::one(ctx));
    for (size_t k = 1; k < 6; ++k) CHECK(red.coeffs[k].is_zero());
}

TEST_CASE("the (z2-z3) relation eliminates theta_2 theta_3") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    ThetaExpr nf = theta_normal_form(ThetaMono{0, 1, 1}, fs_rules(p));
    ThetaExpr expected = from_strings(ctx, {
        {M2, "b3*z3/(z2-z3)"},
        {M3, "-b2*z2/(z2-z3)"},
    });
    CHECK(nf.equivalent(expected));
}

TEST_CASE("canonical square equations") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    RewriteSystem rules = fs_rules(p);

    ThetaExpr nf1 = theta_normal_form(ThetaMono{2, 0, 0}, rules);
    ThetaExpr exp1 = from_strings(ctx, {
        {M12, "-1/(1-z1)"},
        {M13, "-1/(1-z1)"},
        {M1, "((a1+b1)*z1-(c-1))/(1-z1)"},
        {M0, "a1*b1*z1/(1-z1)"},
    });
    CHECK(nf1.equivalent(exp1));

    // theta_2^2 with the non-basis theta_2 theta_3 substituted
    ThetaExpr nf2 = theta_normal_form(ThetaMono{0, 2, 0}, rules);
    ThetaExpr t23 = theta_normal_form(ThetaMono{0, 1, 1}, rules);
    ThetaExpr exp2 = t23.scaled(RatFun::constant(ctx, -1)) + from_strings(ctx, {
        {M12, "-1/(1-z2)"},
        {M2, "((a2+b2)*z2-(c-1))/(1-z2)"},
        {M3, "b2*z2/(1-z2)"},
        {M0, "a2*b2*z2/(1-z2)"},
    });
    CHECK(nf2.equivalent(exp2));
}

TEST_CASE("third mixed derivatives match the degree-3 relations") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    RewriteSystem rules = fs_rules(p);
    RatFun pref12 = parse_ratfun(ctx, "1 - 1/((1-z1)*(1-z2))");
    RatFun pref13 = parse_ratfun(ctx, "1 - 1/((1-z1)*(1-z3))");

    ThetaExpr nf123 = theta_normal_form(ThetaMono{1, 1, 1}, rules);
    ThetaExpr exp123 = from_strings(ctx, {
        {M13, "b2*z2/(z3-z2)"},
        {M12, "-b3*z3/(z3-z2)"},
    });
    CHECK(nf123.equivalent(exp123));

    ThetaExpr nf112 = theta_normal_form(ThetaMono{2, 1, 0}, rules);
    ThetaExpr exp112 = from_strings(ctx, {
        {M12, "((a1+b1)*z1-(c-1))/(1-z1) - ((a2+b2)*z2-(c-1))/((1-z1)*(1-z2))"},
        {M13, "-b2*z2/((1-z1)*(1-z2))"},
        {M1, "-a2*b2*z2/((1-z1)*(1-z2))"},
        {M2, "a1*b1*z1/(1-z1)"},
    }).scaled(pref12.inverse());
    CHECK(nf112.equivalent(exp112));

    ThetaExpr nf113 = theta_normal_form(ThetaMono{2, 0, 1}, rules);
    ThetaExpr exp113 = from_strings(ctx, {
        {M13, "((a1+b1)*z1-(c-1))/(1-z1) - ((a2+b3)*z3-(c-1))/((1-z1)*(1-z3))"},
        {M12, "-b3*z3/((1-z1)*(1-z3))"},
        {M1, "-a2*b3*z3/((1-z1)*(1-z3))"},
        {M3, "a1*b1*z1/(1-z1)"},
    }).scaled(pref13.inverse());
    CHECK(nf113.equivalent(exp113));

    ThetaExpr nf122 = theta_normal_form(ThetaMono{1, 2, 0}, rules);
    ThetaExpr exp122 = nf123.scaled(RatFun::constant(ctx, -1)) + from_strings(ctx, {
        {M12, "((a2+b2)*z2-(c-1))/(1-z2) - ((a1+b1)*z1-(c-1))/((1-z1)*(1-z2))"},
        {M13, "b2*z2/(1-z2)"},
        {M2, "-a1*b1*z1/((1-z1)*(1-z2))"},
        {M1, "a2*b2*z2/(1-z2)"},
    }).scaled(pref12.inverse());
    CHECK(nf122.equivalent(exp122));

    ThetaExpr nf133 = theta_normal_form(ThetaMono{1, 0, 2}, rules);
    ThetaExpr exp133 = nf123.scaled(RatFun::constant(ctx, -1)) + from_strings(ctx, {
        {M13, "((a2+b3)*z3-(c-1))/(1-z3) - ((a1+b1)*z1-(c-1))/((1-z1)*(1-z3))"},
        {M12, "b3*z3/(1-z3)"},
        {M3, "-a1*b1*z1/((1-z1)*(1-z3))"},
        {M1, "a2*b3*z3/(1-z3)"},
    }).scaled(pref13.inverse());
    CHECK(nf133.equivalent(exp133));
}

TEST_CASE("every monomial of degree <= 4 normalizes into the six-element basis") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    RewriteSystem rules = fs_rules(p);
    auto in_basis = [](const ThetaMono& m) {
        return mono_degree(m) <= 1 || (m[0] == 1 && m[1] + m[2] == 1);
    };
    for (unsigned i = 0; i <= 4; ++i)
        for (unsigned j = 0; i + j <= 4; ++j)
            for (unsigned k = 0; i + j + k <= 4; ++k) {
                ThetaExpr nf = theta_normal_form(ThetaMono{i, j, k}, rules);
                for (const auto& [m, cf] : nf.terms()) CHECK(in_basis(m));
            }
}

TEST_CASE("shift (1,-1,0,0,0,0)") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    FsReduction red = fs_index_change({1, -1, {0, 0, 0}, 0}, p);
    CHECK(red.target.a1 == p.a1.shifted(1));
    CHECK(red.target.a2 == p.a2.shifted(-1));
    CHECK(red.target.b == p.b);
    CHECK(red.target.c == p.c);
    check_coeffs(red, {
        "(a1+b1*z1+b2+b3-c+1)/(a1+b2+b3-c+1)",
        "-(1-z1)/(a1+b2+b3-c+1)",
        "-(z2*(-a1-b2-b3+c-1) - b1*z1*(z2-1))/((a2-1)*z2*(a1+b2+b3-c+1))",
        "-(z3*(-a1-b2-b3+c-1) - b1*z1*(z3-1))/((a2-1)*z3*(a1+b2+b3-c+1))",
        "-(z2-z1*(z2-1))/((a2-1)*z2*(a1+b2+b3-c+1))",
        "-(z3-z1*(z3-1))/((a2-1)*z3*(a1+b2+b3-c+1))",
    });
}

TEST_CASE("shift (1,0,0,0,1,2)") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    FsReduction red = fs_index_change({1, 0, {0, 0, 1}, 2}, p);
    CHECK(red.target.a1 == p.a1.shifted(1));
    CHECK(red.target.a2 == p.a2);
    CHECK(red.target.b[2] == p.b[2].shifted(1));
    CHECK(red.target.c == p.c.shifted(2));
    check_coeffs(red, {
        "-(b1*z1*(z2-1)*(-a2*z3-a1+c) - z2*(a2*(z3*(b3-c)+b2*(z3-1))+c*(c+1))"
        " + a2*b3*z3 - a2*c*z3 + c^2 + c)/(c*(c+1)*(z2-1))",
        "(z1*(a2*z3+a1-c) - a2*z3 + c)/(c*(c+1))",
        "-(z2*(a2-b2*z3-b3*z3+b2+c*z3-2*c-1) - a2*z3 - b1*z1*(z2-1)*(z3-1)"
        " + b3*z3 + c + z3)/(c*(c+1)*(z2-1))",
        "(z2*(z3*(b3-c)+b2*(z3-1)+c) + b1*z1*(z2-1)*(z3-1) - b3*z3 + c*z3 - c)"
        "/(c*(c+1)*(z2-1))",
        "(z1*(z2-1)-z2)*(z3-1)/(c*(c+1)*(z2-1))",
        "-(-z3*z1+z1+z3)/(c^2+c)",
    });
}

TEST_CASE("unit-step round trips normalize to the identity") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    RewriteSystem rules = fs_rules(p);
    ThetaExpr id = ThetaExpr::identity(ctx);
    std::vector<std::pair<FsStep, FsStep>> pairs{
        {{FsStepKind::A1Up, 0}, {FsStepKind::A1Down, 0}},
        {{FsStepKind::A2Up, 0}, {FsStepKind::A2Down, 0}},
        {{FsStepKind::BUp, 1}, {FsStepKind::BDown, 1}},
        {{FsStepKind::BUp, 2}, {FsStepKind::BDown, 2}},
        {{FsStepKind::BUp, 3}, {FsStepKind::BDown, 3}},
        {{FsStepKind::CUp, 0}, {FsStepKind::CDown, 0}},
    };
    for (const auto& [up, down] : pairs) {
        auto [eu, q] = fs_unit_step(p, up);
        auto [ed, back] = fs_unit_step(q, down);
        CHECK(back == p);
        CHECK(rewrite_to_basis(compose(ed, eu), rules).equivalent(id));

        auto [ed2, q2] = fs_unit_step(p, down);
        auto [eu2, back2] = fs_unit_step(q2, up);
        CHECK(back2 == p);
        CHECK(rewrite_to_basis(compose(eu2, ed2), rules).equivalent(id));
    }
}

TEST_CASE("coefficients respect the (b2,z2)<->(b3,z3) symmetry") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    FsReduction r2 = fs_index_change({0, 0, {0, 1, 0}, 0}, p);
    FsReduction r3 = fs_index_change({0, 0, {0, 0, 1}, 0}, p);
    // symbols a1, a2, b1, b2, b3, c, z1, z2, z3
    std::vector<Rational> pt{{3, 7}, {5, 9}, {1, 4}, {2, 5}, {3, 8}, {7, 3},
                             {1, 6}, {2, 11}, {3, 13}};
    std::vector<Rational> sw{pt[0], pt[1], pt[2], pt[4], pt[3], pt[5],
                             pt[6], pt[8], pt[7]};
    // (A,B,C,D,E,F) -> (A,B,D,C,F,E) under the swap
    const size_t perm[6] = {0, 1, 3, 2, 5, 4};
    for (size_t k = 0; k < 6; ++k)
        CHECK(eval_ratfun_exact(r2.coeffs[k], pt) ==
              eval_ratfun_exact(r3.coeffs[perm[k]], sw));
}

TEST_CASE("exceptional parameter detection") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    CHECK(fs_exceptional(p).empty());

    FsParams q = p;
    q.c = q.a1 + q.b[1] + q.b[2] + Rational(2);
    auto hits = fs_exceptional(q);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].which == "a1+b2+b3-c");
    CHECK(hits[0].value == Rational(-2));
}

TEST_CASE("vanishing step prefactor refuses the whole reduction") {
    auto ctx = fs_context();
    FsParams p = fs_symbolic_params(ctx);
    p.a2 = ParamExpr::number(ctx, 1);
    CHECK_THROWS_AS(fs_index_change({0, -1, {0, 0, 0}, 0}, p), Error);
    try {
        fs_index_change({0, -1, {0, 0, 0}, 0}, p);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExceptionalStep);
    }
}
