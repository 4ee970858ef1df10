#include <gtest/gtest.h>

#include "support.hpp"

using namespace kummer;
using kummer::testing::Gen;
using kummer::testing::rf;

namespace {

Algebraic Q(long n, long d = 1) { return Algebraic(make_rational(n, d)); }
const RationalFunction L = RationalFunction::x();

} // namespace

TEST(SchwarzianRf, Examples)
{
    EXPECT_EQ(schwarzian_rf(L * L), rf("-3/(2*l^2)"));
    EXPECT_EQ(schwarzian_rf(L * L * L), rf("-4/l^2"));
    EXPECT_EQ(schwarzian_rf(rf("(l^3+1)/(l+2)")), rf("-6*(l^4 + 8*l^3 + 24*l^2 + 4*l + 2)/(2*l^3 + 6*l^2 - 1)^2"));
    try {
        (void)schwarzian_rf(RationalFunction(5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ConstantInput);
    }
}

TEST(SchwarzianRf, MobiusKernel)
{
    Gen g(31);
    for (int n = 0; n < 100; ++n) {
        Rational a = g.rational(), b = g.rational(), c = g.rational(), e = g.rational();
        if (sgn(a * e - b * c) == 0)
            continue;
        EXPECT_TRUE(schwarzian_rf(to_rational_function(Mobius(a, b, c, e))).is_zero());
    }
}

TEST(SchwarzianRf, KernelIsExactlyDegreeOne)
{
    Gen g(32);
    int nonconstant = 0;
    for (int n = 0; n < 150; ++n) {
        RationalFunction f = g.rf(3);
        if (f.derivative().is_zero())
            continue;
        ++nonconstant;
        int degree = std::max(f.num().degree(), f.den().degree());
        EXPECT_EQ(schwarzian_rf(f).is_zero(), degree == 1) << f.to_string();
    }
    EXPECT_GT(nonconstant, 100);
}

TEST(SchwarzianJet, Examples)
{
    EXPECT_EQ(schwarzian_jet(ExactJet(Q(0), Q(0), {Q(2), Q(2), Q(0)})), Q(-3, 2));
    EXPECT_EQ(schwarzian_jet(ExactJet(Q(1), Q(1), {Q(1), Q(0), Q(5)})), Q(5));
    BasicMobius<Algebraic> m(Q(1), Q(2), Q(3), Q(-1));
    EXPECT_TRUE(schwarzian_jet(m.jet_at(Algebraic::gaussian(1, 1), 3)).is_zero());
    try {
        (void)schwarzian_jet(ExactJet(Q(0), Q(0), {Q(1), Q(0)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OrderTooLow);
    }
}

TEST(ChainRule, Examples)
{
    EXPECT_TRUE(chain_rule_check(to_rational_function(Mobius(Rational(1), Rational(2), Rational(3), Rational(4))), rf("l^3 - l")).is_zero());
    EXPECT_TRUE(chain_rule_check(L * L, L + 1).is_zero());
    EXPECT_EQ(schwarzian_rf((L + 1) * (L + 1)), rf("-3/(2*(l+1)^2)"));
    EXPECT_TRUE(chain_rule_check(L * L, L * L * L).is_zero());
}

TEST(ChainRule, CocycleOnRandomPairs)
{
    Gen g(33);
    int checked = 0;
    while (checked < 60) {
        RationalFunction tau = g.rf(3), phi = g.rf(3);
        if (tau.derivative().is_zero() || phi.derivative().is_zero())
            continue;
        RationalFunction r;
        try {
            r = chain_rule_check(tau, phi);
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), Errc::DivisionByZero);
            continue;
        }
        EXPECT_TRUE(r.is_zero());
        ++checked;
    }
}

TEST(MobiusJet, Examples)
{
    ExactJet j(Q(0), Q(1), {Q(1), Q(0), Q(0)});
    EXPECT_EQ(mobius_apply_jet(BasicMobius<Algebraic>::identity(), j), j);
    BasicMobius<Algebraic> inv(Q(0), Q(1), Q(1), Q(0));
    ExactJet r = mobius_apply_jet(inv, j);
    EXPECT_EQ(r.target(), Q(1));
    EXPECT_EQ(r.coeffs(), (std::vector<Algebraic>{Q(-1), Q(2), Q(-6)}));
    try {
        (void)mobius_apply_jet(inv, ExactJet(Q(0), Q(0), {Q(1)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PoleOfMobius);
    }
}

TEST(MobiusJet, SchwarzianInvariance)
{
    Gen g(34);
    for (int n = 0; n < 60; ++n) {
        ExactJet j(g.gaussian(), g.gaussian(), {g.gaussian() + Q(9), g.gaussian(), g.gaussian()});
        ExactJet mj;
        try {
            BasicMobius<Algebraic> m(g.gaussian(), g.gaussian(), g.gaussian(), g.gaussian() + Q(7));
            mj = mobius_apply_jet(m, j);
        } catch (const Error&) {
            continue;
        }
        EXPECT_EQ(schwarzian_jet(mj), schwarzian_jet(j));
    }
}

TEST(MobiusJet, NormalizedRepresentative)
{
    Mobius m(Rational(2), Rational(4), Rational(6), Rational(10));
    EXPECT_EQ(m.a(), Rational(1));
    EXPECT_EQ(m.b(), Rational(2));
    Mobius z(Rational(0), Rational(3), Rational(3), Rational(0));
    EXPECT_EQ(z.b(), Rational(1));
    EXPECT_EQ(z.c(), Rational(1));
}

TEST(KummerBuild, Examples)
{
    KummerSystem k0 = kummer_build(RationalFunction(0));
    EXPECT_EQ(k0.linearized.to_string(), "f''' = 0");
    EXPECT_TRUE(k0.consistent());
    KummerSystem kl = kummer_build(L);
    EXPECT_EQ(kl.linearized.to_string(), "f''' + 2*l*f' + 1*f = 0");
    KummerSystem ki = kummer_build(RationalFunction(1) / L);
    EXPECT_EQ(ki.linearized, LinearODE({rf("-1/l^2"), rf("2/l"), RationalFunction(0)}));
    EXPECT_TRUE(ki.consistent());
}

TEST(KummerBuild, ResidualVanishesOnIdentityAndMobiusForZero)
{
    KummerSystem k = kummer_build(rf("l^2 - 1/l"));
    ExactJet id = ExactJet::identity(Q(3), 3);
    EXPECT_TRUE(evaluate(k.residual, jet_env(id)).is_zero());
    EXPECT_TRUE(evaluate(k.cleared, jet_env(id)).is_zero());
    KummerSystem k0 = kummer_build(RationalFunction(0));
    BasicMobius<Algebraic> m(Q(1), Q(2), Q(3), Q(-1));
    EXPECT_TRUE(evaluate(k0.residual, jet_env(m.jet_at(Q(1), 3))).is_zero());
}

TEST(KummerBuild, DeterminedInTopDerivative)
{
    KummerSystem k = kummer_build(rf("l"));
    DiffExpr top = k.residual.partial_jet(3);
    Gen g(35);
    for (int n = 0; n < 10; ++n) {
        JetEnv<Algebraic> e{g.gaussian(), {g.gaussian(), g.gaussian() + Q(5), g.gaussian(), g.gaussian()}};
        EXPECT_EQ(evaluate(top, e), Q(1) / e.jet[1]);
    }
}

TEST(KummerBuild, LinearizedEqualsSymmetricPower)
{
    Gen g(36);
    for (int n = 0; n < 25; ++n) {
        RationalFunction R(g.poly(4), g.nonzero_poly(4));
        KummerSystem k = kummer_build(R);
        EXPECT_TRUE(k.consistent()) << R.to_string();
    }
}

TEST(KummerClosure, ComposedSolutionsSolve)
{
    // prolonged residual-0 jets compose to residual-0 jets, to order 5
    Gen g(37);
    RationalFunction R = rf("(l^2 - 2)/(l^2 + 1)");
    Prolongation P(kummer_residual(R));
    auto off_poles = [&] {
        Algebraic v;
        do
            v = g.gaussian();
        while ((v * v + Q(1)).is_zero());
        return v;
    };
    for (int n = 0; n < 40; ++n) {
        Algebraic x = off_poles(), y = off_poles(), z = off_poles();
        ExactJet j1 = P.prolong(ExactJet(x, y, {g.gaussian() + Q(3), g.gaussian()}), 5);
        ExactJet j2 = P.prolong(ExactJet(y, z, {g.gaussian() - Q(3), g.gaussian()}), 5);
        ExactJet c = compose(j2, j1);
        for (auto& r : P.residuals(c, 2))
            EXPECT_TRUE(r.is_zero());
        for (auto& r : P.residuals(invert(j1), 2))
            EXPECT_TRUE(r.is_zero());
    }
}

TEST(Foliation, Examples)
{
    auto at = [](const RationalFunction& R, long l, long l1, long l2) {
        JetEnv<Algebraic> e{Q(0), {Q(l), Q(l1), Q(l2)}};
        return evaluate(foliation_rhs(R), e);
    };
    EXPECT_EQ(at(RationalFunction(0), 0, 1, 0), Q(0));
    EXPECT_EQ(at(RationalFunction(1), 0, 1, 0), Q(1));
    EXPECT_EQ(at(L, 2, 1, 2), Q(8));
}
