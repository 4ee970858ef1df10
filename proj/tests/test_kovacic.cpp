#include <gtest/gtest.h>

#include "riccati_oracle.hpp"
#include "support.hpp"

using namespace kummer;
using kummer::testing::Gen;
using kummer::testing::rf;

namespace {

Algebraic Q(long n, long d = 1) { return Algebraic(make_rational(n, d)); }
const RationalFunction L = RationalFunction::x();

RationalFunction rational_u(const CaseVerdict& v)
{
    auto u = to_rational_function(v.certificate.u);
    EXPECT_TRUE(u.has_value());
    return u.value_or(RationalFunction());
}

const char* const kSuite[] = {
    "0", "-2*(1+l^2)", "1/(2*l^2)", "l", "(3-4*l)/(8*l^2)", "2/(l^2+1)",
    "-2/l^2", "l^2+1", "-3/(8*l^2)+1/l", "3/(16*l^2)", "1/(l^3-2)", "l^3",
};

} // namespace

TEST(LocalData, MatchesPartialFractions)
{
    for (const char* s : {"(3-4*l)/(8*l^2)", "2/(l^2+1)", "l^2/(l-1)^4", "(l+1)/((l^2-3)*l^3)"}) {
        RationalFunction R = rf(s);
        LocalExponentData d = local_structure(R);
        EXPECT_EQ(d.r, -R / 2);
        PartialFractions pf = partial_fractions(d.r);
        ASSERT_EQ(d.poles.size(), pf.poles.size()) << s;
        for (std::size_t i = 0; i < pf.poles.size(); ++i) {
            EXPECT_EQ(*d.poles[i].pole.location, *pf.poles[i].pole.location);
            EXPECT_EQ(d.poles[i].pole.order, static_cast<int>(pf.poles[i].ladder.size()));
            EXPECT_FALSE(pf.poles[i].ladder.back().is_zero());
        }
    }
    LocalExponentData c = local_structure(rf("1/(l^3-2)"));
    ASSERT_EQ(c.poles.size(), 1u);
    EXPECT_FALSE(c.all_split());
    EXPECT_EQ(c.poles[0].pole.order, 1);
    EXPECT_EQ(local_structure(L).infinity.order, -1);
    EXPECT_EQ(local_structure(rf("1/(2*l^2)")).infinity.order, 2);
}

TEST(LocalData, ExponentsOfRegularSingularPoint)
{
    LocalExponentData d = local_structure(rf("1/(2*l^2)"));
    fill_case1(d);
    ASSERT_EQ(d.poles.size(), 1u);
    ASSERT_EQ(d.poles[0].case1.size(), 1u);
    EXPECT_EQ(d.poles[0].case1[0].alpha, Q(1, 2));
    fill_case2(d);
    EXPECT_EQ(d.poles[0].case2_exponents, std::vector<long>{2});
    LocalExponentData a = local_structure(rf("-2*(1+l^2)"));
    fill_case1(a);
    ASSERT_EQ(a.infinity.case1.size(), 2u);
    EXPECT_EQ(a.infinity.case1[0].alpha, Q(0));
    EXPECT_EQ(a.infinity.case1[1].alpha, Q(-1));
}

TEST(Case1, Examples)
{
    EXPECT_TRUE(case1_search(RationalFunction(0))->is_zero());
    EXPECT_EQ(to_rational_function(*case1_search(rf("-2*(1+l^2)"))), L);
    EXPECT_EQ(to_rational_function(*case1_search(rf("1/(2*l^2)"))), RationalFunction(1) / (2 * L));
    EXPECT_FALSE(case1_search(L).has_value());
    EXPECT_FALSE(case1_search(rf("l^2+1")).has_value());
    try {
        (void)case1_search(rf("1/(l^3-2)"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnsupportedField);
    }
}

TEST(Case1, IrrationalExponents)
{
    auto u = case1_search(rf("-2/l^2"));
    ASSERT_TRUE(u.has_value());
    EXPECT_FALSE(to_rational_function(*u).has_value());
    EXPECT_TRUE(riccati_residual(rf("-2/l^2"), *u).is_zero());
}

TEST(Case1, PlantedSolutionsAreFound)
{
    // R = -2(u' + u^2) for random rational u; the search must find some solution
    Gen g(51);
    for (int n = 0; n < 40; ++n) {
        RationalFunction u0(g.poly(1));
        for (int k = 0; k < 2; ++k)
            u0 += RationalFunction(Polynomial(g.rational(3, 2)), Polynomial::x() - Polynomial(Rational(g.integer(-3, 3))));
        RationalFunction R = RationalFunction(-2) * (u0.derivative() + u0 * u0);
        std::optional<AlgFunc> u;
        try {
            u = case1_search(R);
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), Errc::UnsupportedField);
            continue;
        }
        ASSERT_TRUE(u.has_value()) << R.to_string();
        EXPECT_TRUE(riccati_residual(R, *u).is_zero()) << R.to_string();
    }
}

TEST(Case2, DihedralInstance)
{
    RationalFunction R = rf("(3-4*l)/(8*l^2)");
    EXPECT_FALSE(case1_search(R).has_value());
    auto c = case2_search(R);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(to_rational_function(c->phi), RationalFunction(1) / (2 * L));
    auto [lin, con] = quadratic_elimination(R, *c);
    EXPECT_TRUE(lin.is_zero());
    EXPECT_TRUE(con.is_zero());
    // a perturbed minimal polynomial fails the elimination
    QuadraticCertificate bad = *c;
    bad.q += AlgFunc(Q(1));
    EXPECT_FALSE(quadratic_elimination(R, bad).second.is_zero());
    EXPECT_FALSE(case2_search(L).has_value());
    EXPECT_FALSE(case2_search(RationalFunction(0)).has_value());
}

TEST(Case3Screen, Examples)
{
    EXPECT_EQ(case3_screen(L), Case3Screen::Impossible);
    EXPECT_EQ(case3_screen(rf("1/(2*l^2)")), Case3Screen::Possible);
    EXPECT_EQ(case3_screen(rf("1/l^3")), Case3Screen::Impossible);
    EXPECT_EQ(case3_screen(rf("2/(l^2+1)")), Case3Screen::Possible);
}

TEST(Classify, Examples)
{
    CaseVerdict z = classify(RationalFunction(0));
    EXPECT_EQ(z.label, CaseLabel::Case1);
    EXPECT_EQ(z.galois(), "triangular");
    EXPECT_TRUE(z.certificate.u.is_zero());
    CaseVerdict a = classify(L);
    EXPECT_EQ(a.label, CaseLabel::Case4);
    EXPECT_EQ(a.galois(), "SL2/PSL2");
    EXPECT_EQ(a.certificate.kind, Certificate::Kind::None);
    CaseVerdict h = classify(rf("1/(2*l^2)"));
    EXPECT_EQ(h.label, CaseLabel::Case1);
    EXPECT_EQ(rational_u(h), RationalFunction(1) / (2 * L));
    EXPECT_EQ(classify(rf("(3-4*l)/(8*l^2)")).label, CaseLabel::Case2);
    EXPECT_EQ(classify(rf("2/(l^2+1)")).label, CaseLabel::Inconclusive);
    EXPECT_EQ(classify(rf("1/(l^3-2)")).label, CaseLabel::UnsupportedField);
    EXPECT_EQ(classify(rf("l^2+1")).label, CaseLabel::Case4);
    EXPECT_EQ(classify(rf("l^3")).label, CaseLabel::Case4);
}

TEST(Classify, CertificatesAreSound)
{
    for (const char* s : kSuite) {
        RationalFunction R = rf(s);
        CaseVerdict v = classify(R);
        switch (v.label) {
        case CaseLabel::Case1:
            EXPECT_TRUE(riccati_residual(R, v.certificate.u).is_zero()) << s;
            break;
        case CaseLabel::Case2: {
            auto [lin, con] = quadratic_elimination(R, *v.certificate.quadratic);
            EXPECT_TRUE(lin.is_zero() && con.is_zero()) << s;
            EXPECT_FALSE(case1_search(R).has_value()) << s;
            break;
        }
        case CaseLabel::Case4:
            EXPECT_FALSE(case1_search(R).has_value()) << s;
            EXPECT_FALSE(case2_search(R).has_value()) << s;
            EXPECT_EQ(case3_screen(R), Case3Screen::Impossible) << s;
            break;
        default:
            break;
        }
    }
}

TEST(Classify, Deterministic)
{
    for (const char* s : kSuite) {
        CaseVerdict a = classify(rf(s)), b = classify(rf(s));
        EXPECT_EQ(a.label, b.label);
        EXPECT_EQ(a.certificate.value_text(), b.certificate.value_text());
    }
}

TEST(Verdict, Examples)
{
    MinimalityReport z = verdict(RationalFunction(0));
    EXPECT_FALSE(z.minimal());
    ASSERT_TRUE(z.subgroupoid.has_value());
    EXPECT_EQ(z.subgroupoid->to_string(), "-p''/p'");
    EXPECT_TRUE(z.schwarzian_reduction_verified);

    MinimalityReport a = verdict(rf("-2*(1+l^2)"));
    EXPECT_EQ(a.verdict.certificate.value_text(), "l");
    ASSERT_TRUE(a.subgroupoid.has_value());
    EXPECT_EQ(a.subgroupoid->to_string(), "2*[p]*p' - 2*l - p''/p'");
    EXPECT_TRUE(a.schwarzian_reduction_verified);

    MinimalityReport m = verdict(L);
    EXPECT_TRUE(m.minimal());
    EXPECT_TRUE(m.equivalences.riccati && m.equivalences.groupoid && m.equivalences.galois_sl2 &&
                m.equivalences.strong_minimality && m.equivalences.liouvillian);
    EXPECT_FALSE(m.subgroupoid.has_value());

    MinimalityReport i = verdict(rf("2/(l^2+1)"));
    EXPECT_TRUE(i.inconclusive());
    EXPECT_FALSE(i.minimal());
}

TEST(Verdict, EquivalencesAgree)
{
    for (const char* s : kSuite) {
        MinimalityReport r = verdict(rf(s));
        EXPECT_TRUE(r.equivalences.all_equal()) << s;
        EXPECT_EQ(r.equivalences.groupoid, r.minimal()) << s;
        EXPECT_EQ(r.subgroupoid.has_value(), r.affine_u.has_value()) << s;
        if (r.affine_u)
            EXPECT_TRUE(r.schwarzian_reduction_verified) << s;
    }
}

TEST(Verdict, SubgroupoidIsContainedInKummerGroupoid)
{
    Gen g(52);
    for (const char* s : {"0", "-2*(1+l^2)", "1/(2*l^2)"}) {
        MinimalityReport r = verdict(rf(s));
        ASSERT_TRUE(r.subgroupoid.has_value());
        Prolongation sub(*r.subgroupoid);
        Prolongation kum(kummer_residual(r.R));
        int checked = 0;
        while (checked < 20) {
            Algebraic x = g.gaussian() + Q(1, 7), y = g.gaussian() + Q(2, 9);
            ExactJet j;
            try {
                j = sub.prolong(ExactJet(x, y, {g.gaussian() + Q(5)}), 3);
            } catch (const Error& e) {
                ASSERT_TRUE(e.code() == Errc::SingularLocus || e.code() == Errc::NotInvertible);
                continue;
            }
            EXPECT_TRUE(kum.residuals(j, 0)[0].is_zero()) << s;
            ++checked;
        }
    }
}

TEST(FirstOrder, Examples)
{
    EXPECT_TRUE(first_order_factors(L).empty());
    EXPECT_TRUE(first_order_factors(rf("l^2+1")).empty());
    // f = psi^2 for psi = exp(l^2/2)
    auto a = first_order_factors(rf("-2*(1+l^2)"));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(to_rational_function(a[0]), 2 * L);
    EXPECT_EQ(first_order_obstruction(rf("-2*(1+l^2)"), 2 * L, Rational(0), 12), -1);
    EXPECT_EQ(first_order_obstruction(RationalFunction(0), RationalFunction(1) / (L - 3), Rational(0), 12), -1);
    EXPECT_GE(first_order_obstruction(L, 2 * L, Rational(0), 12), 0);
    // the case-2 logarithmic derivative f'/f of u+ u-
    auto d = first_order_factors(rf("(3-4*l)/(8*l^2)"));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(first_order_obstruction(rf("(3-4*l)/(8*l^2)"), *to_rational_function(d[0]), Rational(1), 12), -1);
}

TEST(FirstOrder, RandomCoefficientsFailForAiry)
{
    Gen g(53);
    for (int n = 0; n < 200; ++n) {
        RationalFunction a(g.poly(6), g.nonzero_poly(6));
        if (sgn(a.den().eval(Rational(0))) == 0)
            continue;
        EXPECT_GE(first_order_obstruction(L, a, Rational(0), 12), 0) << a.to_string();
    }
}

TEST(Oracle, AgreesWithCase1Search)
{
    for (const char* s : kSuite) {
        RationalFunction R = rf(s);
        std::optional<AlgFunc> u;
        try {
            u = case1_search(R);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::UnsupportedField);
            continue;
        }
        auto o = kummer::testing::brute_force_riccati(R);
        ASSERT_TRUE(o.roots_complete) << s;
        const bool oracle_found = o.family || !o.solutions.empty();
        if (!u) {
            EXPECT_FALSE(oracle_found) << s;
            continue;
        }
        auto ru = to_rational_function(*u);
        if (ru) {
            EXPECT_TRUE(oracle_found) << s;
            if (!o.family)
                EXPECT_NE(std::find(o.solutions.begin(), o.solutions.end(), *ru), o.solutions.end()) << s;
        } else {
            // an algebraic solution: its value at the base point is a root of the constraint
            EXPECT_TRUE(o.solutions.empty()) << s;
            Algebraic c = u->num().eval(Algebraic(o.base)) / u->den().eval(Algebraic(o.base));
            EXPECT_TRUE(o.constraint.template to<Algebraic>().eval(c).is_zero()) << s;
        }
    }
}
