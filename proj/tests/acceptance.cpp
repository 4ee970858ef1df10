// One line per acceptance criterion; exit status 1 if any fails or runs over
// its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "riccati_oracle.hpp"
#include "support.hpp"

using namespace kummer;
using kummer::testing::Gen;
using kummer::testing::rf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

const RationalFunction L = RationalFunction::x();

Outcome linearization_is_symmetric_power()
{
    Gen g(101);
    for (int n = 0; n < 25; ++n) {
        RationalFunction R(g.poly(4), g.nonzero_poly(4));
        KummerSystem k = kummer_build(R);
        if (!(k.linearized == k.sympow))
            return {false, "mismatch for R = " + R.to_string()};
    }
    return {true, "25 random R, exact equality"};
}

Outcome schwarzian_cocycle()
{
    Gen g(102);
    int checked = 0, skipped = 0;
    while (checked < 50) {
        RationalFunction tau = g.rf(3), phi = g.rf(3);
        if (tau.derivative().is_zero() || phi.derivative().is_zero()) {
            ++skipped;
            continue;
        }
        RationalFunction r;
        try {
            r = chain_rule_check(tau, phi);
        } catch (const Error& e) {
            if (e.code() != Errc::DivisionByZero)
                throw;
            ++skipped;
            continue;
        }
        if (!r.is_zero())
            return {false, "nonzero for tau = " + tau.to_string() + ", phi = " + phi.to_string()};
        ++checked;
    }
    return {true, "50 random pairs, exact zero (" + std::to_string(skipped) + " constant or singular draws skipped)"};
}

Outcome kummer_jet_closure()
{
    Gen g(103);
    const RationalFunction Rs[] = {L, rf("(l^2 - 2)/(l^2 + 1)"), rf("1/(2*l^2)")};
    int n = 0;
    for (const auto& R : Rs) {
        Prolongation P(kummer_residual(R));
        auto off_poles = [&] {
            Algebraic v;
            do
                v = g.gaussian();
            while (R.den().to<Algebraic>().eval(v).is_zero());
            return v;
        };
        for (int k = 0; k < 34 && n < 100; ++k, ++n) {
            Algebraic x = off_poles(), y = off_poles(), z = off_poles();
            auto nonzero = [&] {
                Algebraic v;
                do
                    v = g.gaussian();
                while (v.is_zero());
                return v;
            };
            ExactJet j1 = P.prolong(ExactJet(x, y, {nonzero(), g.gaussian()}), 3);
            ExactJet j2 = P.prolong(ExactJet(y, z, {nonzero(), g.gaussian()}), 3);
            ExactJet c = compose(j2, j1);
            if (!evaluate(kummer_residual(R), jet_env(c)).is_zero())
                return {false, "composite " + c.to_string() + " for R = " + R.to_string()};
        }
    }
    return {true, "100 composite 3-jets over three potentials, residual exactly 0"};
}

Outcome verdict_suite()
{
    auto fail_with = [](std::string s) { return Outcome{false, std::move(s)}; };

    MinimalityReport z = verdict(RationalFunction(0));
    if (z.verdict.label != CaseLabel::Case1 || to_rational_function(z.verdict.certificate.u) != RationalFunction(0))
        return fail_with("R = 0 is not Case1 with u = 0");
    // the order-2 subgroupoid for u = 0 is -phi''/phi' = 0, i.e. phi'' = 0
    if (!z.subgroupoid || z.subgroupoid->to_string() != "-p''/p'")
        return fail_with("R = 0 subgroupoid is not phi'' = 0");

    struct Case1Instance {
        const char* R;
        RationalFunction u;
    };
    for (const auto& [text, u] : {Case1Instance{"0", RationalFunction(0)}, Case1Instance{"-2*(1+l^2)", L},
                                  Case1Instance{"1/(2*l^2)", RationalFunction(1) / (2 * L)}}) {
        RationalFunction R = rf(text);
        MinimalityReport m = verdict(R);
        auto cert = to_rational_function(m.verdict.certificate.u);
        if (m.verdict.label != CaseLabel::Case1 || cert != u)
            return fail_with(std::string("R = ") + text + " certificate differs");
        if (!riccati_of(R).residual(*cert).is_zero() || !m.schwarzian_reduction_verified)
            return fail_with(std::string("R = ") + text + " certificate fails substitution");
        if (m.equivalences.riccati || m.equivalences.groupoid || m.equivalences.galois_sl2 ||
            m.equivalences.strong_minimality || m.equivalences.liouvillian)
            return fail_with(std::string("R = ") + text + " reports a minimality statement");
    }
    MinimalityReport a = verdict(L);
    const auto& e = a.equivalences;
    if (a.verdict.label != CaseLabel::Case4 || !a.minimal() ||
        !(e.riccati && e.groupoid && e.galois_sl2 && e.strong_minimality && e.liouvillian))
        return fail_with("R = l is not Case4 with all five statements true");
    if (!case1_candidates(L, false).empty() || !case2_phi_candidates(L, false).empty())
        return fail_with("R = l has a case-1 or case-2 candidate");
    return {true, "0, -2(1+l^2), 1/(2l^2) Case1 with u = 0, l, 1/(2l); l Case4, all five true"};
}

Outcome projective_relation()
{
    NumericPath p({Complex(0), Complex(1)});
    double r = check_projective_relation(L, p).max_residual;
    char buf[96];
    std::snprintf(buf, sizeof buf, "R = l on [0, 1], max |S(psi1/psi2) - l| = %.2e", r);
    return {r < 1e-6, buf};
}

Outcome groupoid_closure()
{
    NumericJet j1(0.0, 0.03, {1.05, -0.02});
    NumericJet j2(j1.target(), j1.target() - 0.04, {0.97, 0.03});
    ClosureCheck c = check_groupoid_closure(L, j1, j2, NumericPath({Complex(0), Complex(1)}));
    char buf[128];
    std::snprintf(buf, sizeof buf, "R = l on [0, 1], composite %.2e, inverse %.2e", c.composite_residual,
                  c.inverse_residual);
    return {c.composite_residual < 1e-6 && c.inverse_residual < 1e-6, buf};
}

Outcome flow_tangency()
{
    // f = psi1 psi2 (basis at 0) taken at 0.3, from the exact series solution
    LinearODE ode = from_potential(L);
    Series<Rational> f = series_solve(ode, Rational(0), {Rational(1), Rational(0)}, 40).coeffs *
                         series_solve(ode, Rational(0), {Rational(0), Rational(1)}, 40).coeffs;
    std::vector<Complex> vals;
    for (int j = 0; j < 4; ++j) {
        double v = 0, p = 1;
        for (const auto& c : f.coeffs()) {
            v += c.get_d() * p;
            p *= 0.3;
        }
        vals.push_back(v);
        f = f.derivative();
    }
    const std::vector<double> eps{1e-2, 1e-3, 1e-4};
    FlowTangency good = check_flow_tangency(L, JetVectorField<Complex>{0.3, vals}, eps);
    vals[3] += 1.0;
    FlowTangency bad = check_flow_tangency(L, JetVectorField<Complex>{0.3, vals}, eps);
    char buf[128];
    std::snprintf(buf, sizeof buf, "slope %.3f for f = psi1 psi2, %.3f for the perturbed f", good.slope, bad.slope);
    return {!good.exact_symmetry && good.slope >= 1.9 && bad.slope <= 1.2, buf};
}

Outcome cone_property()
{
    Gen g(108);
    int planes = 0;
    while (planes < 10) {
        std::array<std::array<Algebraic, 3>, 2> plane;
        for (auto& v : plane)
            for (auto& e : v)
                e = Algebraic(g.rational(5, 3));
        ConePlane<Algebraic> c;
        try {
            c = check_cone_plane<Algebraic>(L, Algebraic(Rational(0)), plane, 12);
        } catch (const Error& e) {
            if (e.code() == Errc::DegeneratePlane)
                continue;
            return {false, std::string("plane ") + std::to_string(planes) + ": " + e.what()};
        }
        if (c.witnesses.empty())
            return {false, "no witness"};
        for (const auto& w : c.witnesses)
            if (w.square_residual != 0.0 || w.linear_residual != 0.0)
                return {false, "nonzero residual on plane " + std::to_string(planes)};
        ++planes;
    }
    return {true, "R = l, 10 random planes, every witness root solves the linear equation exactly to order 12"};
}

Outcome order_one_impossible()
{
    if (!first_order_factors(L).empty())
        return {false, "R = l has a first-order factor candidate"};
    Gen g(109);
    int tried = 0, latest = 0;
    while (tried < 300) {
        RationalFunction a(g.poly(6), g.nonzero_poly(6));
        if (sgn(a.den().eval(Rational(0))) == 0)
            continue;
        int k = first_order_obstruction(L, a, Rational(0), 12);
        if (k < 0)
            return {false, "a = " + a.to_string() + " survives to order 12"};
        latest = std::max(latest, k);
        ++tried;
    }
    return {true, "no case-1/case-2 candidate for R = l; 300 random a of degree <= 6 leave a nonzero residual coefficient at order <= " +
                      std::to_string(latest) + " of 12"};
}

Outcome oracle_agreement()
{
    const char* suite[] = {"0", "-2*(1+l^2)", "1/(2*l^2)", "l", "(3-4*l)/(8*l^2)", "2/(l^2+1)",
                           "-2/l^2", "l^2+1", "-3/(8*l^2)+1/l", "3/(16*l^2)", "1/(l^3-2)", "l^3"};
    int compared = 0;
    for (const char* s : suite) {
        RationalFunction R = rf(s);
        std::optional<AlgFunc> u;
        try {
            u = case1_search(R);
        } catch (const Error& e) {
            if (e.code() != Errc::UnsupportedField)
                throw;
            continue;
        }
        auto o = kummer::testing::brute_force_riccati(R);
        if (!o.roots_complete)
            return {false, std::string("oracle could not factor the constraint for ") + s};
        const bool found = o.family || !o.solutions.empty();
        if (!u) {
            if (found)
                return {false, std::string("oracle finds a solution the search misses for ") + s};
        } else if (auto ru = to_rational_function(*u)) {
            if (!found || (!o.family && std::find(o.solutions.begin(), o.solutions.end(), *ru) == o.solutions.end()))
                return {false, std::string("oracle disagrees for ") + s};
        } else {
            Algebraic c = u->num().eval(Algebraic(o.base)) / u->den().eval(Algebraic(o.base));
            if (!o.solutions.empty() || !o.constraint.to<Algebraic>().eval(c).is_zero())
                return {false, std::string("irrational solution not on the oracle constraint for ") + s};
        }
        ++compared;
    }
    return {true, std::to_string(compared) + " suite instances agree (1 outside the supported field skipped)"};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "linearization equals symmetric power", 10, linearization_is_symmetric_power},
        {2, "Schwarzian cocycle", 10, schwarzian_cocycle},
        {3, "Kummer jet closure", 10, kummer_jet_closure},
        {4, "verdict suite", 20, verdict_suite},
        {5, "numeric projective relation", 5, projective_relation},
        {6, "numeric groupoid closure", 10, groupoid_closure},
        {7, "flow tangency", 20, flow_tangency},
        {8, "cone property", 10, cone_property},
        {9, "order-1 impossibility", 30, order_one_impossible},
        {10, "brute-force oracle agreement", 60, oracle_agreement},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = o.ok && s < c.budget_s;
        failed += !ok;
        char head[96];
        std::snprintf(head, sizeof head, "%s %2d %-38s %7.3f s / %4.0f s  ", ok ? "PASS" : "FAIL", c.id, c.name, s,
                      c.budget_s);
        std::cout << head << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
