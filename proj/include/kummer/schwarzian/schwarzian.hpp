#pragma once

#include "kummer/jet/diff_expr.hpp"
#include "kummer/jet/jet.hpp"

namespace kummer {

/// S(f) = f'''/f' - 3/2 (f''/f')^2
template <Field F>
RatFunc<F> schwarzian(const RatFunc<F>& f)
{
    RatFunc<F> d1 = f.derivative();
    if (d1.is_zero())
        fail(Errc::ConstantInput, "Schwarzian of a constant");
    RatFunc<F> d2 = d1.derivative(), d3 = d2.derivative();
    RatFunc<F> q = d2 / d1;
    return d3 / d1 - RatFunc<F>(embed<F>(make_rational(3, 2))) * q * q;
}

inline RationalFunction schwarzian_rf(const RationalFunction& f) { return schwarzian(f); }

/// Value of S at a jet of order >= 3.
template <class S>
S schwarzian_jet(const BasicJet<S>& j)
{
    if (j.order() < 3)
        fail(Errc::OrderTooLow, "Schwarzian needs a 3-jet");
    S q = j.derivative(2) / j.derivative(1);
    return j.derivative(3) / j.derivative(1) - embed<S>(make_rational(3, 2)) * q * q;
}

/// S(phi) as an expression in the jet coordinates.
inline DiffExpr schwarzian_expr()
{
    DiffExpr p1 = DiffExpr::phi(1), p2 = DiffExpr::phi(2), p3 = DiffExpr::phi(3);
    return p3 / p1 - DiffExpr(make_rational(3, 2)) * pow(p2 / p1, 2);
}

/// S(tau o phi) - (S(tau) o phi) phi'^2 - S(phi); identically zero.
inline RationalFunction chain_rule_check(const RationalFunction& tau, const RationalFunction& phi)
{
    RationalFunction dphi = phi.derivative();
    return schwarzian(tau.compose(phi)) - schwarzian(tau).compose(phi) * dphi * dphi - schwarzian(phi);
}

} // namespace kummer
