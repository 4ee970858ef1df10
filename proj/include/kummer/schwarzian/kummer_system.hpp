#pragma once

#include "kummer/jet/prolong.hpp"
#include "kummer/schwarzian/schwarzian.hpp"

namespace kummer {

/// S(phi) + R(phi) phi'^2 - R(l)
inline DiffExpr kummer_residual(const RationalFunction& R)
{
    DiffExpr phi = DiffExpr::phi(0), p1 = DiffExpr::phi(1), l = DiffExpr::lambda();
    return schwarzian_expr() + DiffExpr::apply(R, phi) * pow(p1, 2) - DiffExpr::apply(R, l);
}

/// phi'^2 times the residual: phi' phi''' - 3/2 phi''^2 + R(phi) phi'^4 - R(l) phi'^2
inline DiffExpr kummer_cleared(const RationalFunction& R)
{
    DiffExpr phi = DiffExpr::phi(0), p1 = DiffExpr::phi(1), p2 = DiffExpr::phi(2), p3 = DiffExpr::phi(3);
    DiffExpr l = DiffExpr::lambda();
    return p1 * p3 - DiffExpr(make_rational(3, 2)) * pow(p2, 2) + DiffExpr::apply(R, phi) * pow(p1, 4) -
           DiffExpr::apply(R, l) * pow(p1, 2);
}

/// Third-order right-hand side of the nonlinear Schwarzian foliation, in the
/// jet coordinates p = l(t), p' = l_t, p'' = l_tt:
///     l_ttt = 3/2 l_tt^2 / l_t + l_t^3 R(l)
inline DiffExpr foliation_rhs(const RationalFunction& R)
{
    DiffExpr p = DiffExpr::phi(0), p1 = DiffExpr::phi(1), p2 = DiffExpr::phi(2);
    return DiffExpr(make_rational(3, 2)) * pow(p2, 2) / p1 + pow(p1, 3) * DiffExpr::apply(R, p);
}

struct KummerSystem {
    RationalFunction R;
    DiffExpr residual;
    DiffExpr cleared;
    LinearODE linearized;
    LinearODE sympow;

    bool consistent() const { return linearized == sympow; }
};

inline KummerSystem kummer_build(const RationalFunction& R)
{
    KummerSystem k{R, kummer_residual(R), kummer_cleared(R), {}, {}};
    k.linearized = linearize_at_identity(k.residual);
    k.sympow = symmetric_power_2(from_potential(R));
    return k;
}

} // namespace kummer
