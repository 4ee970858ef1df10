#pragma once

#include <cstddef>
#include <vector>

#include "kummer/jet/diff_expr.hpp"
#include "kummer/jet/jet.hpp"
#include "kummer/ode/linear_ode.hpp"

namespace kummer {

/// F together with its total derivatives D^i F, computed on demand and kept.
class Prolongation {
public:
    explicit Prolongation(DiffExpr F) : tower_{std::move(F)}
    {
        if (tower_[0].order() < 0)
            fail(Errc::InvalidArgument, "equation does not involve phi");
    }

    int order() const { return tower_[0].order(); }
    const DiffExpr& equation() const { return tower_[0]; }

    const DiffExpr& derivative(std::size_t i)
    {
        while (tower_.size() <= i)
            tower_.push_back(tower_.back().total_derivative());
        return tower_[i];
    }

    /// Extends the (k-1)-jet j to order m by solving D^i F = 0 for phi^(k+i).
    /// Every D^i F is affine in its top coordinate; the slope (which is
    /// partial F / partial phi^(k)) is found by evaluating at 0 and 1.
    template <class S>
    BasicJet<S> prolong(const BasicJet<S>& j, std::size_t m)
    {
        const int k = order();
        if (j.order() + 1 != static_cast<std::size_t>(k))
            fail(Errc::WrongOrder, "prolongation seed must have order " + std::to_string(k - 1));
        JetEnv<S> env = jet_env(j);
        for (std::size_t n = static_cast<std::size_t>(k); n <= m; ++n) {
            const DiffExpr& G = derivative(n - static_cast<std::size_t>(k));
            env.jet.push_back(S(0));
            S g0 = eval_checked(G, env);
            env.jet.back() = S(1);
            S g1 = eval_checked(G, env);
            S slope = g1 - g0;
            if (n == static_cast<std::size_t>(k)) {
                env.jet.back() = S(2);
                S g2 = eval_checked(G, env);
                if (!near_zero(g2 - S(2) * g1 + g0, g0))
                    fail(Errc::NotDetermined, "equation is not affine in its top derivative");
            }
            if (near_zero(slope, g0))
                fail(Errc::SingularLocus, "coefficient of the top derivative vanishes at the jet");
            env.jet.back() = (S(0) - g0) / slope;
        }
        std::vector<S> coeffs(env.jet.begin() + 1, env.jet.end());
        return BasicJet<S>(j.source(), j.target(), std::move(coeffs));
    }

    /// Values of F, DF, ..., D^count F at a jet (zero when the jet solves F).
    template <class S>
    std::vector<S> residuals(const BasicJet<S>& j, std::size_t count)
    {
        JetEnv<S> env = jet_env(j);
        std::vector<S> out;
        for (std::size_t i = 0; i <= count; ++i)
            out.push_back(evaluate(derivative(i), env));
        return out;
    }

private:
    std::vector<DiffExpr> tower_;

    template <class S>
    static S eval_checked(const DiffExpr& G, const JetEnv<S>& env)
    {
        try {
            return evaluate(G, env);
        } catch (const Error& e) {
            if (e.code() == Errc::DivisionByZero)
                fail(Errc::SingularLocus, "equation is singular at the jet");
            throw;
        }
    }

    template <class S>
    static bool near_zero(const S& v, const S& scale)
    {
        if constexpr (is_exact_v<S>)
            return is_zero(v);
        else
            return std::abs(v) <= 1e-12 * std::max(1.0, std::abs(scale));
    }
};

/// Linear part of F along vector fields f(l) d/dl at the identity: the
/// coefficient of f^(j) is dF/dphi^(j) at phi = l, phi' = 1, phi^(j>=2) = 0.
inline LinearODE linearize_at_identity(const DiffExpr& F)
{
    const int k = F.order();
    if (k < 0)
        fail(Errc::InvalidArgument, "equation does not involve phi");
    const RationalFunction l = RationalFunction::x();
    JetEnv<RationalFunction> id{l, {l}};
    if (k >= 1)
        id.jet.push_back(RationalFunction(1));
    for (int j = 2; j <= k; ++j)
        id.jet.push_back(RationalFunction(0));
    if (!evaluate(F, id).is_zero())
        fail(Errc::NotVanishingOnIdentity, "equation does not vanish on identity jets");
    std::vector<RationalFunction> coeffs;
    for (int j = 0; j <= k; ++j)
        coeffs.push_back(evaluate(F.partial_jet(j), id));
    return LinearODE::from_coefficients(std::move(coeffs));
}

} // namespace kummer
