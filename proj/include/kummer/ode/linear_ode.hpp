#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kummer/algebra/series.hpp"

namespace kummer {

/// Monic linear ODE  y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0  over Q(l).
class LinearODE {
public:
    LinearODE() = default;
    /// coefficients a_0..a_{n-1}; the leading coefficient is 1.
    explicit LinearODE(std::vector<RationalFunction> lower) : a_(std::move(lower))
    {
        if (a_.empty())
            fail(Errc::InvalidArgument, "a linear ODE needs order >= 1");
    }

    /// Normalizes c_n y^(n) + ... + c_0 y = 0 to monic form.
    static LinearODE from_coefficients(std::vector<RationalFunction> all)
    {
        if (all.size() < 2)
            fail(Errc::InvalidArgument, "a linear ODE needs order >= 1");
        RationalFunction lead = all.back();
        if (lead.is_zero())
            fail(Errc::NotDetermined, "leading coefficient vanishes identically");
        all.pop_back();
        for (auto& c : all)
            c = c / lead;
        return LinearODE(std::move(all));
    }

    std::size_t order() const { return a_.size(); }
    const std::vector<RationalFunction>& coeffs() const { return a_; }
    /// coefficient of y^(j); 1 for j = order
    RationalFunction coeff(std::size_t j) const { return j == a_.size() ? RationalFunction(1) : a_.at(j); }

    friend bool operator==(const LinearODE& x, const LinearODE& y) { return x.a_ == y.a_; }
    friend bool operator!=(const LinearODE& x, const LinearODE& y) { return !(x == y); }

    /// e.g. "f''' + 2*l*f' + 1*f = 0"
    std::string to_string(const std::string& fn = "f") const
    {
        auto name = [&](std::size_t j) {
            if (j <= 3)
                return fn + std::string(j, '\'');
            return fn + "^(" + std::to_string(j) + ")";
        };
        std::string out = name(a_.size());
        for (std::size_t j = a_.size(); j-- > 0;) {
            if (a_[j].is_zero())
                continue;
            std::string c = a_[j].to_string();
            bool compound = c.find(' ') != std::string::npos || c.front() == '-' || c.find('/') != std::string::npos;
            out += " + " + (compound ? "(" + c + ")" : c) + "*" + name(j);
        }
        return out + " = 0";
    }

private:
    std::vector<RationalFunction> a_;
};

/// psi'' + (R/2) psi = 0
inline LinearODE from_potential(const RationalFunction& R)
{
    return LinearODE({R / RationalFunction(2), RationalFunction(0)});
}

using Matrix2 = std::array<std::array<RationalFunction, 2>, 2>;

/// First-order system Y' = A Y for Y = (y, y').
inline Matrix2 companion(const LinearODE& ode)
{
    if (ode.order() != 2)
        fail(Errc::WrongOrder, "companion matrix needs an order-2 equation");
    return {{{RationalFunction(0), RationalFunction(1)}, {-ode.coeff(0), -ode.coeff(1)}}};
}

/// Operator annihilating all products psi_i psi_j of solutions of a trace-free
/// order-2 equation. Derivatives of f = psi^2 are written in the basis
/// (psi^2, psi psi', psi'^2) using psi'' = -a0 psi, and f''' is eliminated
/// against f, f', f''.
inline LinearODE symmetric_power_2(const LinearODE& ode)
{
    if (ode.order() != 2)
        fail(Errc::WrongOrder, "second symmetric power needs an order-2 equation");
    if (!ode.coeff(1).is_zero())
        fail(Errc::NonTraceFree, "second symmetric power expects a1 = 0");
    const RationalFunction a0 = ode.coeff(0);
    using Vec = std::array<RationalFunction, 3>;
    auto d = [&](const Vec& v) {
        // (psi^2)' = 2 psi psi', (psi psi')' = psi'^2 - a0 psi^2, (psi'^2)' = -2 a0 psi psi'
        Vec r{v[0].derivative(), v[1].derivative(), v[2].derivative()};
        r[1] += 2 * v[0];
        r[2] += v[1];
        r[0] -= a0 * v[1];
        r[1] -= 2 * a0 * v[2];
        return r;
    };
    Vec f0{RationalFunction(1), RationalFunction(0), RationalFunction(0)};
    Vec f1 = d(f0), f2 = d(f1), f3 = d(f2);
    // solve c0 f0 + c1 f1 + c2 f2 = -f3 by Cramer's rule
    auto det3 = [](const Vec& x, const Vec& y, const Vec& z) {
        return x[0] * (y[1] * z[2] - y[2] * z[1]) - y[0] * (x[1] * z[2] - x[2] * z[1]) + z[0] * (x[1] * y[2] - x[2] * y[1]);
    };
    Vec rhs{-f3[0], -f3[1], -f3[2]};
    RationalFunction det = det3(f0, f1, f2);
    if (det.is_zero())
        fail(Errc::NotDetermined, "degenerate symmetric power elimination");
    return LinearODE({det3(rhs, f1, f2) / det, det3(f0, rhs, f2) / det, det3(f0, f1, rhs) / det});
}

/// u' + u^2 + R/2 = 0, satisfied by u = psi'/psi.
struct RiccatiEq {
    RationalFunction R;

    template <Field F>
    RatFunc<F> residual(const RatFunc<F>& u) const
    {
        return u.derivative() + u * u + R.template to<F>() / RatFunc<F>(F(2));
    }
};

inline RiccatiEq riccati_of(const RationalFunction& R) { return RiccatiEq{R}; }

/// Truncated solution sum c_k (l - base)^k, k = 0..N.
template <class S>
struct SeriesSolution {
    S base{};
    std::size_t N = 0;
    Series<S> coeffs;

    /// j-th derivative at base
    S derivative(std::size_t j) const
    {
        S fact = S(1);
        for (std::size_t i = 2; i <= j; ++i)
            fact = fact * S(static_cast<long>(i));
        return coeffs.at(j) * fact;
    }
};

/// Taylor data of the coefficients at base, N + 1 terms each.
template <Field S>
std::vector<Series<S>> coefficient_series(const LinearODE& ode, const S& base, std::size_t terms)
{
    std::vector<Series<S>> out;
    for (std::size_t j = 0; j < ode.order(); ++j) {
        const RationalFunction& a = ode.coeffs()[j];
        if (is_zero(a.den().template to<S>().eval(base)))
            fail(Errc::BasePointSingular, "coefficient " + a.to_string() + " has a pole at the base point");
        out.push_back(taylor_expand(a, base, terms));
    }
    return out;
}

/// Applies the operator to a truncated series y (in powers of l - base).
template <Field S>
Series<S> apply_operator(const LinearODE& ode, const S& base, const Series<S>& y)
{
    const std::size_t n = ode.order();
    if (y.size() <= n)
        return Series<S>();
    const std::size_t terms = y.size() - n;
    auto a = coefficient_series(ode, base, terms);
    std::vector<Series<S>> dy{y.truncated(terms)};
    Series<S> cur = y;
    for (std::size_t j = 1; j <= n; ++j) {
        cur = cur.derivative();
        dy.push_back(cur.truncated(terms));
    }
    Series<S> r = dy[n];
    for (std::size_t j = 0; j < n; ++j)
        r = r + a[j] * dy[j];
    return r;
}

/// Unique truncated solution with y^(j)(base) = initial[j]; coefficients up
/// to (l - base)^N.
template <Field S>
SeriesSolution<S> series_solve(const LinearODE& ode, const S& base, const std::vector<S>& initial, std::size_t N)
{
    const std::size_t n = ode.order();
    if (initial.size() != n)
        fail(Errc::InvalidArgument, "need one initial value per order");
    const std::size_t total = std::max(N + 1, n);
    auto a = coefficient_series(ode, base, total);
    std::vector<S> c(total, S(0));
    S fact = S(1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 1)
            fact = fact * S(static_cast<long>(j));
        c[j] = initial[j] / fact;
    }
    // falling(i + j, j) = (i + j)! / i!
    auto falling = [](std::size_t top, std::size_t count) {
        S r = S(1);
        for (std::size_t k = 0; k < count; ++k)
            r = r * S(static_cast<long>(top - k));
        return r;
    };
    for (std::size_t m = 0; m + n < total; ++m) {
        S acc = S(0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i <= m; ++i) {
                const S& ai = a[j][m - i];
                if (is_zero(ai))
                    continue;
                acc = acc + ai * c[i + j] * falling(i + j, j);
            }
        c[m + n] = (S(0) - acc) / falling(m + n, n);
    }
    c.resize(N + 1, S(0));
    return {base, N, Series<S>(std::move(c))};
}

} // namespace kummer
