#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "kummer/algebra/series.hpp"

namespace kummer {

struct SquarefreeFactor {
    Polynomial factor; // monic
    int multiplicity = 1;
    std::vector<Algebraic> roots; // empty when the factor is left unsplit

    bool split() const { return !roots.empty(); }
};

/// A place of a rational function: either a split point (rational, Gaussian or
/// quadratic surd) or an unsplit irreducible factor of degree >= 3.
struct PoleDatum {
    Polynomial place;
    std::optional<Algebraic> location;
    int order = 1;
};

/// All complex roots of p by the Aberth iteration.
template <Field F>
std::vector<std::complex<double>> numeric_roots(const Poly<F>& p)
{
    using C = std::complex<double>;
    const int n = p.degree();
    std::vector<C> roots;
    if (n <= 0)
        return roots;
    Poly<C> q = p.template to<C>();
    Poly<C> dq = q.derivative();
    double bound = 0.0;
    for (int k = 0; k < n; ++k)
        bound = std::max(bound, std::abs(q[k] / q.leading()));
    bound += 1.0;
    for (int k = 0; k < n; ++k)
        roots.push_back(std::polar(0.5 * bound, 2.0 * M_PI * (k + 0.25) / n));
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            C v = q.eval(roots[k]);
            if (v == C(0.0, 0.0))
                continue;
            C ratio = v / dq.eval(roots[k]);
            C sum(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k)
                    sum += C(1.0, 0.0) / (roots[k] - roots[j]);
            C w = ratio / (C(1.0, 0.0) - ratio * sum);
            roots[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(roots[k])));
        }
        if (worst < 1e-15)
            break;
    }
    return roots;
}

namespace detail {

/// Yun's algorithm: p = lc * prod a_i^i with a_i squarefree and coprime.
inline std::vector<Polynomial> yun(const Polynomial& p)
{
    std::vector<Polynomial> out;
    Polynomial dp = p.derivative();
    Polynomial a = gcd(p, dp);
    Polynomial b = p / a;
    Polynomial c = dp / a;
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial g = d.is_zero() ? b.monic() : gcd(b, d);
        out.push_back(g);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    return out;
}

/// Scales p to a primitive integer polynomial.
inline std::vector<Integer> integer_coeffs(const Polynomial& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs())
        l = lcm(l, c.get_den());
    std::vector<Integer> out;
    for (const auto& c : p.coeffs()) {
        Rational s = c * l;
        out.push_back(s.get_num());
    }
    return out;
}

inline std::vector<Rational> rational_roots(const Polynomial& p)
{
    std::vector<Rational> roots;
    if (p.degree() <= 0)
        return roots;
    Polynomial q = p;
    int v = q.valuation();
    if (v > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> c(q.coeffs().begin() + v, q.coeffs().end());
        q = Polynomial(std::move(c));
    }
    if (q.degree() == 1) {
        roots.push_back(-q[0] / q[1]);
        return roots;
    }
    if (q.degree() <= 0)
        return roots;
    auto z = integer_coeffs(q);
    auto ps = divisors(z.front());
    auto qs = divisors(z.back());
    if (!ps || !qs)
        return roots;
    for (const auto& a : *ps)
        for (const auto& b : *qs)
            for (int s : {1, -1}) {
                Rational r(Integer(s * a), b);
                r.canonicalize();
                if (sgn(q.eval(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Repeatedly pulls rational quadratic factors off g: numeric roots are
/// paired, the pair's quadratic is rounded to the only denominators Gauss's
/// lemma allows, and kept if it divides g exactly.
inline std::vector<Polynomial> quadratic_factors(Polynomial& g)
{
    std::vector<Polynomial> found;
    bool progress = true;
    while (progress && g.degree() >= 4) {
        progress = false;
        const Integer lead = integer_coeffs(g).back();
        auto roots = numeric_roots(g);
        for (std::size_t i = 0; i < roots.size() && !progress; ++i)
            for (std::size_t j = i + 1; j < roots.size() && !progress; ++j) {
                std::complex<double> s = roots[i] + roots[j], p = roots[i] * roots[j];
                if (std::abs(s.imag()) > 1e-6 || std::abs(p.imag()) > 1e-6)
                    continue;
                double ls = -s.real() * lead.get_d(), lp = p.real() * lead.get_d();
                if (std::abs(ls) > 1e15 || std::abs(lp) > 1e15)
                    continue;
                Rational b(Integer(static_cast<long>(std::llround(ls))), lead);
                Rational c(Integer(static_cast<long>(std::llround(lp))), lead);
                b.canonicalize();
                c.canonicalize();
                Polynomial q(std::vector<Rational>{c, b, Rational(1)});
                auto [quot, rem] = Polynomial::divmod(g, q);
                if (rem.is_zero()) {
                    found.push_back(q);
                    g = quot;
                    progress = true;
                }
            }
    }
    return found;
}

inline SquarefreeFactor split_quadratic(Polynomial g, int mult)
{
    g = g.monic();
    if (g.degree() == 2) {
        Rational b = g[1], c = g[0];
        Rational disc = b * b - 4 * c;
        auto sd = Algebraic::sqrt_rational(disc);
        if (sd) {
            Algebraic half_b(Rational(-b / 2));
            Algebraic half_sd = *sd * Algebraic(make_rational(1, 2));
            return {g, mult, {half_b + half_sd, half_b - half_sd}};
        }
    }
    return {g, mult, {}};
}

} // namespace detail

/// Squarefree decomposition with exact roots for the linear and quadratic
/// pieces. Rational roots are extracted first, then rational quadratic
/// factors; quadratics are split by the quadratic formula and whatever is
/// left of degree >= 3 stays unsplit.
inline std::vector<SquarefreeFactor> squarefree_and_roots(const Polynomial& p)
{
    if (p.is_zero())
        fail(Errc::ZeroInput, "factorization of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    auto parts = detail::yun(p);
    for (std::size_t i = parts.size(); i-- > 0;) {
        Polynomial g = parts[i];
        const int mult = static_cast<int>(i) + 1;
        if (g.degree() <= 0)
            continue;
        for (const auto& r : detail::rational_roots(g)) {
            Polynomial lin = Polynomial::linear(r);
            out.push_back({lin, mult, {Algebraic(r)}});
            g = g / lin;
        }
        if (g.degree() <= 0)
            continue;
        std::vector<Polynomial> pieces;
        if (g.degree() >= 4)
            pieces = detail::quadratic_factors(g);
        pieces.push_back(g);
        for (auto& piece : pieces)
            out.push_back(detail::split_quadratic(piece, mult));
    }
    return out;
}

/// Poles of f with their orders, split where possible.
inline std::vector<PoleDatum> pole_data(const RationalFunction& f)
{
    std::vector<PoleDatum> out;
    if (f.den().degree() <= 0)
        return out;
    for (auto& sf : squarefree_and_roots(f.den())) {
        if (sf.split())
            for (auto& r : sf.roots)
                out.push_back({sf.factor, r, sf.multiplicity});
        else
            out.push_back({sf.factor, std::nullopt, sf.multiplicity});
    }
    return out;
}

inline int order_at_infinity(const RationalFunction& f) { return f.order_at_infinity(); }

struct PoleTerm {
    PoleDatum pole;
    /// ladder[k-1] is the coefficient of 1/(l - location)^k, k = 1..order
    std::vector<Algebraic> ladder;
};

struct PartialFractions {
    Polynomial polynomial_part;
    std::vector<PoleTerm> poles;

    /// Reassembles the decomposition over the extension field.
    RatFunc<Algebraic> recombine() const
    {
        RatFunc<Algebraic> acc(polynomial_part.to<Algebraic>());
        for (const auto& t : poles) {
            Poly<Algebraic> lin = Poly<Algebraic>::linear(*t.pole.location);
            for (std::size_t k = 0; k < t.ladder.size(); ++k)
                if (!t.ladder[k].is_zero())
                    acc += RatFunc<Algebraic>(Poly<Algebraic>(t.ladder[k]), pow(lin, static_cast<unsigned>(k + 1)));
        }
        return acc;
    }
};

inline PartialFractions partial_fractions(const RationalFunction& f)
{
    PartialFractions out;
    auto qr = Polynomial::divmod(f.num(), f.den());
    out.polynomial_part = qr.first;
    if (qr.second.is_zero())
        return out;
    RationalFunction proper(qr.second, f.den());
    for (auto& pd : pole_data(proper)) {
        if (!pd.location)
            fail(Errc::UnsupportedField, "pole place " + pd.place.to_string() + " has degree > 2");
        auto lau = laurent_expand(proper, *pd.location, static_cast<std::size_t>(pd.order));
        PoleTerm t{pd, std::vector<Algebraic>(pd.order, Algebraic())};
        for (int k = 1; k <= pd.order; ++k)
            t.ladder[k - 1] = lau.coefficient(-k);
        out.poles.push_back(std::move(t));
    }
    return out;
}

} // namespace kummer
