#pragma once

// Exhaustive search for rational solutions of u' + u^2 + R/2 = 0 with numerator
// and denominator degree at most max_deg, independent of the local-exponent
// machinery. At a regular base point x0 a solution either takes a finite value
// c there, and then its Taylor coefficients are polynomials in c, or has a pole,
// and then 1/u is the unique series with v(x0) = 0. A rational series of type
// (d, d) satisfies a fixed order-d recurrence beyond index d, so every
// (d+1)-row window of the recurrence matrix is singular. The gcd of those
// minors is a polynomial in c whose rational roots are the only candidates.

#include <optional>
#include <vector>

#include "kummer/kummer.hpp"

namespace kummer::testing {

struct OracleResult {
    Rational base;
    bool family = false;    // every value c gives a rational solution
    Polynomial constraint;  // gcd of the window minors, as a polynomial in c
    bool roots_complete = true;
    std::vector<RationalFunction> solutions;
};

namespace oracle_detail {

template <class T>
T det(std::vector<std::vector<T>> m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<T>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * det(std::move(minor));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Recurrence rows [s_n, s_(n-1), ..., s_(n-d)] for n = d+1 .. d+rows.
template <class T>
std::vector<std::vector<T>> recurrence_rows(const std::vector<T>& s, int d, int rows)
{
    std::vector<std::vector<T>> out;
    for (int n = d + 1; n <= d + rows; ++n) {
        std::vector<T> row;
        for (int j = 0; j <= d; ++j)
            row.push_back(s[static_cast<std::size_t>(n - j)]);
        out.push_back(std::move(row));
    }
    return out;
}

/// p/q in t = l - x0 from a series known to be rational of type (d, d).
inline std::optional<RationalFunction> pade(const std::vector<Rational>& s, int d, int rows, const Rational& x0)
{
    auto m = recurrence_rows(s, d, rows);
    auto ker = nullspace(m, static_cast<std::size_t>(d + 1));
    if (ker.empty())
        return std::nullopt;
    std::vector<Rational> q(ker.front().begin(), ker.front().end());
    Polynomial Q(q), P;
    std::vector<Rational> p(static_cast<std::size_t>(d + 1), Rational(0));
    for (int n = 0; n <= d; ++n)
        for (int j = 0; j <= n; ++j)
            p[static_cast<std::size_t>(n)] += q[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(n - j)];
    P = Polynomial(p);
    if (Q.is_zero())
        return std::nullopt;
    return RationalFunction(P.shift(-x0), Q.shift(-x0));
}

} // namespace oracle_detail

inline OracleResult brute_force_riccati(const RationalFunction& R, int max_deg = 4, int rows = 12)
{
    using namespace oracle_detail;
    OracleResult out;
    for (long k = 1;; ++k) {
        Rational x0(make_rational(k, 2 * k + 1));
        if (sgn(R.den().eval(x0)) != 0) {
            out.base = x0;
            break;
        }
    }
    const Rational x0 = out.base;
    const std::size_t N = static_cast<std::size_t>(max_deg + rows + 1);
    Series<Rational> rho = taylor_expand(R / RationalFunction(2), x0, N);
    const Polynomial c = Polynomial::x();

    // u finite at x0: u_0 = c
    std::vector<Polynomial> u{c};
    for (std::size_t k = 0; u.size() < N; ++k) {
        Polynomial s(-rho[k]);
        for (std::size_t i = 0; i <= k; ++i)
            s -= u[i] * u[k - i];
        u.push_back(s * Polynomial(Rational(1) / Rational(static_cast<long>(k + 1))));
    }
    auto m = recurrence_rows(u, max_deg, rows);
    const std::size_t w = static_cast<std::size_t>(max_deg + 1);
    std::optional<Polynomial> g;
    for (std::size_t start = 0; start + w <= m.size(); ++start) {
        std::vector<std::vector<Polynomial>> win(m.begin() + static_cast<long>(start), m.begin() + static_cast<long>(start + w));
        Polynomial d = det(win);
        if (d.is_zero())
            continue;
        g = g ? gcd(*g, d) : d.monic();
    }
    auto check = [&](const std::optional<RationalFunction>& cand) {
        if (cand && riccati_of(R).residual(*cand).is_zero() && cand->num().degree() <= max_deg &&
            cand->den().degree() <= max_deg)
            out.solutions.push_back(*cand);
    };
    if (!g) {
        out.family = true;
    } else {
        out.constraint = *g;
        if (g->degree() > 0) {
            auto roots = detail::rational_roots(*g);
            // rational_roots gives up when a coefficient cannot be factored
            Polynomial rest = *g;
            while (rest.degree() > 0 && sgn(rest[0]) == 0)
                rest = Polynomial::divmod(rest, Polynomial::x()).first;
            if (rest.degree() > 1) {
                auto z = detail::integer_coeffs(rest);
                out.roots_complete = divisors(z.front()).has_value() && divisors(z.back()).has_value();
            }
            for (const auto& r0 : roots) {
                std::vector<Rational> s;
                for (const auto& p : u)
                    s.push_back(p.eval(r0));
                check(pade(s, max_deg, rows, x0));
            }
        }
    }
    // pole at x0: v = 1/u with v' = 1 + (R/2) v^2, v(x0) = 0
    std::vector<Rational> v{Rational(0)};
    for (std::size_t k = 0; v.size() < N; ++k) {
        Rational s = k == 0 ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i <= k; ++i) {
            Rational sq = 0;
            for (std::size_t a = 0; a <= k - i; ++a)
                sq += v[a] * v[k - i - a];
            s += rho[i] * sq;
        }
        v.push_back(s / static_cast<long>(k + 1));
    }
    if (auto vr = pade(v, max_deg, rows, x0); vr && !vr->is_zero())
        check(RationalFunction(1) / *vr);
    return out;
}

} // namespace kummer::testing
