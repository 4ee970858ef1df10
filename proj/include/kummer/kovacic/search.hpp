#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kummer/kovacic/local_data.hpp"

namespace kummer {

/// u^2 + p u + q, the minimal polynomial of a degree-2 algebraic Riccati solution.
struct QuadraticCertificate {
    AlgFunc p;
    AlgFunc q;
    AlgFunc phi; // u+ + u- = -p
};

namespace detail {

/// Mixed-radix walk over per-place options; the first place varies slowest.
template <class Fn>
void for_each_family(const std::vector<std::size_t>& sizes, Fn&& fn)
{
    for (auto s : sizes)
        if (s == 0)
            return;
    std::vector<std::size_t> idx(sizes.size(), 0);
    while (true) {
        if (fn(idx))
            return;
        std::size_t k = idx.size();
        while (k > 0) {
            --k;
            if (++idx[k] < sizes[k])
                break;
            idx[k] = 0;
            if (k == 0)
                return;
        }
    }
}

inline void require_split(const LocalExponentData& d)
{
    for (const auto& p : d.poles)
        if (!p.pole.location)
            fail(Errc::UnsupportedField, "pole place " + p.pole.place.to_string() + " of degree " +
                                             std::to_string(p.pole.place.degree()) + " must be split");
}

inline bool case1_possible(const LocalExponentData& d)
{
    for (const auto& p : d.poles)
        if (p.pole.order != 1 && p.pole.order % 2 != 0)
            return false;
    const int o = d.infinity.order;
    return o % 2 == 0 || o > 2;
}

inline bool case2_possible(const LocalExponentData& d)
{
    for (const auto& p : d.poles)
        if (p.pole.order == 2 || (p.pole.order > 2 && p.pole.order % 2 == 1))
            return true;
    return false;
}

inline bool case3_possible(const LocalExponentData& d)
{
    for (const auto& p : d.poles)
        if (p.pole.order > 2)
            return false;
    return d.infinity.order >= 2;
}

} // namespace detail

/// Riccati residual u' + u^2 - r over Q-bar(l) with r = -R/2.
inline AlgFunc riccati_residual(const RationalFunction& R, const AlgFunc& u)
{
    return u.derivative() + u * u + R.template to<Algebraic>() / AlgFunc(Algebraic(2));
}

/// The two elimination conditions for u^2 + p u + q = 0 against u' = r - u^2;
/// both vanish exactly when the roots solve the Riccati equation.
inline std::pair<AlgFunc, AlgFunc> quadratic_elimination(const RationalFunction& R, const QuadraticCertificate& c)
{
    AlgFunc r = (-R / RationalFunction(2)).template to<Algebraic>();
    AlgFunc two(Algebraic(2));
    AlgFunc linear = two * (r + c.q) - c.p * c.p + c.p.derivative();
    AlgFunc constant = c.p * (r - c.q) + c.q.derivative();
    return {linear, constant};
}

/// All Kovacic case-1 Riccati solutions (one per successful family), in family
/// order: infinity first, then poles, '+' option before '-'.
inline std::vector<AlgFunc> case1_candidates(const RationalFunction& R, bool first_only)
{
    std::vector<AlgFunc> out;
    if (R.is_zero()) {
        out.push_back(AlgFunc());
        return out;
    }
    LocalExponentData d = local_structure(R);
    if (!detail::case1_possible(d))
        return out;
    detail::require_split(d);
    fill_case1(d);
    const AlgFunc r = d.r.template to<Algebraic>();
    std::vector<std::size_t> sizes{d.infinity.case1.size()};
    for (const auto& p : d.poles)
        sizes.push_back(p.case1.size());
    detail::for_each_family(sizes, [&](const std::vector<std::size_t>& idx) {
        const LocalOption& inf = d.infinity.case1[idx[0]];
        Algebraic deg = inf.alpha;
        AlgFunc omega = inf.omega_term;
        for (std::size_t i = 0; i < d.poles.size(); ++i) {
            const LocalOption& o = d.poles[i].case1[idx[i + 1]];
            deg -= o.alpha;
            omega += o.omega_term;
        }
        if (!detail::is_nonneg_integer(deg))
            return false;
        const int n = static_cast<int>(deg.rational_part().get_num().get_si());
        AlgFunc zeroth = omega.derivative() + omega * omega - r;
        auto P = monic_polynomial_solution({zeroth, AlgFunc(Algebraic(2)) * omega, AlgFunc(Algebraic(1))}, n);
        if (!P)
            return false;
        AlgFunc u = omega + AlgFunc(P->derivative(), *P);
        if (!riccati_residual(R, u).is_zero())
            fail(Errc::NotDetermined, "case-1 candidate failed its Riccati check");
        for (const auto& e : out)
            if (e == u)
                return false;
        out.push_back(u);
        return first_only;
    });
    return out;
}

/// Case-1 search: a rational Riccati solution u' + u^2 + R/2 = 0, if one exists.
inline std::optional<AlgFunc> case1_search(const RationalFunction& R)
{
    auto c = case1_candidates(R, true);
    if (c.empty())
        return std::nullopt;
    return c.front();
}

/// Rational solutions phi of phi'' + 3 phi phi' + phi^3 - 4 r phi - 2 r' = 0
/// found from the case-2 exponent families (no necessary-condition screen).
inline std::vector<AlgFunc> case2_phi_candidates(const RationalFunction& R, bool first_only)
{
    std::vector<AlgFunc> out;
    LocalExponentData d = local_structure(R);
    if (R.is_zero())
        d.infinity.order = INT_MAX;
    detail::require_split(d);
    fill_case2(d);
    const AlgFunc r = d.r.template to<Algebraic>();
    const AlgFunc r1 = r.derivative();
    std::vector<std::size_t> sizes{d.infinity.case2_exponents.size()};
    for (const auto& p : d.poles)
        sizes.push_back(p.case2_exponents.size());
    auto A = [](long v) { return AlgFunc(Algebraic(v)); };
    detail::for_each_family(sizes, [&](const std::vector<std::size_t>& idx) {
        long sum = d.infinity.case2_exponents[idx[0]];
        AlgFunc theta;
        for (std::size_t i = 0; i < d.poles.size(); ++i) {
            long e = d.poles[i].case2_exponents[idx[i + 1]];
            sum -= e;
            theta += AlgFunc(Algebraic(make_rational(e, 2))) * detail::inverse_power(*d.poles[i].pole.location, 1);
        }
        if (sum < 0 || sum % 2 != 0)
            return false;
        const int n = static_cast<int>(sum / 2);
        AlgFunc t1 = theta.derivative(), t2 = t1.derivative();
        std::vector<AlgFunc> ops{
            t2 + A(3) * theta * t1 + theta * theta * theta - A(4) * r * theta - A(2) * r1,
            A(3) * theta * theta + A(3) * t1 - A(4) * r,
            A(3) * theta,
            A(1),
        };
        auto P = monic_polynomial_solution(ops, n);
        if (!P)
            return false;
        AlgFunc phi = theta + AlgFunc(P->derivative(), *P);
        for (const auto& e : out)
            if (e == phi)
                return false;
        out.push_back(phi);
        return first_only;
    });
    return out;
}

/// Case-2 search: the minimal polynomial u^2 - phi u + (phi'/2 + phi^2/2 - r).
/// Assumes case 1 has already failed, so the quadratic is irreducible.
inline std::optional<QuadraticCertificate> case2_search(const RationalFunction& R)
{
    LocalExponentData d = local_structure(R);
    if (R.is_zero() || !detail::case2_possible(d))
        return std::nullopt;
    auto phis = case2_phi_candidates(R, true);
    if (phis.empty())
        return std::nullopt;
    const AlgFunc& phi = phis.front();
    AlgFunc half(Algebraic(make_rational(1, 2)));
    AlgFunc r = d.r.template to<Algebraic>();
    QuadraticCertificate c{-phi, half * phi.derivative() + half * phi * phi - r, phi};
    auto [lin, con] = quadratic_elimination(R, c);
    if (!lin.is_zero() || !con.is_zero())
        fail(Errc::NotDetermined, "case-2 candidate failed its elimination check");
    return c;
}

enum class Case3Screen { Possible, Impossible };

/// Necessary conditions for a finite (non-dihedral, non-reducible) group.
inline Case3Screen case3_screen(const RationalFunction& R)
{
    if (R.is_zero())
        return Case3Screen::Possible;
    return detail::case3_possible(local_structure(R)) ? Case3Screen::Possible : Case3Screen::Impossible;
}

} // namespace kummer
