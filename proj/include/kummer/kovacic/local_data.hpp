#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "kummer/algebra/factor.hpp"
#include "kummer/algebra/linear_solve.hpp"

namespace kummer {

using AlgFunc = RatFunc<Algebraic>;

/// A choice of local solution type at one place: its contribution to omega and
/// its exponent alpha (Kovacic case 1).
struct LocalOption {
    AlgFunc omega_term;
    Algebraic alpha;
};

struct PlaceData {
    PoleDatum pole;
    std::vector<LocalOption> case1;   // filled on demand
    std::vector<long> case2_exponents; // E_c
};

struct InfinityData {
    int order = INT_MAX; // INT_MAX when r = 0
    std::vector<LocalOption> case1;
    std::vector<long> case2_exponents;
};

/// Pole structure of r = -R/2 for the equation y'' = r y.
struct LocalExponentData {
    RationalFunction R;
    RationalFunction r;
    std::vector<PlaceData> poles;
    InfinityData infinity;

    bool all_split() const
    {
        for (const auto& p : poles)
            if (!p.pole.location)
                return false;
        return true;
    }
};

namespace detail {

inline Algebraic require_sqrt(const Algebraic& v, const std::string& what)
{
    auto s = v.sqrt();
    if (!s)
        fail(Errc::UnsupportedField, "square root of " + v.to_string() + " (" + what + ") is outside the supported field");
    return *s;
}

inline bool is_nonneg_integer(const Algebraic& v)
{
    if (!v.is_rational())
        return false;
    Rational q = v.rational_part();
    return q.get_den() == 1 && sgn(q) >= 0;
}

/// (l - c)^-k as an element of Q-bar(l)
inline AlgFunc inverse_power(const Algebraic& c, int k)
{
    return AlgFunc(Poly<Algebraic>(Algebraic(1)), pow(Poly<Algebraic>::linear(c), static_cast<unsigned>(k)));
}

/// p(l - c) for p given in the local variable t = l - c
inline Poly<Algebraic> from_local(const Poly<Algebraic>& p, const Algebraic& c) { return p.shift(-c); }

inline void push_option(std::vector<LocalOption>& out, LocalOption o)
{
    for (const auto& e : out)
        if (e.alpha == o.alpha && e.omega_term == o.omega_term)
            return;
    out.push_back(std::move(o));
}

/// 2 + k sqrt(1 + 4b), k in {0, 2, -2}, intersected with the integers.
inline std::vector<long> order_two_exponents(const Algebraic& b)
{
    std::vector<long> out{2};
    Algebraic disc = Algebraic(1) + Algebraic(4) * b;
    if (!disc.is_rational())
        return out;
    auto s = Algebraic::sqrt_rational(disc.rational_part());
    if (!s || !s->is_rational())
        return out;
    Rational root = s->rational_part();
    for (int k : {2, -2}) {
        Rational e = 2 + k * root;
        if (e.get_den() == 1 && sgn(root) != 0)
            out.push_back(e.get_num().get_si());
    }
    return out;
}

inline std::pair<Algebraic, Algebraic> order_two_alphas(const Algebraic& b)
{
    Algebraic s = require_sqrt(Algebraic(1) + Algebraic(4) * b, "order-2 exponent");
    Algebraic half(make_rational(1, 2));
    return {half + half * s, half - half * s};
}

} // namespace detail

/// Poles of r and its order at infinity; exponent data is filled separately.
inline LocalExponentData local_structure(const RationalFunction& R)
{
    LocalExponentData d;
    d.R = R;
    d.r = -R / RationalFunction(2);
    for (auto& p : pole_data(d.r))
        d.poles.push_back({p, {}, {}});
    if (!d.r.is_zero())
        d.infinity.order = d.r.order_at_infinity();
    return d;
}

/// Kovacic case-1 local data: [sqrt r]_c and alpha_c^+-, likewise at infinity.
inline void fill_case1(LocalExponentData& d)
{
    const RationalFunction& r = d.r;
    for (auto& place : d.poles) {
        place.case1.clear();
        if (!place.pole.location)
            fail(Errc::UnsupportedField, "pole place " + place.pole.place.to_string() + " must be split");
        const Algebraic c = *place.pole.location;
        const int ord = place.pole.order;
        if (ord == 1) {
            place.case1.push_back({detail::inverse_power(c, 1), Algebraic(1)});
        } else if (ord == 2) {
            Algebraic b = laurent_expand(r, c, 1).coefficient(-2);
            auto [ap, am] = detail::order_two_alphas(b);
            detail::push_option(place.case1, {AlgFunc(ap) * detail::inverse_power(c, 1), ap});
            detail::push_option(place.case1, {AlgFunc(am) * detail::inverse_power(c, 1), am});
        } else if (ord % 2 == 0) {
            const int nu = ord / 2;
            auto lau = laurent_expand(r, c, static_cast<std::size_t>(2 * nu + 2));
            auto root = lau.coeffs.sqrt();
            if (!root)
                fail(Errc::UnsupportedField, "leading coefficient of r at " + c.to_string() + " has no supported square root");
            // [sqrt r]_c = sum_{i <= nu-2} s_i t^(i - nu)
            std::vector<Algebraic> top;
            for (int i = 0; i <= nu - 2; ++i)
                top.push_back((*root)[static_cast<std::size_t>(i)]);
            AlgFunc sq = AlgFunc(detail::from_local(Poly<Algebraic>(top), c)) * detail::inverse_power(c, nu);
            Algebraic b = lau.coefficient(-nu - 1);
            for (int i = 0; i <= nu - 2; ++i) {
                int j = nu - 1 - i;
                if (j <= nu - 2)
                    b -= top[static_cast<std::size_t>(i)] * top[static_cast<std::size_t>(j)];
            }
            const Algebraic a = top.front();
            Algebraic half(make_rational(1, 2));
            Algebraic ap = half * (b / a + Algebraic(nu)), am = half * (Algebraic(0) - b / a + Algebraic(nu));
            AlgFunc inv = detail::inverse_power(c, 1);
            detail::push_option(place.case1, {sq + AlgFunc(ap) * inv, ap});
            detail::push_option(place.case1, {-sq + AlgFunc(am) * inv, am});
        }
    }
    auto& inf = d.infinity;
    inf.case1.clear();
    const int o = inf.order;
    if (o > 2) {
        inf.case1.push_back({AlgFunc(), Algebraic(0)});
        inf.case1.push_back({AlgFunc(), Algebraic(1)});
    } else if (o == 2) {
        Algebraic b = laurent_at_infinity<Rational, Algebraic>(r, 1).coefficient(2);
        auto [ap, am] = detail::order_two_alphas(b);
        detail::push_option(inf.case1, {AlgFunc(), ap});
        detail::push_option(inf.case1, {AlgFunc(), am});
    } else if (o % 2 == 0) {
        const int nu = -o / 2;
        auto lau = laurent_at_infinity<Rational, Algebraic>(r, static_cast<std::size_t>(2 * nu + 3));
        auto root = lau.coeffs.sqrt();
        if (!root)
            fail(Errc::UnsupportedField, "leading coefficient of r at infinity has no supported square root");
        // [sqrt r]_inf = sum_{i <= nu} a_i l^(nu - i)
        std::vector<Algebraic> poly(static_cast<std::size_t>(nu + 1), Algebraic());
        for (int i = 0; i <= nu; ++i)
            poly[static_cast<std::size_t>(nu - i)] = (*root)[static_cast<std::size_t>(i)];
        AlgFunc sq{Poly<Algebraic>(poly)};
        // coefficient of l^(nu-1) = s^(1-nu): index nu + 1 from s^(-2 nu)
        Algebraic b = lau.coeffs.at(static_cast<std::size_t>(nu + 1));
        for (int i = 0; i <= nu; ++i) {
            int j = nu + 1 - i;
            if (j >= 0 && j <= nu)
                b -= (*root)[static_cast<std::size_t>(i)] * (*root)[static_cast<std::size_t>(j)];
        }
        const Algebraic a = (*root)[0];
        Algebraic half(make_rational(1, 2));
        Algebraic ap = half * (b / a - Algebraic(nu)), am = half * (Algebraic(0) - b / a - Algebraic(nu));
        detail::push_option(inf.case1, {sq, ap});
        detail::push_option(inf.case1, {-sq, am});
    }
}

/// Kovacic case-2 exponent sets E_c and E_infinity.
inline void fill_case2(LocalExponentData& d)
{
    for (auto& place : d.poles) {
        const int ord = place.pole.order;
        if (ord == 1) {
            place.case2_exponents = {4};
        } else if (ord == 2) {
            if (!place.pole.location)
                fail(Errc::UnsupportedField, "pole place " + place.pole.place.to_string() + " must be split");
            place.case2_exponents = detail::order_two_exponents(laurent_expand(d.r, *place.pole.location, 1).coefficient(-2));
        } else {
            place.case2_exponents = {ord};
        }
    }
    const int o = d.infinity.order;
    if (o > 2)
        d.infinity.case2_exponents = {0, 2, 4};
    else if (o == 2)
        d.infinity.case2_exponents =
            detail::order_two_exponents(laurent_at_infinity<Rational, Algebraic>(d.r, 1).coefficient(2));
    else
        d.infinity.case2_exponents = {o};
}

/// Monic P of degree deg with sum_j ops[j] P^(j) = 0, if one exists.
inline std::optional<Poly<Algebraic>> monic_polynomial_solution(const std::vector<AlgFunc>& ops, int deg)
{
    if (deg < 0)
        return std::nullopt;
    Poly<Algebraic> common(Algebraic(1));
    for (const auto& c : ops)
        if (!c.is_zero()) {
            Poly<Algebraic> g = gcd(common, c.den());
            common = common * (c.den() / g);
        }
    std::vector<Poly<Algebraic>> coeffs;
    for (const auto& c : ops)
        coeffs.push_back(c.is_zero() ? Poly<Algebraic>() : c.num() * (common / c.den()));
    // image of each monomial l^i under the cleared operator
    std::vector<Poly<Algebraic>> images;
    int rows = 0;
    for (int i = 0; i <= deg; ++i) {
        Poly<Algebraic> m = Poly<Algebraic>::monomial(Algebraic(1), static_cast<std::size_t>(i)), acc;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (!coeffs[j].is_zero())
                acc += coeffs[j] * m;
            m = m.derivative();
        }
        rows = std::max(rows, acc.degree() + 1);
        images.push_back(std::move(acc));
    }
    if (rows == 0)
        return Poly<Algebraic>::monomial(Algebraic(1), static_cast<std::size_t>(deg));
    Matrix<Algebraic> a(static_cast<std::size_t>(rows), std::vector<Algebraic>(static_cast<std::size_t>(deg), Algebraic()));
    std::vector<Algebraic> rhs(static_cast<std::size_t>(rows), Algebraic());
    for (int k = 0; k < rows; ++k) {
        for (int i = 0; i < deg; ++i)
            a[k][i] = images[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        rhs[k] = Algebraic(0) - images[static_cast<std::size_t>(deg)][static_cast<std::size_t>(k)];
    }
    auto x = solve_linear(a, rhs, static_cast<std::size_t>(deg));
    if (!x)
        return std::nullopt;
    x->push_back(Algebraic(1));
    return Poly<Algebraic>(*x);
}

/// Back to Q(l) when every coefficient is rational.
inline std::optional<RationalFunction> to_rational_function(const AlgFunc& f)
{
    auto down = [](const Poly<Algebraic>& p) -> std::optional<Polynomial> {
        std::vector<Rational> c;
        for (const auto& v : p.coeffs()) {
            if (!v.is_rational())
                return std::nullopt;
            c.push_back(v.rational_part());
        }
        return Polynomial(c);
    };
    auto n = down(f.num()), d = down(f.den());
    if (!n || !d)
        return std::nullopt;
    return RationalFunction(*n, *d);
}

} // namespace kummer
