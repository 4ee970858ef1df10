#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <type_traits>

#include "kummer/algebra/algebraic.hpp"
#include "kummer/algebra/rational.hpp"

namespace kummer {

using Complex = std::complex<double>;

/// Coefficient fields the templates are instantiated with.
template <class F>
concept Field = std::is_same_v<F, Rational> || std::is_same_v<F, Algebraic> || std::is_same_v<F, Complex>;

template <class F>
inline constexpr bool is_exact_v = !std::is_same_v<F, Complex>;

template <class F>
F embed(const Rational& q)
{
    if constexpr (std::is_same_v<F, Complex>)
        return Complex(q.get_d(), 0.0);
    else
        return F(q);
}

template <class F>
F embed(const Algebraic& a)
{
    if constexpr (std::is_same_v<F, Complex>)
        return a.to_complex();
    else if constexpr (std::is_same_v<F, Algebraic>)
        return a;
    else
        return a.to_rational();
}

template <class F>
F embed(const Complex& z)
{
    static_assert(std::is_same_v<F, Complex>, "floating values cannot be embedded into an exact field");
    return z;
}

inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline Complex to_complex(const Algebraic& a) { return a.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

inline std::string to_string(const Complex& z)
{
    char buf[64];
    if (z.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    else
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

/// Pivot preference for elimination: exact fields accept any nonzero entry,
/// floating point picks the largest magnitude.
inline double pivot_weight(const Rational& q) { return sgn(q) == 0 ? 0.0 : 1.0; }
inline double pivot_weight(const Algebraic& a) { return a.is_zero() ? 0.0 : 1.0; }
inline double pivot_weight(const Complex& z) { return std::abs(z); }

/// Square root inside F when it exists there.
inline std::optional<Rational> field_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    auto r = Algebraic::sqrt_rational(q);
    if (!r || !r->is_rational())
        return std::nullopt;
    return r->rational_part();
}
inline std::optional<Algebraic> field_sqrt(const Algebraic& a) { return a.sqrt(); }
inline std::optional<Complex> field_sqrt(const Complex& z) { return std::sqrt(z); }

} // namespace kummer
