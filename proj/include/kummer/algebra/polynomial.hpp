#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kummer/algebra/field.hpp"

namespace kummer {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
template <Field F>
class Poly {
public:
    Poly() = default;
    Poly(const F& constant)
    {
        if (!kummer::is_zero(constant))
            c_.push_back(constant);
    }
    Poly(int constant) : Poly(F(constant)) {}
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
    static Poly monomial(const F& coeff, std::size_t n)
    {
        if (kummer::is_zero(coeff))
            return {};
        std::vector<F> c(n + 1, F(0));
        c[n] = coeff;
        return Poly(std::move(c));
    }
    /// x - root
    static Poly linear(const F& root) { return Poly(std::vector<F>{F(0) - root, F(1)}); }

    const std::vector<F>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    F operator[](std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& leading() const { return c_.back(); }

    /// Number of leading zero coefficients from the bottom (order of vanishing at 0).
    int valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!kummer::is_zero(c_[i]))
                return static_cast<int>(i);
        return -1;
    }

    Poly monic() const
    {
        if (is_zero())
            return {};
        F inv = F(1) / leading();
        return *this * inv;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<F> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * F(static_cast<long>(i));
        return Poly(std::move(d));
    }

    template <class S>
    S eval(const S& point) const
    {
        S acc = S(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * point + embed<S>(c_[i]);
        return acc;
    }

    F eval(const F& point) const
    {
        F acc = F(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * point + c_[i];
        return acc;
    }

    /// p(q(x))
    Poly compose(const Poly& q) const
    {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * q + Poly(c_[i]);
        return acc;
    }

    /// p(x + shift)
    Poly shift(const F& s) const
    {
        std::vector<F> a = c_;
        const std::size_t n = a.size();
        for (std::size_t k = 0; k + 1 < n; ++k)
            for (std::size_t i = n - 1; i > k; --i)
                a[i - 1] = a[i - 1] + s * a[i];
        return Poly(std::move(a));
    }

    /// x^n p(1/x) with n = degree
    Poly reversed() const
    {
        std::vector<F> a(c_.rbegin(), c_.rend());
        return Poly(std::move(a));
    }

    template <Field G, class Fn>
    Poly<G> map(Fn&& fn) const
    {
        std::vector<G> out;
        out.reserve(c_.size());
        for (const auto& v : c_)
            out.push_back(fn(v));
        return Poly<G>(std::move(out));
    }

    template <Field G>
    Poly<G> to() const
    {
        return map<G>([](const F& v) { return embed<G>(v); });
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        std::vector<F> r(n, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-() const
    {
        std::vector<F> r = c_;
        for (auto& v : r)
            v = F(0) - v;
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (kummer::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const F& s)
    {
        if (kummer::is_zero(s))
            return {};
        std::vector<F> r = a.c_;
        for (auto& v : r)
            v = v * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            fail(Errc::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree())
            return {Poly(), a};
        std::vector<F> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        std::vector<F> q(r.size() - db, F(0));
        const F inv = F(1) / b.leading();
        for (std::size_t k = q.size(); k-- > 0;) {
            F coeff = r[k + db] * inv;
            q[k] = coeff;
            if (kummer::is_zero(coeff))
                continue;
            for (std::size_t j = 0; j <= db; ++j)
                r[k + j] = r[k + j] - coeff * b.c_[j];
        }
        r.resize(db);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    std::string to_string(const std::string& var = "l") const;

private:
    std::vector<F> c_;

    void trim()
    {
        while (!c_.empty() && kummer::is_zero(c_.back()))
            c_.pop_back();
    }
};

using Polynomial = Poly<Rational>;

template <Field F>
Poly<F> pow(const Poly<F>& p, unsigned n)
{
    Poly<F> r(F(1)), b = p;
    while (n) {
        if (n & 1)
            r = r * b;
        n >>= 1;
        if (n)
            b = b * b;
    }
    return r;
}

/// Monic gcd. gcd(p, 0) = monic(p); both zero is an error.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    if (a.is_zero() && b.is_zero())
        fail(Errc::BothZero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<F> r = Poly<F>::divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

namespace detail {

template <Field F>
std::string coeff_text(const F& c)
{
    if constexpr (std::is_same_v<F, Rational>)
        return c.get_str();
    else if constexpr (std::is_same_v<F, Algebraic>) {
        std::string s = c.to_string();
        if (c.terms().size() > 1)
            return "(" + s + ")";
        return s;
    } else {
        return "(" + kummer::to_string(c) + ")";
    }
}

template <Field F>
bool negative_leading(const F& c)
{
    if constexpr (std::is_same_v<F, Rational>)
        return sgn(c) < 0;
    else if constexpr (std::is_same_v<F, Algebraic>)
        return c.terms().size() == 1 && sgn(c.terms()[0].second) < 0;
    else
        return false;
}

} // namespace detail

/// Highest degree first, e.g. "l^2 - 1/2*l + 3". Reparses under the
/// rational-function grammar for rational coefficients.
template <Field F>
std::string Poly<F>::to_string(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const F& c = c_[i];
        if (kummer::is_zero(c))
            continue;
        F mag = c;
        bool neg = detail::negative_leading(c);
        if (neg)
            mag = F(0) - c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        bool unit = mag == F(1);
        if (mono.empty())
            out += detail::coeff_text(mag);
        else if (unit)
            out += mono;
        else
            out += detail::coeff_text(mag) + "*" + mono;
        first = false;
    }
    return out;
}

} // namespace kummer
