#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kummer/algebra/rational_function.hpp"

namespace kummer {

/// Truncated power series sum c_k t^k, known modulo t^N where N = size().
/// Binary operations truncate to the shorter operand.
template <class S>
class Series {
public:
    Series() = default;
    explicit Series(std::vector<S> c) : c_(std::move(c)) {}
    Series(std::size_t n, const S& fill) : c_(n, fill) {}

    static Series constant(const S& v, std::size_t n)
    {
        Series r(n, S(0));
        if (n > 0)
            r.c_[0] = v;
        return r;
    }
    /// t itself (plus an optional constant term)
    static Series variable(std::size_t n, const S& at = S(0))
    {
        Series r(n, S(0));
        if (n > 0)
            r.c_[0] = at;
        if (n > 1)
            r.c_[1] = S(1);
        return r;
    }

    std::size_t size() const { return c_.size(); }
    const std::vector<S>& coeffs() const { return c_; }
    std::vector<S>& coeffs() { return c_; }
    const S& operator[](std::size_t i) const { return c_[i]; }
    S& operator[](std::size_t i) { return c_[i]; }
    S at(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }

    Series truncated(std::size_t n) const
    {
        Series r = *this;
        r.c_.resize(std::min(n, c_.size()), S(0));
        return r;
    }

    friend Series operator+(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.size(), b.size());
        Series r(n, S(0));
        for (std::size_t i = 0; i < n; ++i)
            r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.size(), b.size());
        Series r(n, S(0));
        for (std::size_t i = 0; i < n; ++i)
            r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Series operator-() const
    {
        Series r = *this;
        for (auto& v : r.c_)
            v = S(0) - v;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.size(), b.size());
        Series r(n, S(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; i + j < n; ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend Series operator*(const Series& a, const S& s)
    {
        Series r = a;
        for (auto& v : r.c_)
            v = v * s;
        return r;
    }
    friend Series operator*(const S& s, const Series& a) { return a * s; }

    Series inverse() const
    {
        if (c_.empty())
            return {};
        if (is_zero(c_[0]))
            fail(Errc::DivisionByZero, "series with zero constant term is not invertible");
        const std::size_t n = c_.size();
        Series r(n, S(0));
        const S inv0 = S(1) / c_[0];
        r.c_[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            S acc = S(0);
            for (std::size_t j = 1; j <= k; ++j)
                acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = S(0) - acc * inv0;
        }
        return r;
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    Series derivative() const
    {
        if (c_.size() <= 1)
            return {};
        Series r(c_.size() - 1, S(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i] * S(static_cast<long>(i));
        return r;
    }

    /// Antiderivative with the given constant; one term longer.
    Series integral(const S& constant = S(0)) const
    {
        Series r(c_.size() + 1, S(0));
        r.c_[0] = constant;
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.c_[i + 1] = c_[i] / S(static_cast<long>(i + 1));
        return r;
    }

    /// Square root with the principal value of sqrt(c0); nullopt if c0 has no
    /// root in S or vanishes.
    std::optional<Series> sqrt() const
    {
        if (c_.empty())
            return Series();
        if (is_zero(c_[0]))
            return std::nullopt;
        auto r0 = field_sqrt(c_[0]);
        if (!r0)
            return std::nullopt;
        const std::size_t n = c_.size();
        Series r(n, S(0));
        r.c_[0] = *r0;
        const S inv = S(1) / (S(2) * *r0);
        for (std::size_t k = 1; k < n; ++k) {
            S acc = c_[k];
            for (std::size_t j = 1; j < k; ++j)
                acc = acc - r.c_[j] * r.c_[k - j];
            r.c_[k] = acc * inv;
        }
        return r;
    }

    /// this(g(t)) for g with zero constant term.
    Series compose(const Series& g) const
    {
        if (g.size() > 0 && !is_zero(g.c_[0]))
            fail(Errc::InvalidArgument, "inner series must vanish at 0");
        const std::size_t n = std::min(c_.size(), g.size());
        Series acc = constant(S(0), n);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * g.truncated(n);
            acc.c_[0] = acc.c_[0] + c_[i];
        }
        return acc.truncated(n);
    }

    /// Compositional inverse for c0 = 0, c1 != 0.
    Series reversion() const
    {
        const std::size_t n = c_.size();
        if (n < 2 || !is_zero(c_[0]))
            fail(Errc::InvalidArgument, "reversion needs c0 = 0 and at least two terms");
        if (is_zero(c_[1]))
            fail(Errc::NotInvertible, "linear coefficient is zero");
        // Newton-free iteration: coefficient k of g is fixed by [t^k] f(g) = 0.
        Series g(n, S(0));
        g.c_[1] = S(1) / c_[1];
        for (std::size_t k = 2; k < n; ++k) {
            Series fg = compose(g.truncated(k + 1));
            g.c_[k] = S(0) - fg.c_[k] / c_[1];
        }
        return g;
    }

    template <class T>
    T eval(const T& t) const
    {
        T acc = T(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * t + embed<T>(c_[i]);
        return acc;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<S> c_;
};

/// Taylor coefficients of p at base: p(base + t) mod t^n.
template <Field F, Field G>
Series<G> taylor_expand(const Poly<F>& p, const G& base, std::size_t n)
{
    Poly<G> shifted = p.template to<G>().shift(base);
    Series<G> r(n, G(0));
    for (std::size_t i = 0; i < n; ++i)
        r[i] = shifted[i];
    return r;
}

/// Taylor coefficients of f at a regular point base.
template <Field F, Field G>
Series<G> taylor_expand(const RatFunc<F>& f, const G& base, std::size_t n)
{
    Series<G> d = taylor_expand(f.den(), base, n);
    if (n > 0 && is_zero(d[0]))
        fail(Errc::DivisionByZero, "expansion point is a pole");
    return taylor_expand(f.num(), base, n) / d;
}

/// Laurent expansion f = t^valuation * (c0 + c1 t + ...) at base, with n terms.
template <class G>
struct Laurent {
    int valuation = 0;
    Series<G> coeffs;

    G coefficient(int power) const
    {
        int k = power - valuation;
        return k < 0 ? G(0) : coeffs.at(static_cast<std::size_t>(k));
    }
};

template <Field F, Field G>
Laurent<G> laurent_expand(const RatFunc<F>& f, const G& base, std::size_t n)
{
    if (f.is_zero())
        fail(Errc::ZeroInput, "Laurent expansion of zero");
    Poly<G> num = f.num().template to<G>().shift(base);
    Poly<G> den = f.den().template to<G>().shift(base);
    const int vn = num.valuation(), vd = den.valuation();
    Series<G> a(n, G(0)), b(n, G(0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = num[i + vn];
        b[i] = den[i + vd];
    }
    return {vn - vd, a / b};
}

/// Expansion at infinity in s = 1/l: f = s^valuation * (c0 + c1 s + ...),
/// valuation = order at infinity.
template <Field F, Field G>
Laurent<G> laurent_at_infinity(const RatFunc<F>& f, std::size_t n)
{
    if (f.is_zero())
        fail(Errc::ZeroInput, "Laurent expansion of zero");
    Poly<G> num = f.num().template to<G>().reversed();
    Poly<G> den = f.den().template to<G>().reversed();
    Series<G> a(n, G(0)), b(n, G(0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = num[i];
        b[i] = den[i];
    }
    return {f.order_at_infinity(), a / b};
}

} // namespace kummer
