#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kummer/algebra/polynomial.hpp"

namespace kummer {

/// Element of F(l) in canonical form: coprime numerator/denominator with a
/// monic denominator. Zero is 0/1. Equality is structural on that form.
template <Field F>
class RatFunc {
public:
    RatFunc() : num_(), den_(F(1)) {}
    RatFunc(const F& c) : num_(c), den_(F(1)) {}
    RatFunc(int c) : RatFunc(F(c)) {}
    RatFunc(Poly<F> p) : num_(std::move(p)), den_(F(1)) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc x() { return RatFunc(Poly<F>::x()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
    F constant_value() const { return num_[0]; }

    RatFunc derivative() const
    {
        // (n/d)' = (n' d - n d') / d^2
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// deg(den) - deg(num)
    int order_at_infinity() const
    {
        if (is_zero())
            fail(Errc::ZeroInput, "order at infinity of the zero function");
        return den_.degree() - num_.degree();
    }

    template <class S>
    S eval(const S& point) const
    {
        S d = den_.eval(point);
        if (kummer::is_zero(d))
            fail(Errc::DivisionByZero, "evaluation at a pole");
        return num_.eval(point) / d;
    }

    /// this(g(l))
    RatFunc compose(const RatFunc& g) const
    {
        const int n = std::max(num_.degree(), den_.degree());
        if (n <= 0)
            return *this;
        // p(gn/gd) * gd^n = sum p_k gn^k gd^(n-k)
        std::vector<Poly<F>> gn_pow{Poly<F>(F(1))}, gd_pow{Poly<F>(F(1))};
        for (int k = 1; k <= n; ++k) {
            gn_pow.push_back(gn_pow.back() * g.num_);
            gd_pow.push_back(gd_pow.back() * g.den_);
        }
        auto hom = [&](const Poly<F>& p) {
            Poly<F> acc;
            for (int k = 0; k <= p.degree(); ++k)
                if (!kummer::is_zero(p.coeffs()[k]))
                    acc += gn_pow[k] * gd_pow[n - k] * p.coeffs()[k];
            return acc;
        };
        Poly<F> top = hom(num_), bottom = hom(den_);
        if (bottom.is_zero())
            fail(Errc::DivisionByZero, "composition lands on a pole identically");
        return RatFunc(std::move(top), std::move(bottom));
    }

    template <Field G>
    RatFunc<G> to() const
    {
        return RatFunc<G>(num_.template to<G>(), den_.template to<G>());
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        if (a.den_ == b.den_)
            return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        // cross-cancel first to keep the gcd cheap
        Poly<F> g1 = a.num_.is_zero() || b.den_.degree() == 0 ? Poly<F>(F(1)) : gcd(a.num_, b.den_);
        Poly<F> g2 = b.num_.is_zero() || a.den_.degree() == 0 ? Poly<F>(F(1)) : gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        r.fix_leading();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero())
            fail(Errc::DivisionByZero, "rational function division by zero");
        RatFunc inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.fix_leading();
        return a * inv;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "l") const
    {
        if (den_.degree() == 0)
            return num_.to_string(var);
        auto terms = [](const Poly<F>& p) {
            return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const F& c) { return !kummer::is_zero(c); });
        };
        // the denominator is monic, so a single term prints as a bare power
        std::string d = den_.to_string(var);
        if (terms(den_) > 1)
            d = "(" + d + ")";
        std::string n = num_.to_string(var);
        if (terms(num_) > 1 || (num_.degree() > 0 && n.find('/') != std::string::npos) ||
            (!std::is_same_v<F, Rational> && !(n.front() == '(' && n.back() == ')')))
            n = "(" + n + ")";
        return n + "/" + d;
    }

private:
    Poly<F> num_;
    Poly<F> den_;

    void normalize()
    {
        if (den_.is_zero())
            fail(Errc::DivisionByZero, "zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        if (den_.degree() > 0) {
            Poly<F> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        fix_leading();
    }

    void fix_leading()
    {
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        F lc = den_.leading();
        if (!(lc == F(1))) {
            F inv = F(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

using RationalFunction = RatFunc<Rational>;

template <Field F>
bool is_zero(const RatFunc<F>& r)
{
    return r.is_zero();
}

template <Field F>
RatFunc<F> pow(const RatFunc<F>& r, int n)
{
    if (n < 0)
        return RatFunc<F>(F(1)) / pow(r, -n);
    return RatFunc<F>(pow(r.num(), static_cast<unsigned>(n)), pow(r.den(), static_cast<unsigned>(n)));
}

} // namespace kummer
