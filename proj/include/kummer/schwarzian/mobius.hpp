#pragma once

#include <array>
#include <string>
#include <vector>

#include "kummer/algebra/rational_function.hpp"
#include "kummer/jet/jet.hpp"

namespace kummer {

/// t -> (a t + b) / (c t + e), stored with the first nonzero entry scaled to 1.
template <class S>
class BasicMobius {
public:
    BasicMobius() : BasicMobius(S(1), S(0), S(0), S(1)) {}
    BasicMobius(S a, S b, S c, S e) : m_{std::move(a), std::move(b), std::move(c), std::move(e)}
    {
        S det = m_[0] * m_[3] - m_[1] * m_[2];
        if (is_zero(det))
            fail(Errc::NotInvertible, "Mobius matrix with ae - bc = 0");
        for (const auto& v : m_)
            if (!is_zero(v)) {
                S inv = S(1) / v;
                for (auto& w : m_)
                    w = w * inv;
                break;
            }
    }

    static BasicMobius identity() { return {}; }

    const S& a() const { return m_[0]; }
    const S& b() const { return m_[1]; }
    const S& c() const { return m_[2]; }
    const S& e() const { return m_[3]; }
    S det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    S operator()(const S& t) const
    {
        S d = m_[2] * t + m_[3];
        if (is_zero(d))
            fail(Errc::PoleOfMobius, "Mobius map has a pole at " + to_string(t));
        return (m_[0] * t + m_[1]) / d;
    }

    /// this o other
    BasicMobius compose(const BasicMobius& o) const
    {
        return {a() * o.a() + b() * o.c(), a() * o.b() + b() * o.e(), c() * o.a() + e() * o.c(), c() * o.b() + e() * o.e()};
    }

    BasicMobius inverse() const { return {e(), S(0) - b(), S(0) - c(), a()}; }

    /// k-jet of the map at t: m^(n)(t) = n! (-c)^(n-1) det / (c t + e)^(n+1).
    BasicJet<S> jet_at(const S& t, std::size_t k) const
    {
        S d = m_[2] * t + m_[3];
        if (is_zero(d))
            fail(Errc::PoleOfMobius, "Mobius map has a pole at " + to_string(t));
        std::vector<S> coeffs;
        S num = det();
        S den = d * d;
        for (std::size_t n = 1; n <= k; ++n) {
            coeffs.push_back(num / den);
            num = num * S(static_cast<long>(n + 1)) * (S(0) - m_[2]);
            den = den * d;
        }
        return BasicJet<S>(t, (*this)(t), std::move(coeffs));
    }

    friend bool operator==(const BasicMobius& x, const BasicMobius& y) { return x.m_ == y.m_; }

private:
    std::array<S, 4> m_;
};

using Mobius = BasicMobius<Rational>;

/// The Mobius map as an element of Q(l).
inline RationalFunction to_rational_function(const Mobius& m)
{
    return RationalFunction(Polynomial(std::vector<Rational>{m.b(), m.a()}), Polynomial(std::vector<Rational>{m.e(), m.c()}));
}

/// Jet of m o phi from the jet of phi.
template <class S>
BasicJet<S> mobius_apply_jet(const BasicMobius<S>& m, const BasicJet<S>& j)
{
    return compose(m.jet_at(j.target(), j.order()), j);
}

} // namespace kummer
