#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kummer/algebra/series.hpp"

namespace kummer {

/// k-jet of a local biholomorphism: source x, target phi(x) and the
/// derivatives phi'(x), ..., phi^(k)(x). S = Algebraic gives exact jets with
/// Gaussian-rational (or surd) entries, S = Complex floating point ones.
///
/// A 0-jet (no derivatives) is allowed as the seed of a prolongation; the
/// groupoid operations need order >= 1.
template <class S>
class BasicJet {
public:
    static constexpr bool exact = is_exact_v<S>;

    BasicJet() = default;
    BasicJet(S source, S target, std::vector<S> coeffs)
        : source_(std::move(source)), target_(std::move(target)), coeffs_(std::move(coeffs))
    {
        if (!coeffs_.empty() && is_zero(coeffs_[0]))
            fail(Errc::NotInvertible, "jet with vanishing first derivative");
    }

    static BasicJet identity(const S& at, std::size_t order)
    {
        std::vector<S> c(order, S(0));
        if (order > 0)
            c[0] = S(1);
        return BasicJet(at, at, std::move(c));
    }

    const S& source() const { return source_; }
    const S& target() const { return target_; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    /// phi^(j)(source), j >= 1
    const S& derivative(std::size_t j) const { return coeffs_.at(j - 1); }
    std::size_t order() const { return coeffs_.size(); }

    BasicJet truncated(std::size_t k) const
    {
        BasicJet r = *this;
        if (k < r.coeffs_.size())
            r.coeffs_.resize(k);
        return r;
    }

    /// Taylor coefficients of phi(source + t) - target, i.e. c_j / j!.
    Series<S> taylor() const
    {
        Series<S> s(coeffs_.size() + 1, S(0));
        S fact = S(1);
        for (std::size_t j = 1; j <= coeffs_.size(); ++j) {
            fact = fact * S(static_cast<long>(j));
            s[j] = coeffs_[j - 1] / fact;
        }
        return s;
    }

    static BasicJet from_taylor(const S& source, const S& target, const Series<S>& s)
    {
        std::vector<S> c;
        S fact = S(1);
        for (std::size_t j = 1; j < s.size(); ++j) {
            fact = fact * S(static_cast<long>(j));
            c.push_back(s[j] * fact);
        }
        return BasicJet(source, target, std::move(c));
    }

    template <class T>
    BasicJet<T> to() const
    {
        std::vector<T> c;
        for (const auto& v : coeffs_)
            c.push_back(embed<T>(v));
        return BasicJet<T>(embed<T>(source_), embed<T>(target_), std::move(c));
    }

    friend bool operator==(const BasicJet& a, const BasicJet& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.coeffs_ == b.coeffs_;
    }

    /// "source,target;c1,c2,..."
    std::string to_string() const
    {
        std::string out = kummer::to_string(source_) + "," + kummer::to_string(target_) + ";";
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out += (i ? "," : "") + kummer::to_string(coeffs_[i]);
        return out;
    }

private:
    S source_{};
    S target_{};
    std::vector<S> coeffs_;
};

using ExactJet = BasicJet<Algebraic>;
using NumericJet = BasicJet<Complex>;

namespace detail {

inline bool same_point(const Algebraic& a, const Algebraic& b) { return a == b; }
inline bool same_point(const Complex& a, const Complex& b)
{
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

} // namespace detail

/// Jet of g o f at f.source. The longer jet is truncated to the common order.
template <class S>
BasicJet<S> compose(const BasicJet<S>& g, const BasicJet<S>& f)
{
    if (!detail::same_point(f.target(), g.source()))
        fail(Errc::SourceTargetMismatch,
             "target " + to_string(f.target()) + " does not match source " + to_string(g.source()));
    const std::size_t k = std::min(f.order(), g.order());
    if (k == 0)
        return BasicJet<S>(f.source(), g.target(), {});
    Series<S> fs = f.truncated(k).taylor(), gs = g.truncated(k).taylor();
    return BasicJet<S>::from_taylor(f.source(), g.target(), gs.compose(fs));
}

template <class S>
BasicJet<S> invert(const BasicJet<S>& f)
{
    if (f.order() == 0)
        return BasicJet<S>(f.target(), f.source(), {});
    if constexpr (!BasicJet<S>::exact) {
        if (std::abs(f.derivative(1)) < 1e-300)
            fail(Errc::NotInvertible, "first derivative vanishes");
    }
    return BasicJet<S>::from_taylor(f.target(), f.source(), f.taylor().reversion());
}

/// k-jet at x of the vector field f(l) d/dl: the values f(x), ..., f^(k)(x).
template <class S>
struct JetVectorField {
    S base{};
    std::vector<S> values;

    std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }

    /// Cubic (or order-k) Taylor polynomial of f around base, in the local
    /// variable t = l - base.
    Series<S> taylor() const
    {
        Series<S> s(values.size(), S(0));
        S fact = S(1);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j > 0)
                fact = fact * S(static_cast<long>(j));
            s[j] = values[j] / fact;
        }
        return s;
    }
};

} // namespace kummer
