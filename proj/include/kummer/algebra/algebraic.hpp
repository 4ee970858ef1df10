#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/algebra/rational.hpp"

namespace kummer {

/// Element of a multiquadratic extension Q(i, sqrt(2), sqrt(3), ...).
///
/// Stored as a finite sum  sum_m q_m * sqrt(m)  over squarefree integer keys m,
/// with sqrt(-m) = i*sqrt(m) for m > 0. The key 1 holds the rational part. The
/// square roots of distinct squarefree integers are linearly independent over
/// Q, so the representation is canonical once zero terms are dropped and keys
/// are sorted.
///
/// Gaussian rationals are the elements with keys in {1, -1}; pole locations
/// of quadratic places and Kovacic local exponents live here as well.
class Algebraic {
public:
    using Term = std::pair<Integer, Rational>;

    Algebraic() = default;
    Algebraic(int v) : Algebraic(Rational(v)) {}
    Algebraic(long v) : Algebraic(Rational(v)) {}
    Algebraic(const Rational& q)
    {
        if (sgn(q) != 0)
            terms_.emplace_back(Integer(1), q);
    }

    /// coeff * sqrt(m) for squarefree m.
    static Algebraic surd(const Rational& coeff, const Integer& squarefree_key)
    {
        Algebraic a;
        if (sgn(coeff) != 0)
            a.terms_.emplace_back(squarefree_key, coeff);
        return a;
    }

    static Algebraic i() { return surd(Rational(1), Integer(-1)); }

    static Algebraic gaussian(const Rational& re, const Rational& im) { return Algebraic(re) + surd(im, Integer(-1)); }

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
    bool is_gaussian() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first == 1 || t.first == -1; });
    }

    Rational rational_part() const
    {
        for (const auto& t : terms_)
            if (t.first == 1)
                return t.second;
        return Rational(0);
    }

    Rational coefficient(const Integer& key) const
    {
        for (const auto& t : terms_)
            if (t.first == key)
                return t.second;
        return Rational(0);
    }

    /// Only valid when is_rational().
    Rational to_rational() const
    {
        if (!is_rational())
            fail(Errc::UnsupportedField, "value " + to_string() + " is not rational");
        return rational_part();
    }

    std::complex<double> to_complex() const
    {
        std::complex<double> z(0.0, 0.0);
        for (const auto& [m, q] : terms_) {
            double c = q.get_d();
            if (m > 0)
                z += c * std::sqrt(m.get_d());
            else
                z += std::complex<double>(0.0, c * std::sqrt(-m.get_d()));
        }
        return z;
    }

    friend Algebraic operator+(const Algebraic& a, const Algebraic& b)
    {
        Algebraic r;
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                r.terms_.push_back(*j++);
            } else {
                Rational s = i->second + j->second;
                if (sgn(s) != 0)
                    r.terms_.emplace_back(i->first, s);
                ++i;
                ++j;
            }
        }
        return r;
    }

    Algebraic operator-() const
    {
        Algebraic r = *this;
        for (auto& t : r.terms_)
            t.second = -t.second;
        return r;
    }

    friend Algebraic operator-(const Algebraic& a, const Algebraic& b) { return a + (-b); }

    friend Algebraic operator*(const Algebraic& a, const Algebraic& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [m, p] : a.terms_) {
            for (const auto& [n, q] : b.terms_) {
                auto [key, factor] = multiply_keys(m, n);
                acc.emplace_back(key, Rational(p * q * factor));
            }
        }
        return from_unsorted(std::move(acc));
    }

    friend Algebraic operator/(const Algebraic& a, const Algebraic& b) { return a * b.inverse(); }

    Algebraic& operator+=(const Algebraic& o) { return *this = *this + o; }
    Algebraic& operator-=(const Algebraic& o) { return *this = *this - o; }
    Algebraic& operator*=(const Algebraic& o) { return *this = *this * o; }
    Algebraic& operator/=(const Algebraic& o) { return *this = *this / o; }

    friend bool operator==(const Algebraic& a, const Algebraic& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Algebraic& a, const Algebraic& b) { return !(a == b); }

    Algebraic inverse() const
    {
        if (is_zero())
            fail(Errc::DivisionByZero, "inverse of zero");
        if (is_rational())
            return Algebraic(Rational(1 / rational_part()));
        // x^{-1} = s(x) * (x s(x))^{-1} for an automorphism s that flips a
        // generator; x s(x) lives in a strictly smaller subfield.
        Algebraic conj = conjugate_by(pick_generator());
        return conj * (*this * conj).inverse();
    }

    /// Exact square root inside the multiquadratic field, when one exists and
    /// can be found (rational radicands always can, up to factoring limits).
    std::optional<Algebraic> sqrt() const
    {
        if (is_zero())
            return Algebraic();
        if (is_rational())
            return sqrt_rational(rational_part());
        // Try y = p + c*sqrt(k) with p, c rational when x = a + b*sqrt(k).
        bool one_surd = terms_.size() == 1 || (terms_.size() == 2 && terms_[0].first == 1);
        if (one_surd) {
            const Rational a = terms_.size() == 2 ? terms_[0].second : Rational(0);
            const Rational& b = terms_.back().second;
            const Integer& k = terms_.back().first;
            Rational disc = a * a - Rational(k) * b * b;
            if (sgn(disc) < 0)
                return std::nullopt;
            auto sd = sqrt_rational(disc);
            if (!sd || !sd->is_rational())
                return std::nullopt;
            for (int sign : {1, -1}) {
                Rational p2 = (a + sign * sd->rational_part()) / 2;
                auto p = sqrt_rational(p2);
                if (!p || !p->is_rational() || sgn(p->rational_part()) == 0)
                    continue;
                Rational c = b / (2 * p->rational_part());
                Algebraic y = *p + surd(c, k);
                if (y * y == *this)
                    return y;
            }
        }
        return std::nullopt;
    }

    static std::optional<Algebraic> sqrt_rational(const Rational& q)
    {
        if (sgn(q) == 0)
            return Algebraic();
        // sqrt(a/b) = sqrt(a*b)/b
        Integer ab = q.get_num() * q.get_den();
        auto split = split_square(ab);
        if (!split)
            return std::nullopt;
        Rational coeff(split->square_root, q.get_den());
        coeff.canonicalize();
        return surd(coeff, split->squarefree);
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, q] : terms_) {
            Rational c = q;
            if (!first) {
                out += sgn(c) < 0 ? " - " : " + ";
                c = abs(c);
            }
            std::string radical;
            if (m == -1)
                radical = "i";
            else if (m < 0)
                radical = "i*sqrt(" + Integer(-m).get_str() + ")";
            else if (m != 1)
                radical = "sqrt(" + m.get_str() + ")";
            if (radical.empty())
                out += c.get_str();
            else if (c == 1)
                out += radical;
            else if (c == -1)
                out += "-" + radical;
            else
                out += c.get_str() + "*" + radical;
            first = false;
        }
        return out;
    }

private:
    std::vector<Term> terms_;

    static std::pair<Integer, Integer> multiply_keys(const Integer& m, const Integer& n)
    {
        if (m == 1)
            return {n, Integer(1)};
        if (n == 1)
            return {m, Integer(1)};
        Integer am = abs(m), an = abs(n);
        Integer g = gcd(am, an);
        Integer k = (am / g) * (an / g);
        bool nm = m < 0, nn = n < 0;
        if (nm && nn)
            return {k, Integer(-g)};
        if (nm != nn)
            return {Integer(-k), g};
        return {k, g};
    }

    static Algebraic from_unsorted(std::vector<Term> acc)
    {
        std::sort(acc.begin(), acc.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        Algebraic r;
        for (auto& t : acc) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first)
                r.terms_.back().second += t.second;
            else
                r.terms_.push_back(std::move(t));
        }
        r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(), [](const Term& t) { return sgn(t.second) == 0; }),
                       r.terms_.end());
        return r;
    }

    // Generator g: either -1 (flip i) or a squarefree b > 1 with gcd(b, key) in
    // {1, b} for every key present, so that sqrt(m) -> -sqrt(m) for b | m is a
    // field automorphism.
    Integer pick_generator() const
    {
        for (const auto& t : terms_)
            if (t.first < 0)
                return Integer(-1);
        Integer b = 0;
        for (const auto& t : terms_)
            if (t.first > 1) {
                b = t.first;
                break;
            }
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : terms_) {
                Integer g = gcd(b, abs(t.first));
                if (g > 1 && g < b) {
                    b = g;
                    changed = true;
                }
            }
        }
        return b;
    }

    Algebraic conjugate_by(const Integer& gen) const
    {
        Algebraic r = *this;
        for (auto& [m, q] : r.terms_) {
            bool flip = gen == -1 ? m < 0 : mpz_divisible_p(Integer(abs(m)).get_mpz_t(), gen.get_mpz_t()) != 0;
            if (flip)
                q = -q;
        }
        return r;
    }
};

inline bool is_zero(const Algebraic& a) { return a.is_zero(); }
inline std::string to_string(const Algebraic& a) { return a.to_string(); }

} // namespace kummer
