#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/error.hpp"

namespace kummer {

using Integer = mpz_class;
/// Exact element of Q. mpq_class keeps numerator and denominator coprime with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        fail(Errc::DivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "3", "-7/4" and plain decimals such as "0.25" (converted exactly).
inline Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s.push_back(c);
    if (s.empty())
        fail(Errc::ParseError, "empty number");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        Integer num;
        if (num.set_str(digits, 10) != 0)
            fail(Errc::ParseError, "bad number '" + text + "'");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0)
        fail(Errc::ParseError, "bad number '" + text + "'");
    if (q.get_den() == 0)
        fail(Errc::DivisionByZero, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational& q, unsigned n)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
    return r;
}

namespace detail {

inline constexpr unsigned long kTrialLimit = 100000;

} // namespace detail

/// Prime factorization of |n| by trial division. Gives up (nullopt) when the
/// cofactor left after trial division cannot be certified.
inline std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(const Integer& n)
{
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    if (m <= 1)
        return out;
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            out.emplace_back(Integer(p), e);
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= detail::kTrialLimit && m > 1; p += 6) {
        if (Integer(p) * p > m)
            break;
        strip(p);
        strip(p + 2);
    }
    if (m == 1)
        return out;
    const Integer limit = Integer(detail::kTrialLimit) * detail::kTrialLimit;
    if (m <= limit || mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
        out.emplace_back(m, 1);
        return out;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        Integer r = sqrt(m);
        if (mpz_probab_prime_p(r.get_mpz_t(), 30) > 0) {
            out.emplace_back(r, 2);
            return out;
        }
    }
    return std::nullopt;
}

/// Writes n = s^2 * m with m squarefree (sign carried by m). nullopt when the
/// factorization is out of reach.
struct SquareSplit {
    Integer square_root;
    Integer squarefree;
};

inline std::optional<SquareSplit> split_square(const Integer& n)
{
    if (n == 0)
        return SquareSplit{Integer(0), Integer(1)};
    if (mpz_perfect_square_p(Integer(abs(n)).get_mpz_t())) {
        return SquareSplit{sqrt(Integer(abs(n))), Integer(n > 0 ? 1 : -1)};
    }
    auto f = factor_integer(n);
    if (!f)
        return std::nullopt;
    Integer s = 1, m = n > 0 ? 1 : -1;
    for (auto& [p, e] : *f) {
        for (unsigned i = 0; i < e / 2; ++i)
            s *= p;
        if (e % 2)
            m *= p;
    }
    return SquareSplit{s, m};
}

/// All positive divisors of |n|, or nullopt if |n| cannot be factored.
inline std::optional<std::vector<Integer>> divisors(const Integer& n)
{
    auto f = factor_integer(n);
    if (!f)
        return std::nullopt;
    std::vector<Integer> out{Integer(1)};
    for (auto& [p, e] : *f) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    return out;
}

} // namespace kummer
