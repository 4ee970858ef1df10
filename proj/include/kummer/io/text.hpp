#pragma once

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/algebra/parse.hpp"
#include "kummer/jet/jet.hpp"
#include "kummer/numeric/verifier.hpp"

namespace kummer {

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

inline std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

inline Rational parse_constant(std::string_view text)
{
    RationalFunction f = parse_rational_function(text);
    if (f.den().degree() != 0 || f.num().degree() > 0)
        fail(Errc::ParseError, "expected a rational constant, got '" + std::string(text) + "'");
    return f.num().is_zero() ? Rational(0) : Rational(f.num()[0] / f.den()[0]);
}

inline double parse_real(const std::string& t)
{
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        fail(Errc::ParseError, "bad number '" + t + "'");
    return v;
}

} // namespace detail

/// "source,target;c1,c2,..." with rational entries, e.g. "0,0;2,1/2".
inline ExactJet parse_jet(std::string_view text)
{
    auto halves = detail::split(text, ';');
    if (halves.size() != 2)
        fail(Errc::ParseError, "a jet reads source,target;c1,c2,...");
    auto ends = detail::split(halves[0], ',');
    if (ends.size() != 2)
        fail(Errc::ParseError, "a jet reads source,target;c1,c2,...");
    std::vector<Algebraic> coeffs;
    if (!detail::trim(halves[1]).empty())
        for (const auto& c : detail::split(halves[1], ','))
            coeffs.emplace_back(detail::parse_constant(c));
    return ExactJet(Algebraic(detail::parse_constant(ends[0])), Algebraic(detail::parse_constant(ends[1])),
                    std::move(coeffs));
}

/// "x", "yi", "x+yi", "x-yi" (also with j).
inline Complex parse_complex(std::string_view text)
{
    std::string t = detail::trim(text);
    if (t.empty())
        fail(Errc::ParseError, "empty complex number");
    if (t.back() != 'i' && t.back() != 'j')
        return detail::parse_real(t);
    t.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            cut = k;
            break;
        }
    auto imag = [](std::string s) {
        if (s.empty() || s == "+")
            return 1.0;
        if (s == "-")
            return -1.0;
        return detail::parse_real(s);
    };
    if (cut == std::string::npos)
        return {0.0, imag(t)};
    return {detail::parse_real(t.substr(0, cut)), imag(t.substr(cut))};
}

/// Semicolon-separated waypoints, e.g. "0;1;1+0.5i".
inline NumericPath parse_path(std::string_view text)
{
    std::vector<Complex> w;
    for (const auto& p : detail::split(text, ';'))
        w.push_back(parse_complex(p));
    if (w.size() < 2)
        fail(Errc::ParseError, "a path needs at least two waypoints");
    return NumericPath(std::move(w));
}

} // namespace kummer
