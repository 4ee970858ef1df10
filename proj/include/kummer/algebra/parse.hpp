#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "kummer/algebra/rational_function.hpp"

namespace kummer {

namespace detail {

// expr := ["-"] term (("+"|"-") term)*
// term := factor (("*"|"/") factor)*
// factor := atom ("^" uint)?
// atom := "l" | "lambda" | integer | "(" expr ")"
class RfParser {
public:
    explicit RfParser(std::string_view text) : s_(text) {}

    RationalFunction parse()
    {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size())
            error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) const
    {
        fail(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr()
    {
        bool neg = accept('-');
        RationalFunction acc = term();
        if (neg)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term()
    {
        RationalFunction acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                RationalFunction d = factor();
                if (d.is_zero())
                    error("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor()
    {
        RationalFunction base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                error("expected an unsigned exponent");
            std::string digits(s_.substr(start, pos_ - start));
            if (digits.size() > 4)
                error("exponent too large");
            int n = std::stoi(digits);
            return pow(base, n);
        }
        return base;
    }

    RationalFunction atom()
    {
        skip();
        if (pos_ >= s_.size())
            error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!accept(')'))
                error("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            Integer v(std::string(s_.substr(start, pos_ - start)));
            return RationalFunction(Rational(v));
        }
        if (s_.substr(pos_, 6) == "lambda") {
            pos_ += 6;
            return RationalFunction::x();
        }
        if (c == 'l') {
            ++pos_;
            return RationalFunction::x();
        }
        error("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace detail

/// Parses a rational function in the variable l (or lambda).
inline RationalFunction parse_rational_function(std::string_view text)
{
    return detail::RfParser(text).parse();
}

} // namespace kummer
