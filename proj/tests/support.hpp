#pragma once

#include <random>

#include "kummer/kummer.hpp"

namespace kummer::testing {

class Gen {
public:
    explicit Gen(unsigned long seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long range = 5, long den = 4)
    {
        return make_rational(integer(-range, range), integer(1, den));
    }

    Rational nonzero_rational(long range = 5, long den = 4)
    {
        Rational q;
        do
            q = rational(range, den);
        while (sgn(q) == 0);
        return q;
    }

    Polynomial poly(int max_degree, long range = 5)
    {
        int d = static_cast<int>(integer(0, max_degree));
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i)
            c.push_back(rational(range));
        return Polynomial(std::move(c));
    }

    Polynomial nonzero_poly(int max_degree, long range = 5)
    {
        Polynomial p;
        do
            p = poly(max_degree, range);
        while (p.is_zero());
        return p;
    }

    RationalFunction rf(int max_degree, long range = 5)
    {
        return RationalFunction(poly(max_degree, range), nonzero_poly(max_degree, range));
    }

    Algebraic gaussian(long range = 4, long den = 3)
    {
        return Algebraic::gaussian(rational(range, den), rational(range, den));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline RationalFunction rf(const char* text) { return parse_rational_function(text); }

} // namespace kummer::testing
