// Random planes in the solution space of the symmetric square for R = l meet
// the cone of squares; each witness is printed with its square root.
#include <iostream>
#include <random>

#include "kummer/kummer.hpp"

using namespace kummer;

int main()
{
    std::mt19937 gen(1);
    std::uniform_int_distribution<int> d(-3, 3);
    const RationalFunction R = RationalFunction::x();
    for (int k = 0; k < 5; ++k) {
        std::array<std::array<Algebraic, 3>, 2> plane;
        for (auto& v : plane)
            for (auto& e : v)
                e = Algebraic(Rational(d(gen)));
        try {
            auto c = check_cone_plane<Algebraic>(R, Algebraic(Rational(0)), plane, 8);
            std::cout << "plane " << k << "  discriminant " << c.discriminant.to_string() << "\n";
            for (const auto& w : c.witnesses)
                std::cout << "  (" << w.alpha.to_string() << ")*psi1 + (" << w.beta.to_string()
                          << ")*psi2  linear residual " << w.linear_residual << "\n";
        } catch (const Error& e) {
            std::cout << "plane " << k << "  " << e.what() << "\n";
        }
    }
}
