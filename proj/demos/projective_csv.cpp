// tau = psi1/psi2 for R = l along a path around the origin, as CSV on stdout.
#include <iostream>

#include "kummer/kummer.hpp"

using namespace kummer;

int main()
{
    NumericPath path({Complex(0), Complex(1), Complex(0, 1), Complex(-1), Complex(0, -1), Complex(0)});
    ProjectiveCheck c = check_projective_relation(RationalFunction::x(), path);
    c.tau.write_csv(std::cout);
    std::cerr << "max |S(tau) - l| = " << c.max_residual << "\n";
}
