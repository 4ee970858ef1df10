// Kummer residual of the time-eps flow of f d/dl for R = l: f = psi1 psi2
// solves the linearized equation, the perturbed f does not.
#include <iomanip>
#include <iostream>

#include "kummer/kummer.hpp"

using namespace kummer;

int main()
{
    const RationalFunction R = RationalFunction::x();
    const Complex x0 = 0.3;
    Matrix2c id{{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}};
    NumericPath path({Complex(0), x0});
    CompanionSolution c = integrate_companion(R, id, path);
    const auto& a = c.psi1.samples.back().values;
    const auto& b = c.psi2.samples.back().values;
    Complex f0 = a[0] * b[0], f1 = a[1] * b[0] + a[0] * b[1], f2 = a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2];
    Complex f3 = -2.0 * x0 * f1 - f0;
    std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
    for (double shift : {0.0, 1.0}) {
        JetVectorField<Complex> f{x0, {f0, f1, f2, f3 + shift}};
        FlowTangency t = check_flow_tangency(R, f, eps);
        std::cout << (shift == 0.0 ? "linearized solution" : "perturbed f'''") << "\n";
        for (std::size_t i = 0; i < eps.size(); ++i)
            std::cout << "  eps " << std::setw(8) << eps[i] << "  residual " << t.residuals[i] << "\n";
        std::cout << "  slope " << t.slope << "\n";
    }
}
