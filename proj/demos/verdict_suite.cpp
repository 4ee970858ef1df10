// Classifies a handful of potentials and prints the certificate of each.
#include <iomanip>
#include <iostream>

#include "kummer/kummer.hpp"

using namespace kummer;

int main()
{
    const char* suite[] = {"0", "-2*(1+l^2)", "1/(2*l^2)", "l", "(3-4*l)/(8*l^2)", "2/(l^2+1)", "-2/l^2", "l^3",
                           "1/(l^3-2)"};
    for (const char* text : suite) {
        MinimalityReport m = verdict(parse_rational_function(text));
        std::cout << std::left << std::setw(18) << text << std::setw(18) << case_name(m.verdict.label)
                  << m.verdict.galois();
        if (m.verdict.certificate.kind != Certificate::Kind::None)
            std::cout << "  " << m.verdict.certificate.kind_name() << ": " << m.verdict.certificate.value_text();
        std::cout << "\n";
        if (m.subgroupoid)
            std::cout << std::setw(18) << "" << "subgroupoid " << m.subgroupoid->to_string() << " = 0\n";
    }
}
