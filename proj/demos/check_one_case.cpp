// Checks both truncated-sum congruence families at a single (n, d, r) and
// prints the verdicts with observed cyclotomic multiplicities.
//
//   ./check_one_case 7 2 1

#include "qsc/congruence.hpp"

#include <cstdlib>
#include <iostream>

using namespace qsc;

static void show(const char* label, Family f, const QCase& c) {
    CongruenceVerdict v = check_congruent_parts(lhs_fused_parts(f, c),
                                                rhs_fused_parts(f, c),
                                                standard_modulus(c.n));
    std::cout << label << ": " << (v.holds ? "holds" : "FAILS")
              << "  multiplicity of Phi_n(-q): " << v.max_multiplicity[0]
              << ", of Phi_n(q): " << v.max_multiplicity[1] << "\n";
    if (!v.holds && !v.residue.is_zero())
        std::cout << "  residue " << v.residue.str() << "\n";
}

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: check_one_case <n> <d> <r>\n";
        return 2;
    }
    QCase c{std::atol(argv[1]), std::atol(argv[2]), std::atol(argv[3])};
    if (const char* why = qcase_invalid_reason(c)) {
        std::cerr << "invalid case: " << why << "\n";
        return 2;
    }

    std::cout << "case (n, d, r) = (" << c.n << ", " << c.d << ", " << c.r
              << "), sum length " << c.m() + 1 << ", modulus degree "
              << standard_modulus(c.n).expanded.degree() << "\n";
    show("cubed family  ", Family::cubed, c);
    show("squared family", Family::squared, c);
    return 0;
}
