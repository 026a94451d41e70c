// Factors q^n - 1 into cyclotomic polynomials and prints the two moduli the
// congruence checks are built from.
//
//   ./factor_qn_minus_1 15

#include "qsc/cyclotomic.hpp"

#include <cstdlib>
#include <iostream>

using namespace qsc;

int main(int argc, char** argv) {
    long n = argc > 1 ? std::atol(argv[1]) : 15;
    if (n < 1) {
        std::cerr << "need a positive n\n";
        return 2;
    }

    std::cout << "q^" << n << " - 1 =";
    bool first = true;
    LaurentPoly prod(1);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        LaurentPoly phi = cyclotomic(d);
        std::cout << (first ? " " : " * ") << "(" << phi.str() << ")";
        prod = poly_mul(prod, phi);
        first = false;
    }
    std::cout << "\n";
    LaurentPoly check = -LaurentPoly::one_minus_qpow(n);
    std::cout << "product check: " << (prod == check ? "ok" : "MISMATCH") << "\n\n";

    if (n >= 3 && n % 2 == 1) {
        std::cout << "Phi_" << n << "(q)  = " << cyclotomic(n).str() << "\n";
        std::cout << "Phi_" << n << "(-q) = " << cyclotomic_neg(n).str() << "\n";
        std::cout << "plain modulus degree " << standard_modulus(n).expanded.degree()
                  << ", sharpened " << sharp_modulus(n).expanded.degree() << "\n";
    }
    return 0;
}
