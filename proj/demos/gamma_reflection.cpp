// Tabulates the p-adic gamma function on 1/d arguments and demonstrates the
// reflection identity Gamma_p(x) Gamma_p(1-x) = (-1)^{a_p(x)} mod p^e.
//
//   ./gamma_reflection 13 3

#include "qsc/padic.hpp"

#include <cstdlib>
#include <iostream>

using namespace qsc;

int main(int argc, char** argv) {
    long p = argc > 1 ? std::atol(argv[1]) : 13;
    int e = argc > 2 ? std::atoi(argv[2]) : 3;
    PadicContext ctx(p, e);
    std::cout << "Gamma_" << p << " mod " << p << "^" << e << " = " << ctx.pe << "\n\n";

    for (long d : {2L, 3L, 4L, 5L, 6L}) {
        if (d % p == 0) continue;
        Rational x(1, d);
        Integer g = gamma_p(ctx, x);
        Integer h = gamma_p(ctx, 1 - x);
        Integer prod = mod_reduce(Rational(g) * h, ctx.pe);
        int sign = parity_sign(a_p(x, p));
        std::cout << "Gamma(1/" << d << ") = " << g.get_str()
                  << "   Gamma(1 - 1/" << d << ") = " << h.get_str()
                  << "   product = " << prod.get_str()
                  << "   expected (-1)^" << a_p(x, p) << " = "
                  << mod_reduce(Rational(sign), ctx.pe).get_str()
                  << (prod == mod_reduce(Rational(sign), ctx.pe) ? "  ok" : "  MISMATCH")
                  << "\n";
    }
    return 0;
}
