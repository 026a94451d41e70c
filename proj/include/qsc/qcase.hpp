#pragma once

// The hypothesis triple (n, d, r) shared by all q-congruence statements, and
// the named-reason validity check that sweep logs echo verbatim.

#include "qsc/numbers.hpp"

#include <stdexcept>
#include <string>

namespace qsc {

// The two sum shapes: chains cubed with exponent d*k^2 + 2k(d-r), or chains
// squared with exponent d*k^2 + k(d-r).
enum class Family { cubed, squared };

inline const char* family_name(Family f) { return f == Family::cubed ? "cubed" : "squared"; }

struct QCase {
    long n = 3;  // odd positive, coprime to d
    long d = 2;  // positive
    long r = 1;  // n - d*n + d <= r <= n, r = n (mod d)

    long m() const { return (n - r) / d; }  // upper summation limit

    bool operator==(const QCase& o) const { return n == o.n && d == o.d && r == o.r; }
    bool operator!=(const QCase& o) const { return !(*this == o); }
};

// nullptr when every hypothesis holds, otherwise the violated one by name.
inline const char* qcase_invalid_reason(const QCase& c) {
    if (c.d <= 0) return "d-not-positive";
    if (c.n <= 0 || c.n % 2 == 0) return "n-not-odd-positive";
    if (gcd_long(c.n, c.d) != 1) return "gcd(n,d)-not-1";
    if (c.r < c.n - c.d * c.n + c.d) return "r-below-lower-bound";
    if (c.r > c.n) return "r-above-n";
    if ((c.n - c.r) % c.d != 0) return "n-not-congruent-r-mod-d";
    return nullptr;
}

inline bool qcase_valid(const QCase& c) { return qcase_invalid_reason(c) == nullptr; }

inline void qcase_require(const QCase& c) {
    if (const char* why = qcase_invalid_reason(c))
        throw std::domain_error(std::string("invalid case (") + why + "): n=" +
                                std::to_string(c.n) + " d=" + std::to_string(c.d) +
                                " r=" + std::to_string(c.r));
}

}  // namespace qsc
