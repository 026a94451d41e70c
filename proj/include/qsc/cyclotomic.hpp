#pragma once

// Cyclotomic polynomials and the composite moduli the congruence checks run
// against.  Phi_n(q) is built by exact division of q^n - 1 by the lower
// cyclotomics and memoized; Phi_n(-q) is its image under q -> -q normalized
// to a positive leading coefficient.

#include "qsc/poly_gcd.hpp"

#include <mutex>
#include <vector>

namespace qsc {

inline LaurentPoly cyclotomic(long n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<long, LaurentPoly> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    LaurentPoly result;
    if (n == 1) {
        result = LaurentPoly::one_minus_qpow(1) * Rational(-1);  // q - 1
    } else {
        LaurentPoly rest(1);
        for (long d = 1; d < n; ++d)
            if (n % d == 0) rest = rest * cyclotomic(d);
        LaurentPoly full = LaurentPoly::qpow(n) - LaurentPoly(1);
        result = poly_divexact(full, rest);
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(n, result);
    return result;
}

// Phi_n(-q), sign-normalized so the leading coefficient is +1.
inline LaurentPoly cyclotomic_neg(long n) {
    LaurentPoly p = cyclotomic(n).subst_q_negated();
    if (sgn(p.leading_coeff()) < 0) p = -p;
    return p;
}

// A polynomial modulus given as powers of pairwise coprime bases.
struct Modulus {
    std::vector<std::pair<LaurentPoly, int>> factors;
    LaurentPoly expanded;

    Modulus(std::initializer_list<std::pair<LaurentPoly, int>> fs)
        : Modulus(std::vector<std::pair<LaurentPoly, int>>(fs)) {}
    explicit Modulus(std::vector<std::pair<LaurentPoly, int>> fs) : factors(std::move(fs)) {
        if (factors.empty()) throw std::invalid_argument("modulus needs at least one factor");
        expanded = LaurentPoly(1);
        for (auto& [base, mult] : factors) {
            if (base.is_zero() || base.degree() - base.low_exp() == 0)
                throw std::invalid_argument("modulus factor must be nonconstant");
            if (mult <= 0) throw std::invalid_argument("modulus multiplicity must be positive");
            expanded *= poly_pow(base, static_cast<unsigned>(mult));
        }
        for (size_t i = 0; i < factors.size(); ++i)
            for (size_t j = i + 1; j < factors.size(); ++j)
                if (poly_gcd_primitive(factors[i].first, factors[j].first).degree() > 0)
                    throw std::invalid_argument("modulus factors are not pairwise coprime");
    }
};

// Phi_n(-q)^3 * Phi_n(q)^2, the modulus of the two main truncated-sum
// congruences; defined for odd n >= 3 only.
inline Modulus standard_modulus(long n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("standard modulus requires odd n >= 3");
    return Modulus{{cyclotomic_neg(n), 3}, {cyclotomic(n), 2}};
}

// The sharper modulus in the d = 2, r = +-1 family: the Phi_n(q) exponent
// rises to 3 when n = 3 (mod 4).
inline Modulus sharp_modulus(long n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("sharp modulus requires odd n >= 3");
    int qmult = (n % 4 == 3) ? 3 : 2;
    return Modulus{{cyclotomic_neg(n), 3}, {cyclotomic(n), qmult}};
}

}  // namespace qsc
