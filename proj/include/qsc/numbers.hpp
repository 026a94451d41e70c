#pragma once

// GMP-backed exact integers and rationals, plus the handful of small
// number-theoretic helpers the rest of the library leans on.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer igcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Trial-division primality for the small primes the p-adic layer accepts.
inline bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// p-adic valuation of a nonzero rational; throws on zero (v_p(0) = +inf).
inline long valuation(const Rational& x, long p) {
    if (x == 0) throw std::domain_error("valuation of zero is infinite");
    long v = 0;
    Integer num = x.get_num(), den = x.get_den(), q, r;
    const Integer P(p);
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t());
        if (r != 0) break;
        num = q;
        ++v;
    }
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
        if (r != 0) break;
        den = q;
        --v;
    }
    return v;
}

inline bool p_integral(const Rational& x, long p) {
    return x == 0 || valuation(x, p) >= 0;
}

// Unique representative of a p-integral rational in [0, m) for m a power of p
// (or any modulus coprime to the denominator).
inline Integer mod_reduce(const Rational& x, const Integer& m) {
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible modulo " + m.get_str());
    Integer r = (x.get_num() % m) * dinv % m;
    if (r < 0) r += m;
    return r;
}

inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible modulo " + m.get_str());
    return r;
}

}  // namespace qsc
