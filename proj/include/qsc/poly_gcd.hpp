#pragma once

// Polynomial gcd over the rationals, computed by modular images: reduce both
// primitive integer polynomials mod word-size primes, gcd over F_p, scale to
// the integer leading-coefficient bound, CRT-combine, and certify the
// symmetric lift by exact trial division.  A degree-0 image settles the
// common coprime case after a single prime.

#include "qsc/laurent.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace qsc {
namespace detail {

inline uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t fp_inv(uint64_t a, uint64_t p) { return fp_pow(a, p - 2, p); }

using FpVec = std::vector<uint64_t>;  // dense, index = exponent

inline void fp_trim(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a := a mod b; b trimmed, nonempty
inline void fp_rem(FpVec& a, const FpVec& b, uint64_t p) {
    uint64_t binv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t f = fp_mul(a.back(), binv, p);
        if (f != 0) {
            size_t off = a.size() - b.size();
            for (size_t j = 0; j + 1 < b.size(); ++j) {
                uint64_t t = fp_mul(f, b[j], p);
                uint64_t& dst = a[off + j];
                dst = (dst >= t) ? dst - t : dst + p - t;
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.empty()) return;
    }
}

inline FpVec fp_gcd(FpVec a, FpVec b, uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        fp_rem(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = fp_mul(c, inv, p);
    }
    return a;
}

// 62-bit prime pool, grown on demand.
inline uint64_t nth_modular_prime(size_t i) {
    static std::vector<uint64_t> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (primes.empty()) {
        mpz_class p = mpz_class(1) << 62;
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(static_cast<uint64_t>(p.get_ui()));
    }
    while (primes.size() <= i) {
        mpz_class p(static_cast<unsigned long>(primes.back()));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(static_cast<uint64_t>(p.get_ui()));
    }
    return primes[i];
}

// Dense ordinary-view integer coefficients of a primitive polynomial.
inline std::vector<Integer> int_coeffs(const LaurentPoly& prim) {
    std::vector<Integer> v(static_cast<size_t>(prim.degree()) + 1, Integer(0));
    for (auto& [e, c] : prim.terms()) v[static_cast<size_t>(e)] = c.get_num();
    return v;
}

inline FpVec to_fp(const std::vector<Integer>& v, uint64_t p) {
    FpVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = mpz_fdiv_ui(v[i].get_mpz_t(), static_cast<unsigned long>(p));
    fp_trim(r);
    return r;
}

inline Integer eval_int(const std::vector<Integer>& v, long x) {
    Integer acc = 0;
    for (size_t i = v.size(); i-- > 0;) acc = acc * x + v[i];
    return acc;
}

// Does the primitive integer polynomial h divide a exactly?  Integer-point
// probes reject cheaply; the certifying division aborts on the first
// non-divisible step.
inline bool int_poly_divides(const std::vector<Integer>& h, const std::vector<Integer>& a,
                             const Integer& a_at_2, const Integer& a_at_3) {
    if (h.size() > a.size()) return false;
    {
        Integer h2 = eval_int(h, 2);
        if (h2 != 0 && !mpz_divisible_p(a_at_2.get_mpz_t(), h2.get_mpz_t())) return false;
        Integer h3 = eval_int(h, 3);
        if (h3 != 0 && !mpz_divisible_p(a_at_3.get_mpz_t(), h3.get_mpz_t())) return false;
    }
    std::vector<Integer> r = a;
    const Integer& lead = h.back();
    for (size_t i = a.size() - h.size() + 1; i-- > 0;) {
        Integer& top = r[i + h.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (size_t j = 0; j < h.size(); ++j) r[i + j] -= f * h[j];
    }
    for (size_t i = 0; i + 1 < h.size(); ++i)
        if (r[i] != 0) return false;
    return true;
}

}  // namespace detail

// Primitive integer gcd (positive leading coefficient) in the ordinary view.
inline LaurentPoly poly_gcd_primitive(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return primitive_decompose(b).prim;
    if (b.is_zero()) return primitive_decompose(a).prim;
    LaurentPoly pa = primitive_decompose(a).prim;
    LaurentPoly pb = primitive_decompose(b).prim;
    if (pa.degree() == 0 || pb.degree() == 0) return LaurentPoly(1);

    std::vector<Integer> va = detail::int_coeffs(pa), vb = detail::int_coeffs(pb);
    const Integer gamma = igcd(va.back(), vb.back());
    const Integer va2 = detail::eval_int(va, 2), va3 = detail::eval_int(va, 3);
    const Integer vb2 = detail::eval_int(vb, 2), vb3 = detail::eval_int(vb, 3);

    std::vector<Integer> res;  // CRT residues of gamma * (monic image gcd)
    Integer mod = 1;
    long cur_deg = -1;
    for (size_t pi = 0;; ++pi) {
        uint64_t p = detail::nth_modular_prime(pi);
        const mpz_class P(static_cast<unsigned long>(p));
        if (mpz_divisible_ui_p(va.back().get_mpz_t(), static_cast<unsigned long>(p)) ||
            mpz_divisible_ui_p(vb.back().get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        detail::FpVec g = detail::fp_gcd(detail::to_fp(va, p), detail::to_fp(vb, p), p);
        long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) return LaurentPoly(1);
        if (cur_deg != -1 && dg > cur_deg) continue;  // unlucky prime
        uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), static_cast<unsigned long>(p));
        for (auto& c : g) c = detail::fp_mul(c, gm, p);
        if (cur_deg == -1 || dg < cur_deg) {
            cur_deg = dg;
            res.assign(g.size(), Integer(0));
            for (size_t i = 0; i < g.size(); ++i)
                res[i] = Integer(static_cast<unsigned long>(g[i]));
            mod = P;
        } else {
            Integer minv = mod_inverse(mod % P, P);
            for (size_t i = 0; i < res.size(); ++i) {
                Integer delta = ((Integer(static_cast<unsigned long>(g[i])) - res[i] % P) % P * minv) % P;
                if (delta < 0) delta += P;
                res[i] += mod * delta;
            }
            mod *= P;
        }
        // symmetric lift, primitive part, certification
        std::vector<Integer> lift(res.size());
        Integer half = mod / 2;
        for (size_t i = 0; i < res.size(); ++i) lift[i] = (res[i] > half) ? res[i] - mod : res[i];
        Integer cont = 0;
        for (auto& c : lift) cont = igcd(cont, c);
        if (cont == 0 || lift.back() == 0) continue;
        std::vector<Integer> h(lift.size());
        for (size_t i = 0; i < lift.size(); ++i)
            mpz_divexact(h[i].get_mpz_t(), lift[i].get_mpz_t(), cont.get_mpz_t());
        if (sgn(h.back()) < 0)
            for (auto& c : h) c = -c;
        if (detail::int_poly_divides(h, va, va2, va3) && detail::int_poly_divides(h, vb, vb2, vb3)) {
            LaurentPoly out;
            for (size_t i = 0; i < h.size(); ++i)
                if (h[i] != 0) out.add_term(static_cast<long>(i), Rational(h[i]));
            return out;
        }
    }
}

// Monic gcd over the rationals in the ordinary-polynomial view.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly g = poly_gcd_primitive(a, b);
    return g * (Rational(1) / g.leading_coeff());
}

// Exact quotient; throws when the division leaves a remainder.
inline LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

}  // namespace qsc
