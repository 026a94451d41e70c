#pragma once

// Builders for every q-object the checker consumes: q-integers, q-shifted
// factorials, and the truncated hypergeometric sums, both plain and with the
// auxiliary indeterminate a.
//
// Statement sums are described by a tiny grammar (Pochhammer chains, an
// optional (1 + q^{...}) factor, and a quadratic exponent polynomial in k)
// and evaluated over a single common denominator: the k = M chain product.
// Keeping the raw numerator/denominator pair around lets the congruence
// checker certify denominator coprimality without normalizing first.

#include "qsc/bivariate.hpp"
#include "qsc/qcase.hpp"

#include <stdexcept>
#include <vector>

namespace qsc {

// [m]_{q^w} = (1 - q^{m w}) / (1 - q^w), normalized.  m may be negative.
inline RationalFunction q_integer(long m, long power = 1) {
    if (power == 0) throw std::invalid_argument("q_integer: zero power");
    return RationalFunction::make(LaurentPoly::one_minus_qpow(m * power),
                                  LaurentPoly::one_minus_qpow(power));
}

// (q^t; q^m)_k = prod_{j=0}^{k-1} (1 - q^{t + m j})
inline LaurentPoly q_pochhammer(long t, long m, long k) {
    if (m <= 0) throw std::invalid_argument("q_pochhammer: step must be positive");
    if (k < 0) throw std::invalid_argument("q_pochhammer: negative length");
    LaurentPoly p(1);
    for (long j = 0; j < k; ++j) p = poly_mul(p, LaurentPoly::one_minus_qpow(t + m * j));
    return p;
}

struct PochhammerSpec {
    long base = 0;    // t: the argument is q^t (times a^{a_mode})
    long step = 1;    // m: the factorial base is q^m
    long length = 0;  // k
    int a_mode = 0;   // 0 plain, +1 argument a*q^t, -1 argument q^t/a
};

inline LaurentPoly q_pochhammer(const PochhammerSpec& s) {
    if (s.a_mode != 0) throw std::invalid_argument("q_pochhammer: parametric spec; use a_pochhammer");
    return q_pochhammer(s.base, s.step, s.length);
}

// Parametric q-shifted factorial.  The value is poly / a^{a_pow}; keeping the
// cleared power explicit keeps every coefficient polynomial in a.
struct APoch {
    BiPoly poly;
    long a_pow = 0;
};

inline APoch a_pochhammer(const PochhammerSpec& s) {
    if (s.step <= 0) throw std::invalid_argument("a_pochhammer: step must be positive");
    if (s.length < 0) throw std::invalid_argument("a_pochhammer: negative length");
    APoch r;
    r.poly = BiPoly(LaurentPoly(1));
    for (long j = 0; j < s.length; ++j) {
        long e = s.base + s.step * j;
        if (s.a_mode > 0)
            r.poly *= BiPoly::one_minus_a(Rational(1), e);       // 1 - a q^e
        else if (s.a_mode < 0)
            r.poly *= BiPoly::a_minus(Rational(1), e);           // (1 - q^e/a) * a
        else
            r.poly *= BiPoly(LaurentPoly::one_minus_qpow(e));
    }
    if (s.a_mode < 0) r.a_pow = s.length;
    return r;
}

// ---------------------------------------------------------------------------
// statement grammar

// Affine form cn*n + cd*d + cr*r + c0 over a case's parameters.
struct ExpForm {
    long cn = 0, cd = 0, cr = 0, c0 = 0;
    long eval(const QCase& c) const { return cn * c.n + cd * c.d + cr * c.r + c0; }
};

// (q^{base}; q^{step})_k raised to power.
struct ChainSpec {
    ExpForm base;
    ExpForm step;
    int power = 1;
};

// sum_{k=0}^{M} (-1)^{k?} (1 + q^{opk*k + opc})? prod num / prod den
//     * q^{e2 k^2 + e1 k + e0},  all over an optional global (1 + q^{g}).
struct SumSpec {
    bool alternating = false;
    bool one_plus = false;
    ExpForm one_plus_k, one_plus_c;
    bool global_one_plus = false;
    ExpForm global_exp;
    std::vector<ChainSpec> num, den;
    ExpForm e2, e1, e0;
};

// A sum as an unreduced fraction over the k = M common denominator.
struct SumParts {
    LaurentPoly num, den;
};

inline SumParts eval_qsum(const SumSpec& s, const QCase& c) {
    qcase_require(c);
    const long M = c.m();
    auto chain_factor = [&](const ChainSpec& ch, long j) {
        return LaurentPoly::one_minus_qpow(ch.base.eval(c) + ch.step.eval(c) * j);
    };
    // numerator chains enter term k as prefix products, denominator chains as
    // suffix products (full chain over prefix), so the denominator is shared
    std::vector<std::vector<LaurentPoly>> pre(s.num.size()), suf(s.den.size());
    for (size_t i = 0; i < s.num.size(); ++i) {
        auto& col = pre[i];
        col.assign(M + 1, LaurentPoly(1));
        for (long k = 0; k < M; ++k) col[k + 1] = poly_mul(col[k], chain_factor(s.num[i], k));
        for (auto& p : col) p = poly_pow(p, static_cast<unsigned>(s.num[i].power));
    }
    for (size_t i = 0; i < s.den.size(); ++i) {
        auto& col = suf[i];
        col.assign(M + 1, LaurentPoly(1));
        for (long k = M; k-- > 0;) col[k] = poly_mul(col[k + 1], chain_factor(s.den[i], k));
        for (auto& p : col) p = poly_pow(p, static_cast<unsigned>(s.den[i].power));
    }
    LaurentPoly num;
    for (long k = 0; k <= M; ++k) {
        LaurentPoly t(s.alternating ? parity_sign(k) : 1);
        if (s.one_plus)
            t = poly_mul(t, LaurentPoly::one_plus_qpow(s.one_plus_k.eval(c) * k + s.one_plus_c.eval(c)));
        for (size_t i = 0; i < pre.size(); ++i) t = poly_mul(t, pre[i][k]);
        for (size_t i = 0; i < suf.size(); ++i) t = poly_mul(t, suf[i][k]);
        t.mul_monomial(Rational(1), s.e2.eval(c) * k * k + s.e1.eval(c) * k + s.e0.eval(c));
        num += t;
    }
    LaurentPoly den(1);
    for (size_t i = 0; i < suf.size(); ++i) den = poly_mul(den, suf[i][0]);
    if (s.global_one_plus) den = poly_mul(den, LaurentPoly::one_plus_qpow(s.global_exp.eval(c)));
    return {num, den};
}

// Bump one coefficient of the summand exponent polynomial; the negative
// control expects any such corruption to break the congruence.
enum class ExpCoeff { quadratic, linear, constant };

inline SumSpec corrupt_exponent(SumSpec s, ExpCoeff which) {
    ExpForm& f = which == ExpCoeff::quadratic ? s.e2 : which == ExpCoeff::linear ? s.e1 : s.e0;
    f.c0 += 1;
    return s;
}

// ---------------------------------------------------------------------------
// the two statement families
//
// cubed:    sum (-1)^k (1+q^{2dk+r}) (q^{2r};q^{2d})_k^3 / ((1+q^r)(q^{2d};q^{2d})_k^3)
//               * q^{d k^2 + 2k(d-r)}
//           ~ pref * sum (q^{2r};q^{2d})_k^2 (q^d;q^{2d})_k
//               / ((q^{2d},q^{d+r},q^{2d+r};q^{2d})_k) * q^{2k(d-r)}
// squared:  sum (-1)^k (1+q^{2dk+r}) (q^{2r};q^{2d})_k^2 / ((1+q^r)(q^{2d};q^{2d})_k^2)
//               * q^{d k^2 + k(d-r)}
//           ~ pref * sum (q^{2r},q^r;q^{2d})_k / ((q^{2d},q^{2d+r};q^{2d})_k) * q^{2k(d-r)}
// with pref = (-1)^M [n]_{q^2}/[r]_{q^2} q^{(n-r)(n+r-d)/d} in both.

inline SumSpec lhs_sum_spec(Family f) {
    SumSpec s;
    s.alternating = true;
    s.one_plus = true;
    s.one_plus_k = {0, 2, 0, 0};
    s.one_plus_c = {0, 0, 1, 0};
    s.global_one_plus = true;
    s.global_exp = {0, 0, 1, 0};
    const int w = f == Family::cubed ? 3 : 2;
    s.num = {{{0, 0, 2, 0}, {0, 2, 0, 0}, w}};
    s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, w}};
    s.e2 = {0, 1, 0, 0};
    s.e1 = f == Family::cubed ? ExpForm{0, 2, -2, 0} : ExpForm{0, 1, -1, 0};
    return s;
}

inline SumSpec rhs_sum_spec(Family f) {
    SumSpec s;
    if (f == Family::cubed) {
        s.num = {{{0, 0, 2, 0}, {0, 2, 0, 0}, 2}, {{0, 1, 0, 0}, {0, 2, 0, 0}, 1}};
        s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, 1},
                 {{0, 1, 1, 0}, {0, 2, 0, 0}, 1},
                 {{0, 2, 1, 0}, {0, 2, 0, 0}, 1}};
    } else {
        s.num = {{{0, 0, 2, 0}, {0, 2, 0, 0}, 1}, {{0, 0, 1, 0}, {0, 2, 0, 0}, 1}};
        s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, 1}, {{0, 2, 1, 0}, {0, 2, 0, 0}, 1}};
    }
    s.e1 = {0, 2, -2, 0};
    return s;
}

// (-1)^M [n]_{q^2}/[r]_{q^2} q^{(n-r)(n+r-d)/d}, exactly.
inline RationalFunction closed_prefactor(const QCase& c) {
    qcase_require(c);
    if ((c.n - c.r) * (c.n + c.r - c.d) % c.d != 0)
        throw std::logic_error("closed_prefactor: exponent not divisible");
    LaurentPoly num = LaurentPoly::one_minus_qpow(2 * c.n);
    num.mul_monomial(Rational(parity_sign(c.m())), c.m() * (c.n + c.r - c.d));
    return RationalFunction::make(num, LaurentPoly::one_minus_qpow(2 * c.r));
}

inline SumParts lhs_fused_parts(Family f, const QCase& c) { return eval_qsum(lhs_sum_spec(f), c); }

// Prefactor times inner sum, unreduced.  When the common denominator carries
// the single factor (1 - q^n) it is cancelled against the prefactor's
// (1 - q^{2n}) = (1 - q^n)(1 + q^n), which keeps the raw denominator coprime
// to the modulus whenever the case hypotheses hold.
inline SumParts rhs_fused_from(const SumSpec& inner_spec, const QCase& c) {
    SumParts inner = eval_qsum(inner_spec, c);
    const long M = c.m();
    const long E = M * (c.n + c.r - c.d);
    LaurentPoly num, den;
    // probe up to a q-power unit: negative r puts negative exponents in the chains
    LaurentPoly d0 = inner.den;
    const long low = d0.low_exp();
    if (low != 0) d0.mul_monomial(Rational(1), -low);
    auto [quot, rem] = poly_divrem(d0, LaurentPoly::one_minus_qpow(c.n));
    if (low != 0) quot.mul_monomial(Rational(1), low);
    if (rem.is_zero()) {
        num = poly_mul(LaurentPoly::one_plus_qpow(c.n), inner.num);
        den = poly_mul(LaurentPoly::one_minus_qpow(2 * c.r), quot);
    } else {
        num = poly_mul(LaurentPoly::one_minus_qpow(2 * c.n), inner.num);
        den = poly_mul(LaurentPoly::one_minus_qpow(2 * c.r), inner.den);
    }
    num.mul_monomial(Rational(parity_sign(M)), E);
    return {num, den};
}

inline SumParts rhs_fused_parts(Family f, const QCase& c) {
    return rhs_fused_from(rhs_sum_spec(f), c);
}

inline RationalFunction lhs_sum(Family f, const QCase& c) {
    SumParts p = lhs_fused_parts(f, c);
    return RationalFunction::make(p.num, p.den);
}
inline RationalFunction rhs_sum(Family f, const QCase& c) {
    SumParts p = rhs_fused_parts(f, c);
    return RationalFunction::make(p.num, p.den);
}

inline RationalFunction lhs_cubed(const QCase& c) { return lhs_sum(Family::cubed, c); }
inline RationalFunction rhs_cubed(const QCase& c) { return rhs_sum(Family::cubed, c); }
inline RationalFunction lhs_squared(const QCase& c) { return lhs_sum(Family::squared, c); }
inline RationalFunction rhs_squared(const QCase& c) { return rhs_sum(Family::squared, c); }

// ---------------------------------------------------------------------------
// transformation instances at a = q^{+-2n}

// Exponents of q instantiating the transformation parameters.
struct BaileyParams {
    long alpha_exp;   // alpha = q^{alpha_exp}
    long a_exp;       // a = q^{a_exp}
    long b_exp;       // b = q^{b_exp}
    long lambda_exp;  // lambda = q^{lambda_exp}
    long base_step;   // base after substitution: q^{base_step}, series in q^{2*base_step}

    // the (q^2/b; q^2)_k chain hits a zero factor at position (n-r)/d
    bool terminates() const {
        long arg = 2 * base_step - b_exp;  // q^{2d}/b = q^{arg}
        return arg <= 0 && arg % (2 * base_step) == 0;
    }
};

inline BaileyParams bailey_params(const QCase& c, Family f) {
    return {c.r, 2 * (c.d - c.r - c.n), 2 * (c.d - c.r + c.n),
            f == Family::cubed ? c.d : c.r, c.d};
}

// The finite quotient (q^{2r+2d};q^{2d})_M / (q^{2d-2n};q^{2d})_M.
inline RationalFunction bailey_rhs_product(const QCase& c) {
    qcase_require(c);
    const long M = c.m();
    return RationalFunction::make(q_pochhammer(2 * c.r + 2 * c.d, 2 * c.d, M),
                                  q_pochhammer(2 * c.d - 2 * c.n, 2 * c.d, M));
}

// The terminating sum multiplying it:
//   cubed:   sum (q^{2r+2n},q^{2r-2n},q^d;q^{2d})_k / ((q^{2d},q^{d+r},q^{2d+r};q^{2d})_k)
//            * q^{2k(d-r)}
//   squared: sum (q^{2r+2n},q^{2r-2n},q^r;q^{2d})_k / ((q^{2d},q^{2d+r},q^{2r};q^{2d})_k)
//            * q^{2k(d-r)}
inline SumSpec bailey_inner_spec(Family f) {
    SumSpec s;
    s.num = {{{2, 0, 2, 0}, {0, 2, 0, 0}, 1}, {{-2, 0, 2, 0}, {0, 2, 0, 0}, 1}};
    if (f == Family::cubed) {
        s.num.push_back({{0, 1, 0, 0}, {0, 2, 0, 0}, 1});
        s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, 1},
                 {{0, 1, 1, 0}, {0, 2, 0, 0}, 1},
                 {{0, 2, 1, 0}, {0, 2, 0, 0}, 1}};
    } else {
        s.num.push_back({{0, 0, 1, 0}, {0, 2, 0, 0}, 1});
        s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, 1},
                 {{0, 2, 1, 0}, {0, 2, 0, 0}, 1},
                 {{0, 0, 2, 0}, {0, 2, 0, 0}, 1}};
    }
    s.e1 = {0, 2, -2, 0};
    return s;
}

inline RationalFunction bailey_inner_sum(const QCase& c, Family f) {
    SumParts p = eval_qsum(bailey_inner_spec(f), c);
    return RationalFunction::make(p.num, p.den);
}

// ---------------------------------------------------------------------------
// parametric sums (a indeterminate)

struct AChainSpec {
    ExpForm base;
    ExpForm step;
    int a_mode = 0;  // 0 plain, +1 argument a*q^t, -1 argument q^t/a
};

struct ASumSpec {
    bool alternating = false;
    bool one_plus = false;
    ExpForm one_plus_k, one_plus_c;
    bool global_one_plus = false;
    ExpForm global_exp;
    std::vector<AChainSpec> num, den;
    ExpForm e2, e1, e0;
};

struct BiSumParts {
    BiPoly num, den;
};

// Same scheme as eval_qsum.  Each q^t/a chain of length k contributes a^{-k};
// the net per-term deficit is cleared into an explicit a-power so both parts
// stay polynomial in a.
inline BiSumParts eval_aqsum(const ASumSpec& s, const QCase& c) {
    qcase_require(c);
    const long M = c.m();
    long over_num = 0, over_den = 0;
    for (auto& ch : s.num)
        if (ch.a_mode < 0) ++over_num;
    for (auto& ch : s.den)
        if (ch.a_mode < 0) ++over_den;
    const long delta = over_num - over_den;
    auto chain_factor = [&](const AChainSpec& ch, long j) -> BiPoly {
        long e = ch.base.eval(c) + ch.step.eval(c) * j;
        if (ch.a_mode > 0) return BiPoly::one_minus_a(Rational(1), e);
        if (ch.a_mode < 0) return BiPoly::a_minus(Rational(1), e);
        return BiPoly(LaurentPoly::one_minus_qpow(e));
    };
    std::vector<std::vector<BiPoly>> pre(s.num.size()), suf(s.den.size());
    for (size_t i = 0; i < s.num.size(); ++i) {
        auto& col = pre[i];
        col.assign(M + 1, BiPoly(LaurentPoly(1)));
        for (long k = 0; k < M; ++k) col[k + 1] = col[k] * chain_factor(s.num[i], k);
    }
    for (size_t i = 0; i < s.den.size(); ++i) {
        auto& col = suf[i];
        col.assign(M + 1, BiPoly(LaurentPoly(1)));
        for (long k = M; k-- > 0;) col[k] = col[k + 1] * chain_factor(s.den[i], k);
    }
    BiPoly num;
    for (long k = 0; k <= M; ++k) {
        LaurentPoly mono = LaurentPoly::monomial(Rational(s.alternating ? parity_sign(k) : 1),
                                                 s.e2.eval(c) * k * k + s.e1.eval(c) * k + s.e0.eval(c));
        if (s.one_plus)
            mono = poly_mul(mono, LaurentPoly::one_plus_qpow(s.one_plus_k.eval(c) * k + s.one_plus_c.eval(c)));
        long apow = delta * (M - k) + (delta < 0 ? -delta : 0) * M;
        BiPoly t = BiPoly::a_term(mono, apow);
        for (size_t i = 0; i < pre.size(); ++i) t *= pre[i][k];
        for (size_t i = 0; i < suf.size(); ++i) t *= suf[i][k];
        num += t;
    }
    BiPoly den(LaurentPoly(1));
    for (size_t i = 0; i < suf.size(); ++i) den *= suf[i][0];
    if (s.global_one_plus) den *= BiPoly(LaurentPoly::one_plus_qpow(s.global_exp.eval(c)));
    if (delta > 0) den = BiPoly::a_term(LaurentPoly(1), delta * M) * den;
    return {num, den};
}

// cubed:   (aq^{2r},q^{2r}/a,q^{2r};q^{2d})_k over (aq^{2d},q^{2d}/a,q^{2d};q^{2d})_k,
//          exponent d k^2 + 2k(d-r); rhs inner has (aq^{2r},q^{2r}/a,q^d;..)_k over
//          (q^{2d},q^{d+r},q^{2d+r};..)_k with exponent 2k(d-r).
// squared: pairs only, exponent d k^2 + k(d-r); rhs inner (aq^{2r},q^{2r}/a,q^r;..)_k
//          over (q^{2d},q^{2d+r},q^{2r};..)_k.
inline ASumSpec parametric_lhs_spec(Family f) {
    ASumSpec s;
    s.alternating = true;
    s.one_plus = true;
    s.one_plus_k = {0, 2, 0, 0};
    s.one_plus_c = {0, 0, 1, 0};
    s.global_one_plus = true;
    s.global_exp = {0, 0, 1, 0};
    s.num = {{{0, 0, 2, 0}, {0, 2, 0, 0}, +1}, {{0, 0, 2, 0}, {0, 2, 0, 0}, -1}};
    s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, +1}, {{0, 2, 0, 0}, {0, 2, 0, 0}, -1}};
    if (f == Family::cubed) {
        s.num.push_back({{0, 0, 2, 0}, {0, 2, 0, 0}, 0});
        s.den.push_back({{0, 2, 0, 0}, {0, 2, 0, 0}, 0});
    }
    s.e2 = {0, 1, 0, 0};
    s.e1 = f == Family::cubed ? ExpForm{0, 2, -2, 0} : ExpForm{0, 1, -1, 0};
    return s;
}

inline ASumSpec parametric_rhs_spec(Family f) {
    ASumSpec s;
    s.num = {{{0, 0, 2, 0}, {0, 2, 0, 0}, +1}, {{0, 0, 2, 0}, {0, 2, 0, 0}, -1}};
    if (f == Family::cubed) {
        s.num.push_back({{0, 1, 0, 0}, {0, 2, 0, 0}, 0});
        s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, 0},
                 {{0, 1, 1, 0}, {0, 2, 0, 0}, 0},
                 {{0, 2, 1, 0}, {0, 2, 0, 0}, 0}};
    } else {
        s.num.push_back({{0, 0, 1, 0}, {0, 2, 0, 0}, 0});
        s.den = {{{0, 2, 0, 0}, {0, 2, 0, 0}, 0},
                 {{0, 2, 1, 0}, {0, 2, 0, 0}, 0},
                 {{0, 0, 2, 0}, {0, 2, 0, 0}, 0}};
    }
    s.e1 = {0, 2, -2, 0};
    return s;
}

inline BiSumParts parametric_lhs_parts(const QCase& c, Family f) {
    return eval_aqsum(parametric_lhs_spec(f), c);
}

inline BiSumParts parametric_rhs_parts(const QCase& c, Family f) {
    BiSumParts inner = eval_aqsum(parametric_rhs_spec(f), c);
    LaurentPoly pf = LaurentPoly::one_minus_qpow(2 * c.n);
    pf.mul_monomial(Rational(parity_sign(c.m())), c.m() * (c.n + c.r - c.d));
    inner.num = inner.num * pf;
    inner.den = inner.den * LaurentPoly::one_minus_qpow(2 * c.r);
    return inner;
}

inline BiRationalFunction parametric_lhs(const QCase& c, Family f) {
    BiSumParts p = parametric_lhs_parts(c, f);
    return BiRationalFunction::make(p.num, p.den);
}

inline BiRationalFunction parametric_rhs(const QCase& c, Family f) {
    BiSumParts p = parametric_rhs_parts(c, f);
    return BiRationalFunction::make(p.num, p.den);
}

}  // namespace qsc
