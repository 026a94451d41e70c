#pragma once

// The verdict engine: congruences of rational functions modulo factored
// polynomial moduli, in q alone and in (q, a).
//
// All divisibility here is up to q-power units: numerators are Laurent
// polynomials and every modulus has a nonzero constant term, so q is
// invertible modulo it.  Inputs are shifted to nonnegative exponents before
// any division; residue values therefore depend on the representation, but
// their vanishing does not.

#include "qsc/cyclotomic.hpp"
#include "qsc/poly_gcd.hpp"
#include "qsc/qseries.hpp"

#include <stdexcept>
#include <vector>

namespace qsc {

struct CongruenceVerdict {
    bool holds = false;
    long modulus_degree = 0;
    LaurentPoly residue;                // zero exactly when the divisibility holds
    bool coprimality_ok = true;
    std::vector<int> max_multiplicity;  // per modulus factor, of the difference numerator
    LaurentPoly offending_gcd;          // witness when a denominator meets the modulus
};

namespace detail {

inline LaurentPoly q_shift_nonneg(LaurentPoly p) {
    if (!p.is_zero() && p.low_exp() < 0) p.mul_monomial(Rational(1), -p.low_exp());
    return p;
}

inline long bipoly_min_low(const BiPoly& p) {
    long m = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first || c.low_exp() < m) m = c.low_exp();
        first = false;
    }
    return m;
}

inline BiPoly bipoly_q_shift_nonneg(const BiPoly& p) {
    if (p.is_zero()) return p;
    long m = bipoly_min_low(p);
    if (m >= 0) return p;
    return p * LaurentPoly::monomial(Rational(1), -m);
}

// Fill in residue, multiplicities, and the final holds bit from the
// cross-multiplied difference.  A zero difference divides everything; its
// multiplicity is reported as the stated one.
inline void finish_verdict(CongruenceVerdict& v, LaurentPoly diff, const Modulus& m) {
    diff = q_shift_nonneg(std::move(diff));
    if (diff.is_zero()) {
        for (const auto& f : m.factors) v.max_multiplicity.push_back(f.second);
    } else {
        v.residue = poly_divrem(diff, m.expanded).second;
        for (const auto& f : m.factors)
            v.max_multiplicity.push_back(multiplicity_profile(diff, f.first));
    }
    v.holds = v.coprimality_ok && v.residue.is_zero();
}

inline void require_unit_modulus(const Modulus& m) {
    if (m.expanded.is_zero() || m.expanded.coeff(0) == 0)
        throw std::invalid_argument("modulus must have a nonzero constant term");
}

}  // namespace detail

inline CongruenceVerdict check_congruent(const RationalFunction& lhs, const RationalFunction& rhs,
                                         const Modulus& m) {
    detail::require_unit_modulus(m);
    CongruenceVerdict v;
    v.modulus_degree = m.expanded.degree();
    for (const LaurentPoly* den : {&lhs.den(), &rhs.den()}) {
        LaurentPoly g = poly_gcd(*den, m.expanded);
        if (g.degree() > 0) {
            v.coprimality_ok = false;
            if (v.offending_gcd.is_zero()) v.offending_gcd = g;
        }
    }
    detail::finish_verdict(v, poly_mul(lhs.num(), rhs.den()) - poly_mul(rhs.num(), lhs.den()), m);
    return v;
}

// Fast path for sums that arrive as raw parts over their common denominators.
// When both raw denominators are already coprime to the modulus the raw
// cross-multiplied difference differs from the normalized one only by a
// factor coprime to every modulus base, so verdict and multiplicities agree.
// Otherwise normalize first: cancellation may remove the offending factor
// (r = n is the natural example).
inline CongruenceVerdict check_congruent_parts(const SumParts& lhs, const SumParts& rhs,
                                               const Modulus& m) {
    detail::require_unit_modulus(m);
    LaurentPoly gl = poly_gcd(lhs.den, m.expanded);
    LaurentPoly gr = poly_gcd(rhs.den, m.expanded);
    if (gl.degree() > 0 || gr.degree() > 0)
        return check_congruent(RationalFunction::make(lhs.num, lhs.den),
                               RationalFunction::make(rhs.num, rhs.den), m);
    CongruenceVerdict v;
    v.modulus_degree = m.expanded.degree();
    detail::finish_verdict(v, poly_mul(lhs.num, rhs.den) - poly_mul(rhs.num, lhs.den), m);
    return v;
}

// Largest e >= 0 with base^e dividing p, up to q-power units.
inline int unit_multiplicity(const LaurentPoly& p, const LaurentPoly& base) {
    return multiplicity_profile(detail::q_shift_nonneg(p), base);
}

// Divisibility of a bivariate polynomial by a factor, up to q-power units.
// Sound for factors that are a-free with nonzero constant term or monic-like
// in a (unit lead or unit trailing a-coefficient of q-order zero): exactly
// the moduli used here.
inline bool bipoly_unit_divisible(const BiPoly& p, const BiPoly& f) {
    if (p.is_zero()) return true;
    auto qr = bipoly_divrem(detail::bipoly_q_shift_nonneg(p), f);
    return qr && qr->second.is_zero();
}

// Congruence of two bivariate fractions modulo a list of pairwise coprime
// factors.  Each factor must divide the cross-multiplied difference; the
// product must divide it too, and the two answers are required to agree.
namespace detail {

// a = coeff * q^exp solving f = 0, for f linear in a with monomial
// coefficients: exactly the microscoping factors 1 - a q^{2n} and a - q^{2n}.
// Such f is a unit multiple of a - root, so divisibility and coprimality
// reduce to evaluation at the root (factor theorem over Q[q,1/q]).
struct ARoot {
    Rational coeff;
    long exp = 0;
};

inline std::optional<ARoot> a_linear_root(const BiPoly& f) {
    if (f.deg_a() != 1) return std::nullopt;
    const LaurentPoly c1 = f.coeff_a(1);
    if (c1.term_count() != 1) return std::nullopt;
    const LaurentPoly c0 = f.coeff_a(0);
    if (c0.is_zero()) return ARoot{Rational(0), 0};
    if (c0.term_count() != 1) return std::nullopt;
    const auto& [e0, a0] = *c0.terms().begin();
    const auto& [e1, a1] = *c1.terms().begin();
    return ARoot{Rational(-a0 / a1), e0 - e1};
}

// Exact divisibility test that skips the quotient; nullopt when only the
// generic long division can decide.
inline std::optional<bool> bipoly_divides_probe(const BiPoly& p, const BiPoly& f) {
    if (p.is_zero()) return true;
    if (f.deg_a() == 0) {
        const LaurentPoly& d = f.terms().begin()->second;
        for (const auto& [e, c] : p.terms())
            if (!poly_divrem(c, d).second.is_zero()) return false;
        return true;
    }
    if (auto root = a_linear_root(f))
        return p.subst_a_monomial(root->coeff, root->exp).is_zero();
    return std::nullopt;
}

}  // namespace detail

inline CongruenceVerdict check_bicongruent(const BiPoly& lnum, const BiPoly& lden,
                                           const BiPoly& rnum, const BiPoly& rden,
                                           const std::vector<BiPoly>& factors) {
    if (factors.empty()) throw std::invalid_argument("check_bicongruent: empty factor list");
    auto span = [](const BiPoly& f) {
        if (f.deg_a() > 0) return f.deg_a();
        const LaurentPoly& c = f.coeff_a(0);
        return c.degree() - c.low_exp();
    };
    for (const BiPoly& f : factors)
        if (f.is_zero() || span(f) == 0)
            throw std::invalid_argument("check_bicongruent: constant factor");
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (!bipoly_coprime(factors[i], factors[j]))
                throw std::invalid_argument("check_bicongruent: factors not pairwise coprime");

    CongruenceVerdict v;
    for (const BiPoly& f : factors) v.modulus_degree += span(f);
    for (const BiPoly* den : {&lden, &rden})
        for (const BiPoly& f : factors) {
            if (auto root = detail::a_linear_root(f)) {
                if (den->subst_a_monomial(root->coeff, root->exp).is_zero())
                    v.coprimality_ok = false;
            } else if (!bipoly_coprime(*den, f)) {
                v.coprimality_ok = false;
            }
        }

    BiPoly diff = detail::bipoly_q_shift_nonneg(lnum * rden - rnum * lden);
    if (diff.is_zero()) {
        v.max_multiplicity.assign(factors.size(), 1);
        v.holds = v.coprimality_ok;
        return v;
    }

    bool each = true;
    for (const BiPoly& f : factors) {
        BiPoly running = diff;
        int mult = 0;
        while (true) {
            // After the first round the likely outcome is "no further factor";
            // the probe settles that without paying for a failed division.
            // The first round keeps the long division so a genuine failure
            // still yields a remainder to project the residue witness from.
            if (mult > 0) {
                auto pre = detail::bipoly_divides_probe(running, f);
                if (pre && !*pre) break;
            }
            auto qr = bipoly_divrem(running, f);
            if (!qr || !qr->second.is_zero()) {
                if (mult == 0 && each && v.residue.is_zero()) {
                    // project a nonzero witness into q alone
                    const BiPoly& w = qr ? qr->second : running;
                    for (const auto& kv : w.terms())
                        if (!kv.second.is_zero()) {
                            v.residue = kv.second;
                            break;
                        }
                }
                break;
            }
            ++mult;
            running = detail::bipoly_q_shift_nonneg(qr->first);
        }
        if (mult == 0) each = false;
        v.max_multiplicity.push_back(mult);
    }

    BiPoly running = diff;
    bool product = true;
    for (const BiPoly& f : factors) {
        auto qr = bipoly_divrem(running, f);
        if (!qr || !qr->second.is_zero()) {
            product = false;
            break;
        }
        running = detail::bipoly_q_shift_nonneg(qr->first);
    }
    if (each != product)
        throw std::logic_error("check_bicongruent: factorwise and product divisibility disagree");

    v.holds = v.coprimality_ok && each;
    if (v.holds) v.residue = LaurentPoly();
    return v;
}

inline CongruenceVerdict check_bicongruent(const BiRationalFunction& lhs,
                                           const BiRationalFunction& rhs,
                                           const std::vector<BiPoly>& factors) {
    return check_bicongruent(lhs.num(), lhs.den(), rhs.num(), rhs.den(), factors);
}

}  // namespace qsc
