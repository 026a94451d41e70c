#pragma once

// Sparse Laurent polynomials in q over the rationals: the carrier for every
// q-expression in the library.  Exponents are signed (q^-2 shows up as soon as
// r = -1 enters a Pochhammer argument), coefficients exact rationals.
//
// Representation: ordered map exponent -> nonzero coefficient; the zero
// polynomial is the empty map.  Multiplication of large operands goes through
// Kronecker substitution: clear denominators, split into nonnegative parts,
// pack coefficients into limb-aligned slots of one big integer and let GMP do
// a single multiplication per part pair.

#include "qsc/numbers.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace qsc {

class LaurentPoly {
public:
    using Map = std::map<long, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) c_[0] = canon(c);
    }
    explicit LaurentPoly(long c) {
        if (c != 0) c_[0] = Rational(c);
    }

    static LaurentPoly monomial(const Rational& c, long e) {
        LaurentPoly p;
        if (c != 0) p.c_[e] = canon(c);
        return p;
    }
    // q^e
    static LaurentPoly qpow(long e) { return monomial(Rational(1), e); }
    // 1 - q^e  (the atom of every q-shifted factorial)
    static LaurentPoly one_minus_qpow(long e) {
        LaurentPoly p;
        if (e == 0) return p;
        p.c_[0] = 1;
        p.c_[e] = -1;
        return p;
    }
    // 1 + q^e
    static LaurentPoly one_plus_qpow(long e) {
        LaurentPoly p;
        if (e == 0) return LaurentPoly(Rational(2));
        p.c_[0] = 1;
        p.c_[e] = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    size_t term_count() const { return c_.size(); }
    const Map& terms() const { return c_; }

    long degree() const {
        if (c_.empty()) throw std::domain_error("degree of zero polynomial");
        return c_.rbegin()->first;
    }
    long low_exp() const {
        if (c_.empty()) throw std::domain_error("low exponent of zero polynomial");
        return c_.begin()->first;
    }
    const Rational& leading_coeff() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.rbegin()->second;
    }
    Rational coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void add_term(long e, const Rational& c) {
        if (c == 0) return;
        Rational cc = canon(c);
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, std::move(cc));
        } else {
            it->second += cc;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
        } else {
            Rational ss = canon(s);
            for (auto& [e, c] : c_) c *= ss;
        }
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    // Multiply by the monomial c*q^e in place.
    LaurentPoly& mul_monomial(const Rational& c, long e) {
        if (c == 0) {
            c_.clear();
            return *this;
        }
        Rational cc = canon(c);
        Map next;
        for (auto& [ex, co] : c_) next.emplace(ex + e, co * cc);
        c_ = std::move(next);
        return *this;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = mul(*this, o);
        return *this;
    }

    static LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

    // q -> -q
    LaurentPoly subst_q_negated() const {
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e] = (e % 2 == 0) ? c : -c;
        return r;
    }
    // q -> q^m, m nonzero (m < 0 flips the exponent lattice)
    LaurentPoly subst_q_power(long m) const {
        if (m == 0) throw std::invalid_argument("q -> q^0 is not a substitution");
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e * m] = c;
        return r;
    }
    // q -> v for a rational v; v = 0 requires no negative exponents
    Rational eval(const Rational& v) const {
        if (v == 0) {
            for (auto& [e, c] : c_)
                if (e < 0) throw std::domain_error("evaluation at 0 with negative exponents");
            return coeff(0);
        }
        // Horner over the gap structure, from the top exponent down.
        Rational acc(0);
        long prev = 0;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (first) {
                acc = it->second;
                prev = it->first;
                first = false;
                continue;
            }
            long gap = prev - it->first;
            Rational vp;
            mpz_pow_ui(vp.get_num_mpz_t(), v.get_num().get_mpz_t(), static_cast<unsigned long>(gap));
            mpz_pow_ui(vp.get_den_mpz_t(), v.get_den().get_mpz_t(), static_cast<unsigned long>(gap));
            vp.canonicalize();
            acc = acc * vp + it->second;
            prev = it->first;
        }
        if (first) return Rational(0);
        if (prev != 0) {
            Rational vp;
            long e = prev;
            bool invert = e < 0;
            unsigned long ae = static_cast<unsigned long>(invert ? -e : e);
            mpz_pow_ui(vp.get_num_mpz_t(), v.get_num().get_mpz_t(), ae);
            mpz_pow_ui(vp.get_den_mpz_t(), v.get_den().get_mpz_t(), ae);
            vp.canonicalize();
            if (invert) vp = 1 / vp;
            acc *= vp;
        }
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Rational c = it->second;
            if (!first) {
                os << (sgn(c) < 0 ? " - " : " + ");
                if (sgn(c) < 0) c = -c;
            }
            long e = it->first;
            bool unit_coeff = (c == 1 || c == -1);
            if (e == 0) {
                os << c.get_str();
            } else {
                if (!unit_coeff) {
                    os << c.get_str() << "*";
                } else if (c == -1) {
                    os << "-";
                }
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    // raw mpq_class(n, d) may arrive non-canonical; every entry point fixes it
    static Rational canon(Rational c) {
        c.canonicalize();
        return c;
    }

    Map c_;
};

namespace detail {

// Dense integer view of a Laurent polynomial on an exponent grid
// base + stride*i; the rational scale restores the original value.
struct DenseInt {
    std::vector<Integer> c;
    long base = 0;
    long stride = 1;
    Rational scale{1};

    explicit DenseInt(const LaurentPoly& p, long forced_stride = 0) {
        if (p.is_zero()) return;
        base = p.low_exp();
        long g = 0;
        for (auto& [e, co] : p.terms()) g = gcd_long(g, e - base);
        if (g == 0) g = 1;
        if (forced_stride > 0) g = gcd_long(g, forced_stride);
        stride = g;
        Integer den_lcm = 1;
        for (auto& [e, co] : p.terms()) den_lcm = ilcm(den_lcm, co.get_den());
        scale = Rational(1, den_lcm);
        c.assign(static_cast<size_t>((p.degree() - base) / stride) + 1, Integer(0));
        for (auto& [e, co] : p.terms()) {
            Rational t = co * den_lcm;
            c[static_cast<size_t>((e - base) / stride)] = t.get_num();
        }
    }

    LaurentPoly to_poly() const {
        LaurentPoly r;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) r.add_term(base + stride * static_cast<long>(i), Rational(c[i]) * scale);
        return r;
    }
};

inline size_t max_bits(const std::vector<Integer>& v) {
    size_t b = 1;
    for (auto& x : v)
        if (x != 0) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
    return b;
}

inline mpz_class kr_pack(const std::vector<Integer>& v, size_t slot_limbs) {
    mpz_class z;
    size_t total = v.size() * slot_limbs;
    mp_limb_t* w = mpz_limbs_write(z.get_mpz_t(), total);
    std::fill(w, w + total, mp_limb_t(0));
    for (size_t i = 0; i < v.size(); ++i) {
        const mpz_srcptr m = v[i].get_mpz_t();
        size_t sz = mpz_size(m);
        const mp_limb_t* src = mpz_limbs_read(m);
        std::copy(src, src + sz, w + i * slot_limbs);
    }
    mpz_limbs_finish(z.get_mpz_t(), total);
    return z;
}

inline void kr_unpack_add(std::vector<Integer>& acc, const mpz_class& z, size_t slot_limbs, int sign) {
    size_t zsz = mpz_size(z.get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(z.get_mpz_t());
    mpz_class t;
    for (size_t off = 0, i = 0; off < zsz; off += slot_limbs, ++i) {
        size_t cnt = std::min(slot_limbs, zsz - off);
        while (cnt > 0 && src[off + cnt - 1] == 0) --cnt;
        if (cnt == 0) continue;
        mpz_import(t.get_mpz_t(), cnt, -1, sizeof(mp_limb_t), 0, 0, src + off);
        if (i >= acc.size()) acc.resize(i + 1, Integer(0));
        if (sign > 0)
            acc[i] += t;
        else
            acc[i] -= t;
    }
}

// Exact product of two signed integer coefficient vectors via Kronecker
// substitution: split into nonnegative parts, one GMP multiply per part pair.
inline std::vector<Integer> kr_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> ap(a.size()), an(a.size()), bp(b.size()), bn(b.size());
    bool has_an = false, has_bn = false, has_ap = false, has_bp = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) >= 0) {
            ap[i] = a[i];
            has_ap = has_ap || a[i] != 0;
        } else {
            an[i] = -a[i];
            has_an = true;
        }
    }
    for (size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) >= 0) {
            bp[i] = b[i];
            has_bp = has_bp || b[i] != 0;
        } else {
            bn[i] = -b[i];
            has_bn = true;
        }
    }
    size_t terms = std::min(a.size(), b.size());
    size_t lg = 0;
    while ((size_t(1) << lg) < terms) ++lg;
    size_t slot_bits = max_bits(a) + max_bits(b) + lg + 1;
    size_t slot_limbs = (slot_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

    std::vector<Integer> res(a.size() + b.size() - 1, Integer(0));
    auto accumulate = [&](const std::vector<Integer>& x, bool hx, const std::vector<Integer>& y,
                          bool hy, int sign) {
        if (!hx || !hy) return;
        mpz_class px = kr_pack(x, slot_limbs);
        mpz_class py = kr_pack(y, slot_limbs);
        mpz_class pz = px * py;
        kr_unpack_add(res, pz, slot_limbs, sign);
    };
    accumulate(ap, has_ap, bp, has_bp, +1);
    accumulate(an, has_an, bn, has_bn, +1);
    accumulate(ap, has_ap, bn, has_bn, -1);
    accumulate(an, has_an, bp, has_bp, -1);
    res.resize(a.size() + b.size() - 1);
    return res;
}

}  // namespace detail

inline LaurentPoly LaurentPoly::mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    size_t na = a.term_count(), nb = b.term_count();
    if (na == 1) {
        LaurentPoly r = b;
        return r.mul_monomial(a.c_.begin()->second, a.c_.begin()->first);
    }
    if (nb == 1) {
        LaurentPoly r = a;
        return r.mul_monomial(b.c_.begin()->second, b.c_.begin()->first);
    }
    if (na * nb <= 1024) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    long ga = 0, gb = 0;
    for (auto& [e, c] : a.c_) ga = gcd_long(ga, e - a.low_exp());
    for (auto& [e, c] : b.c_) gb = gcd_long(gb, e - b.low_exp());
    long g = gcd_long(ga == 0 ? gb : ga, gb == 0 ? ga : gb);
    if (g == 0) g = 1;
    detail::DenseInt da(a, g), db(b, g);
    std::vector<Integer> prod = detail::kr_mul(da.c, db.c);
    LaurentPoly r;
    Rational scale = da.scale * db.scale;
    long base = da.base + db.base;
    for (size_t i = 0; i < prod.size(); ++i)
        if (prod[i] != 0) r.add_term(base + g * static_cast<long>(i), Rational(prod[i]) * scale);
    return r;
}

inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::mul(a, b); }
inline LaurentPoly poly_neg(const LaurentPoly& a) { return -a; }

inline LaurentPoly poly_pow(const LaurentPoly& a, unsigned e) {
    LaurentPoly r(1);
    LaurentPoly base = a;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

// Long division in the ordinary-polynomial view.  Laurent inputs have their
// minimal q-powers factored out first (units); the quotient absorbs the unit
// ratio and the remainder the dividend's unit, so a = b*quot + rem holds for
// the original Laurent values and deg(rem) < deg(b) after unit stripping.
inline std::pair<LaurentPoly, LaurentPoly> poly_divrem(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    long ua = a.low_exp(), ub = b.low_exp();
    long da = a.degree() - ua, db = b.degree() - ub;
    if (da < db) return {LaurentPoly(), a};

    std::vector<Rational> r(static_cast<size_t>(da) + 1), d(static_cast<size_t>(db) + 1);
    for (auto& [e, c] : a.terms()) r[static_cast<size_t>(e - ua)] = c;
    for (auto& [e, c] : b.terms()) d[static_cast<size_t>(e - ub)] = c;
    const Rational& lead = d[static_cast<size_t>(db)];
    std::vector<Rational> q(static_cast<size_t>(da - db) + 1);
    for (long i = da - db; i >= 0; --i) {
        Rational f = r[static_cast<size_t>(i + db)] / lead;
        q[static_cast<size_t>(i)] = f;
        if (f == 0) continue;
        for (long j = 0; j <= db; ++j) r[static_cast<size_t>(i + j)] -= f * d[static_cast<size_t>(j)];
    }
    LaurentPoly quot, rem;
    for (size_t i = 0; i < q.size(); ++i)
        if (q[i] != 0) quot.add_term(static_cast<long>(i) + ua - ub, q[i]);
    for (long i = 0; i < db; ++i)
        if (r[static_cast<size_t>(i)] != 0) rem.add_term(i + ua, r[static_cast<size_t>(i)]);
    return {quot, rem};
}

inline bool poly_divides(const LaurentPoly& d, const LaurentPoly& a) {
    if (a.is_zero()) return true;
    return poly_divrem(a, d).second.is_zero();
}

// Largest e >= 0 with base^e dividing p exactly; p nonzero, base nonconstant.
inline int multiplicity_profile(const LaurentPoly& p, const LaurentPoly& base) {
    if (base.is_zero() || base.degree() - base.low_exp() == 0)
        throw std::domain_error("multiplicity against a constant base");
    if (p.is_zero()) throw std::domain_error("multiplicity of the zero polynomial is unbounded");
    int e = 0;
    LaurentPoly cur = p;
    for (;;) {
        auto [q, r] = poly_divrem(cur, base);
        if (!r.is_zero()) return e;
        cur = q;
        ++e;
    }
}

// Unit / content / primitive-part decomposition:
// p = sign * content * q^unit * prim, with prim an integer-coefficient
// ordinary polynomial, content > 0 rational, positive leading coefficient
// and coprime integer coefficients.
struct PrimDecomp {
    long unit = 0;
    Rational content{1};  // signed: carries the leading-coefficient sign
    LaurentPoly prim;     // integer, primitive, min exponent 0, positive leading coeff
};

inline PrimDecomp primitive_decompose(const LaurentPoly& p) {
    PrimDecomp d;
    if (p.is_zero()) {
        d.content = 0;
        return d;
    }
    d.unit = p.low_exp();
    Integer den_lcm = 1, num_gcd = 0;
    for (auto& [e, c] : p.terms()) {
        den_lcm = ilcm(den_lcm, c.get_den());
    }
    for (auto& [e, c] : p.terms()) {
        Rational t = c * den_lcm;
        num_gcd = igcd(num_gcd, t.get_num());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(p.leading_coeff()) < 0) content = -content;
    d.content = content;
    for (auto& [e, c] : p.terms()) d.prim.add_term(e - d.unit, c / content);
    return d;
}

}  // namespace qsc
