#pragma once

// Polynomials in an auxiliary indeterminate a whose coefficients are Laurent
// polynomials in q, plus quotients of those.  The parameter a is the
// microscoping handle: sums are built with a symbolic, reduced modulo
// factors like 1 - a*q^(2n), and only then specialized.
//
// a-exponents are nonnegative; builders clear every q^x/a Pochhammer entry
// into the common denominator before constructing a BiPoly.

#include "qsc/rational_function.hpp"

namespace qsc {

class BiPoly {
public:
    using Map = std::map<long, LaurentPoly>;  // a-exponent -> nonzero coefficient

    BiPoly() = default;
    explicit BiPoly(const LaurentPoly& c) {
        if (!c.is_zero()) c_[0] = c;
    }
    explicit BiPoly(const Rational& c) : BiPoly(LaurentPoly(c)) {}

    static BiPoly a_term(const LaurentPoly& c, long e) {
        BiPoly p;
        p.add_term(e, c);
        return p;
    }
    // a - c*q^e and 1 - c*q^e*a, the two linear shapes of the modulus factors
    static BiPoly a_minus(const Rational& c, long e) {
        BiPoly p;
        p.add_term(1, LaurentPoly(1));
        p.add_term(0, LaurentPoly::monomial(-c, e));
        return p;
    }
    static BiPoly one_minus_a(const Rational& c, long e) {
        BiPoly p;
        p.add_term(0, LaurentPoly(1));
        p.add_term(1, LaurentPoly::monomial(-c, e));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_a_free() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    size_t term_count() const { return c_.size(); }
    const Map& terms() const { return c_; }
    long deg_a() const {
        if (c_.empty()) throw std::domain_error("a-degree of zero polynomial");
        return c_.rbegin()->first;
    }
    long low_a() const {
        if (c_.empty()) throw std::domain_error("low a-exponent of zero polynomial");
        return c_.begin()->first;
    }
    const LaurentPoly& lead_a() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.rbegin()->second;
    }
    LaurentPoly coeff_a(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? LaurentPoly() : it->second;
    }
    void add_term(long e, const LaurentPoly& c) {
        if (e < 0) throw std::invalid_argument("negative a-exponent");
        if (c.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return c_ != o.c_; }

    BiPoly operator-() const {
        BiPoly r;
        for (auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
        BiPoly r;
        for (auto& [ex, cx] : x.c_)
            for (auto& [ey, cy] : y.c_) r.add_term(ex + ey, cx * cy);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend BiPoly operator*(const BiPoly& x, const LaurentPoly& s) {
        BiPoly r;
        if (s.is_zero()) return r;
        for (auto& [e, c] : x.c_) r.c_[e] = c * s;
        return r;
    }
    friend BiPoly operator*(const LaurentPoly& s, const BiPoly& x) { return x * s; }
    friend BiPoly operator*(const BiPoly& x, const Rational& s) {
        BiPoly r;
        if (s == 0) return r;
        for (auto& [e, c] : x.c_) r.c_[e] = c * s;
        return r;
    }

    // a := v (any Laurent polynomial; monomials stay cheap), Horner form
    LaurentPoly subst_a(const LaurentPoly& v) const {
        if (c_.empty()) return {};
        LaurentPoly acc;
        long prev = 0;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (first) {
                acc = it->second;
                prev = it->first;
                first = false;
                continue;
            }
            acc = acc * poly_pow(v, static_cast<unsigned>(prev - it->first)) + it->second;
            prev = it->first;
        }
        if (prev != 0) acc = acc * poly_pow(v, static_cast<unsigned>(prev));
        return acc;
    }
    // a := c*q^e without building intermediate products
    LaurentPoly subst_a_monomial(const Rational& c, long e) const {
        LaurentPoly r;
        for (auto& [ea, co] : c_) {
            Rational f = 1;
            Integer cn = c.get_num(), cd = c.get_den();
            mpz_pow_ui(f.get_num_mpz_t(), cn.get_mpz_t(), static_cast<unsigned long>(ea));
            mpz_pow_ui(f.get_den_mpz_t(), cd.get_mpz_t(), static_cast<unsigned long>(ea));
            f.canonicalize();
            LaurentPoly t = co;
            t.mul_monomial(f, e * ea);
            r += t;
        }
        return r;
    }

    BiPoly subst_q_negated() const {
        BiPoly r;
        for (auto& [e, c] : c_) r.c_[e] = c.subst_q_negated();
        return r;
    }
    BiPoly subst_q_power(long m) const {
        BiPoly r;
        for (auto& [e, c] : c_) r.c_[e] = c.subst_q_power(m);
        return r;
    }

    // gcd (primitive, ordinary view) of all q-coefficients; zero for the zero polynomial
    LaurentPoly coeff_gcd() const {
        LaurentPoly g;
        for (auto& [e, c] : c_) {
            g = g.is_zero() ? primitive_decompose(c).prim : poly_gcd_primitive(g, c);
            if (!g.is_zero() && g.degree() == 0) return LaurentPoly(1);
        }
        return g;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            if (it->first == 0) {
                s += "(" + it->second.str() + ")";
            } else {
                s += "(" + it->second.str() + ")*a";
                if (it->first != 1) s += "^" + std::to_string(it->first);
            }
        }
        return s;
    }

private:
    Map c_;
};

// Long division in a; quotient coefficients must be exact Laurent quotients.
// Returns {quotient, remainder} with deg_a(remainder) < deg_a(divisor) or
// remainder 0; nullopt when some coefficient quotient leaves q-residue
// (the divisor then has no BiPoly cofactor).
inline std::optional<std::pair<BiPoly, BiPoly>> bipoly_divrem(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("bivariate division by zero");
    if (a.is_zero()) return std::make_pair(BiPoly(), BiPoly());
    if (b.deg_a() == 0) {
        const LaurentPoly& d = b.terms().begin()->second;
        BiPoly q, r;
        for (auto& [e, c] : a.terms()) {
            auto [cq, cr] = poly_divrem(c, d);
            q.add_term(e, cq);
            r.add_term(e, cr);
        }
        return std::make_pair(q, r);
    }
    BiPoly rem = a, quot;
    long db = b.deg_a();
    const LaurentPoly& lead = b.lead_a();
    while (!rem.is_zero() && rem.deg_a() >= db) {
        auto [cq, cr] = poly_divrem(rem.lead_a(), lead);
        if (!cr.is_zero()) return std::nullopt;
        long shift = rem.deg_a() - db;
        quot.add_term(shift, cq);
        BiPoly t;
        for (auto& [e, c] : b.terms()) t.add_term(e + shift, c * cq);
        rem -= t;
    }
    return std::make_pair(quot, rem);
}

inline std::optional<BiPoly> bipoly_try_divexact(const BiPoly& a, const BiPoly& b) {
    auto qr = bipoly_divrem(a, b);
    if (!qr || !qr->second.is_zero()) return std::nullopt;
    return qr->first;
}

inline BiPoly bipoly_divexact(const BiPoly& a, const BiPoly& b) {
    auto q = bipoly_try_divexact(a, b);
    if (!q) throw std::domain_error("inexact bivariate division");
    return *q;
}

namespace detail {

// Pseudo-remainder: reduce a by b in a without leaving the coefficient ring,
// stripping coefficient content between steps to limit growth.
inline BiPoly bipoly_prem(BiPoly a, const BiPoly& b) {
    long db = b.deg_a();
    const LaurentPoly& lb = b.lead_a();
    while (!a.is_zero() && a.deg_a() >= db) {
        long shift = a.deg_a() - db;
        LaurentPoly la = a.lead_a();
        BiPoly scaled;
        for (auto& [e, c] : a.terms()) scaled.add_term(e, c * lb);
        BiPoly sub;
        for (auto& [e, c] : b.terms()) sub.add_term(e + shift, c * la);
        a = scaled - sub;
        if (!a.is_zero()) {
            LaurentPoly g = a.coeff_gcd();
            if (g.degree() > 0) {
                BiPoly stripped;
                for (auto& [e, c] : a.terms()) stripped.add_term(e, poly_divexact(c, g));
                a = stripped;
            }
        }
    }
    return a;
}

}  // namespace detail

// No common factor in the ring Q[q,1/q][a]: the a-free content parts must be
// coprime and the Euclidean sequence in a must terminate at a-degree 0.
inline bool bipoly_coprime(const BiPoly& x, const BiPoly& y) {
    if (x.is_zero() || y.is_zero()) throw std::invalid_argument("coprimality with zero polynomial");
    LaurentPoly cx = x.coeff_gcd(), cy = y.coeff_gcd();
    if (poly_gcd_primitive(cx, cy).degree() > 0) return false;
    if (x.deg_a() == 0 || y.deg_a() == 0) return true;
    BiPoly r0 = x, r1 = y;
    if (r0.deg_a() < r1.deg_a()) std::swap(r0, r1);
    while (!r1.is_zero() && r1.deg_a() > 0) {
        BiPoly r2 = detail::bipoly_prem(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    return !r1.is_zero() || r0.deg_a() == 0;
}

// Quotient of bivariate polynomials.  Normalization strips the factors the
// implemented gcd can see: a common a-power, a common q-power unit, and the
// joint polynomial content of all coefficients.
class BiRationalFunction {
public:
    BiRationalFunction() : num_(), den_(LaurentPoly(1)) {}
    explicit BiRationalFunction(const BiPoly& p) : num_(p), den_(LaurentPoly(1)) {}

    static BiRationalFunction make(const BiPoly& n, const BiPoly& d) {
        if (d.is_zero()) throw std::domain_error("bivariate rational function with zero denominator");
        BiRationalFunction r;
        if (n.is_zero()) return r;
        long apow = std::min(n.low_a(), d.low_a());
        long upow = 0;
        bool first = true;
        for (auto* p : {&n, &d})
            for (auto& [e, c] : p->terms()) {
                upow = first ? c.low_exp() : std::min(upow, c.low_exp());
                first = false;
            }
        LaurentPoly g;
        for (auto* p : {&n, &d}) {
            for (auto& [e, c] : p->terms()) {
                g = g.is_zero() ? primitive_decompose(c).prim : poly_gcd_primitive(g, c);
                if (g.degree() == 0) break;
            }
            if (!g.is_zero() && g.degree() == 0) break;
        }
        auto strip = [&](const BiPoly& p) {
            BiPoly out;
            for (auto& [e, c] : p.terms()) {
                LaurentPoly cc = (g.degree() > 0) ? poly_divexact(c, g) : c;
                cc.mul_monomial(Rational(1), -upow);
                out.add_term(e - apow, cc);
            }
            return out;
        };
        r.num_ = strip(n);
        r.den_ = strip(d);
        if (sgn(r.den_.lead_a().leading_coeff()) < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // equality of values (the normal form is not fully canonical)
    bool operator==(const BiRationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const BiRationalFunction& o) const { return !(*this == o); }

    BiRationalFunction operator-() const {
        BiRationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend BiRationalFunction operator+(const BiRationalFunction& a, const BiRationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRationalFunction operator-(const BiRationalFunction& a, const BiRationalFunction& b) {
        return a + (-b);
    }
    friend BiRationalFunction operator*(const BiRationalFunction& a, const BiRationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return BiRationalFunction();
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BiRationalFunction operator/(const BiRationalFunction& a, const BiRationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero bivariate rational function");
        if (a.is_zero()) return BiRationalFunction();
        return make(a.num_ * b.den_, a.den_ * b.num_);
    }

    // a := 1, collapsing to a univariate rational function
    RationalFunction subst_a_one() const {
        return RationalFunction::make(num_.subst_a(LaurentPoly(1)), den_.subst_a(LaurentPoly(1)));
    }
    RationalFunction subst_a_monomial(const Rational& c, long e) const {
        return RationalFunction::make(num_.subst_a_monomial(c, e), den_.subst_a_monomial(c, e));
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    BiPoly num_, den_;
};

}  // namespace qsc
