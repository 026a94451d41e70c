#pragma once

// Rational functions in q over the rationals, kept in a canonical reduced
// form: the denominator is an ordinary polynomial (no negative exponents,
// nonzero constant term) that is integer-primitive with positive leading
// coefficient; all q-power units and rational content live in the numerator;
// numerator and denominator share no polynomial factor.

#include "qsc/poly_gcd.hpp"

namespace qsc {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(1) {}
    explicit RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}

    static RationalFunction make(const LaurentPoly& n, const LaurentPoly& d) {
        if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
        RationalFunction r;
        if (n.is_zero()) return r;
        PrimDecomp dn = primitive_decompose(n);
        PrimDecomp dd = primitive_decompose(d);
        LaurentPoly g = poly_gcd_primitive(dn.prim, dd.prim);
        LaurentPoly pn = (g.degree() > 0) ? poly_divexact(dn.prim, g) : dn.prim;
        LaurentPoly pd = (g.degree() > 0) ? poly_divexact(dd.prim, g) : dd.prim;
        r.num_ = pn.mul_monomial(dn.content / dd.content, dn.unit - dd.unit);
        r.den_ = pd;
        return r;
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    const LaurentPoly& as_poly() const {
        if (!den_.is_one()) throw std::domain_error("rational function is not a polynomial");
        return num_;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        if (a.is_zero()) return RationalFunction();
        return make(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction subst_q_negated() const {
        return make(num_.subst_q_negated(), den_.subst_q_negated());
    }
    RationalFunction subst_q_power(long m) const {
        return make(num_.subst_q_power(m), den_.subst_q_power(m));
    }

    Rational eval(const Rational& v) const {
        Rational d = den_.eval(v);
        if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
        return num_.eval(v) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    LaurentPoly num_, den_;
};

}  // namespace qsc
