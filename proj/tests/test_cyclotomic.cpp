// Cyclotomic polynomial construction and the composite moduli built from it.

#include "qsc/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qsc;

namespace {

bool is_small_odd_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return n % 2 == 1;
}

bool is_prime_power(long n) {
    for (long p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        long m = n;
        while (m % p == 0) m /= p;
        return m == 1;
    }
    return false;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
    LaurentPoly qm1;
    qm1.add_term(1, Rational(1));
    qm1.add_term(0, Rational(-1));
    REQUIRE(cyclotomic(1) == qm1);

    LaurentPoly phi6;
    phi6.add_term(2, Rational(1));
    phi6.add_term(1, Rational(-1));
    phi6.add_term(0, Rational(1));
    REQUIRE(cyclotomic(6) == phi6);

    LaurentPoly prod(1);
    for (long d : {1L, 3L, 5L, 15L}) prod = prod * cyclotomic(d);
    REQUIRE(prod == LaurentPoly::qpow(15) - LaurentPoly(1));

    REQUIRE_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("cyclotomic factorization of q^n - 1 up to 40") {
    for (long n = 1; n <= 40; ++n) {
        LaurentPoly prod(1);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        REQUIRE(prod == LaurentPoly::qpow(n) - LaurentPoly(1));
    }
}

TEST_CASE("cyclotomics are monic with integer coefficients") {
    for (long n = 1; n <= 40; ++n) {
        LaurentPoly p = cyclotomic(n);
        REQUIRE(p.leading_coeff() == 1);
        REQUIRE(p.low_exp() >= 0);
        for (auto& [e, c] : p.terms()) REQUIRE(c.get_den() == 1);
    }
}

TEST_CASE("negated-argument image equals the doubled index") {
    for (long n = 3; n <= 25; n += 2) {
        REQUIRE(cyclotomic(2 * n) == cyclotomic_neg(n));
        // already monic before normalization for n >= 3
        REQUIRE(cyclotomic(n).subst_q_negated().leading_coeff() == 1);
    }
}

TEST_CASE("evaluations at +-1") {
    for (long n = 3; n <= 39; n += 2) {
        REQUIRE(cyclotomic(n).eval(Rational(-1)) == 1);
        Rational at1 = cyclotomic(n).eval(Rational(1));
        if (is_small_odd_prime(n)) {
            REQUIRE(at1 == Rational(n));
        } else if (!is_prime_power(n)) {
            REQUIRE(at1 == 1);
        }
    }
}

TEST_CASE("standard modulus") {
    Modulus m3 = standard_modulus(3);
    LaurentPoly phi3_neg;  // q^2 - q + 1
    phi3_neg.add_term(2, Rational(1));
    phi3_neg.add_term(1, Rational(-1));
    phi3_neg.add_term(0, Rational(1));
    REQUIRE(m3.factors.size() == 2);
    REQUIRE(m3.factors[0].first == phi3_neg);
    REQUIRE(m3.factors[0].second == 3);
    REQUIRE(m3.factors[1].first == cyclotomic(3));
    REQUIRE(m3.factors[1].second == 2);
    REQUIRE(m3.expanded == poly_pow(phi3_neg, 3) * poly_pow(cyclotomic(3), 2));

    REQUIRE(standard_modulus(5).expanded.degree() == 20);
    REQUIRE(poly_gcd(cyclotomic(3), cyclotomic_neg(3)) == LaurentPoly(1));

    REQUIRE_THROWS_AS(standard_modulus(1), std::invalid_argument);
    REQUIRE_THROWS_AS(standard_modulus(2), std::invalid_argument);
    REQUIRE_THROWS_AS(standard_modulus(8), std::invalid_argument);
}

TEST_CASE("sharp modulus multiplicities") {
    auto mults = [](const Modulus& m) {
        return std::pair<int, int>(m.factors[0].second, m.factors[1].second);
    };
    REQUIRE(mults(sharp_modulus(5)) == std::pair<int, int>(3, 2));
    REQUIRE(mults(sharp_modulus(7)) == std::pair<int, int>(3, 3));
    REQUIRE(mults(sharp_modulus(9)) == std::pair<int, int>(3, 2));
    REQUIRE_THROWS_AS(sharp_modulus(4), std::invalid_argument);
}

TEST_CASE("modulus construction rejects bad input") {
    REQUIRE_THROWS_AS(Modulus({{cyclotomic(3), 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Modulus({{LaurentPoly(2), 1}}), std::invalid_argument);
    // q^2-1 and q-1 share a factor
    LaurentPoly a = LaurentPoly::qpow(2) - LaurentPoly(1);
    LaurentPoly b = LaurentPoly::qpow(1) - LaurentPoly(1);
    REQUIRE_THROWS_AS(Modulus({{a, 1}, {b, 1}}), std::invalid_argument);
}
