// The verdict engine: cross-multiplied congruence checks, multiplicity
// reporting, coprimality screening, and the bivariate three-factor variant.

#include "qsc/congruence.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qsc;

namespace {

RationalFunction rf(const LaurentPoly& p) { return RationalFunction::make(p, LaurentPoly(1)); }

LaurentPoly random_posexp_poly(std::mt19937& rng, long max_deg = 12) {
    std::uniform_int_distribution<long> expd(0, max_deg), numd(-6, 6);
    std::uniform_int_distribution<int> nterms(1, 7);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expd(rng), Rational(numd(rng)));
    return p;
}

}  // namespace

TEST_CASE("identical sides hold with zero residue") {
    Modulus m = standard_modulus(5);
    RationalFunction x = lhs_cubed({5, 2, 1});
    CongruenceVerdict v = check_congruent(x, x, m);
    REQUIRE(v.holds);
    REQUIRE(v.coprimality_ok);
    REQUIRE(v.residue.is_zero());
    REQUIRE(v.modulus_degree == m.expanded.degree());
    REQUIRE(v.max_multiplicity.size() == 2);
    REQUIRE(v.max_multiplicity[0] >= 3);
    REQUIRE(v.max_multiplicity[1] >= 2);
}

TEST_CASE("q^n is 1 modulo the n-th cyclotomic") {
    Modulus m{{cyclotomic(5), 1}};
    REQUIRE(check_congruent(rf(LaurentPoly::qpow(5)), rf(LaurentPoly(1)), m).holds);
    REQUIRE_FALSE(check_congruent(rf(LaurentPoly::qpow(4)), rf(LaurentPoly(1)), m).holds);
    // negative exponents are units modulo the cyclotomic
    REQUIRE(check_congruent(rf(LaurentPoly::monomial(Rational(1), -5)), rf(LaurentPoly(1)), m).holds);
}

TEST_CASE("first full statement instances hold") {
    {
        Modulus m = standard_modulus(5);
        QCase c{5, 2, 1};
        CongruenceVerdict v = check_congruent(lhs_cubed(c), rhs_cubed(c), m);
        REQUIRE(v.holds);
        REQUIRE(v.residue.is_zero());

        CongruenceVerdict w =
            check_congruent_parts(lhs_fused_parts(Family::cubed, c), rhs_fused_parts(Family::cubed, c), m);
        REQUIRE(w.holds == v.holds);
        REQUIRE(w.coprimality_ok);
        REQUIRE(w.max_multiplicity == v.max_multiplicity);
    }
    {
        // squared family at n = 7 = 3 mod 4 carries the sharper third power
        Modulus m = sharp_modulus(7);
        QCase c{7, 2, 1};
        CongruenceVerdict v =
            check_congruent_parts(lhs_fused_parts(Family::squared, c), rhs_fused_parts(Family::squared, c), m);
        REQUIRE(v.holds);
        REQUIRE(v.max_multiplicity.size() == 2);
        REQUIRE(v.max_multiplicity[0] >= 3);
        REQUIRE(v.max_multiplicity[1] >= 3);
    }
}

TEST_CASE("the degenerate r = n case normalizes before judging") {
    // raw denominators are (1+q^n) on both sides, not coprime to the modulus;
    // the fallback normalizes to 1 == 1
    QCase c{5, 2, 5};
    CongruenceVerdict v =
        check_congruent_parts(lhs_fused_parts(Family::cubed, c), rhs_fused_parts(Family::cubed, c),
                              standard_modulus(5));
    REQUIRE(v.holds);
    REQUIRE(v.coprimality_ok);
}

TEST_CASE("multiplicity profile") {
    LaurentPoly qm1 = LaurentPoly::qpow(1) - LaurentPoly(1);
    LaurentPoly p = poly_pow(qm1, 3);
    LaurentPoly qp2 = LaurentPoly::qpow(1) + LaurentPoly(2);
    p = poly_mul(p, qp2);
    REQUIRE(multiplicity_profile(p, qm1) == 3);
    REQUIRE(multiplicity_profile(qp2, qm1) == 0);
    REQUIRE(unit_multiplicity(LaurentPoly::monomial(Rational(1), -4), qp2) == 0);
}

TEST_CASE("oracle equivalence on randomized polynomial inputs") {
    std::mt19937 rng(23);
    Modulus m{{cyclotomic(3), 1}, {cyclotomic_neg(3), 1}};
    for (int trial = 0; trial < 120; ++trial) {
        LaurentPoly L = random_posexp_poly(rng);
        LaurentPoly R;
        if (trial % 2 == 0) {
            R = random_posexp_poly(rng);
        } else {
            R = L - poly_mul(m.expanded, random_posexp_poly(rng, 6));  // forced multiple
        }
        CongruenceVerdict v = check_congruent(rf(L), rf(R), m);
        LaurentPoly rem = poly_divrem(L - R, m.expanded).second;
        REQUIRE(v.holds == rem.is_zero());
        REQUIRE(v.residue == rem);
        if (trial % 2 == 1) REQUIRE(v.holds);
    }
}

TEST_CASE("verdict is stable under modulus-multiple shifts") {
    std::mt19937 rng(29);
    Modulus m = standard_modulus(5);
    QCase c{5, 2, 1};
    RationalFunction lhs = lhs_cubed(c), rhs = rhs_cubed(c);
    for (int trial = 0; trial < 10; ++trial) {
        RationalFunction shifted = lhs + rf(poly_mul(m.expanded, random_posexp_poly(rng, 5)));
        CongruenceVerdict v = check_congruent(shifted, rhs, m);
        REQUIRE(v.holds);
        REQUIRE(v.coprimality_ok);
    }
    // and a deliberately broken shift by a non-multiple
    RationalFunction broken = lhs + rf(cyclotomic(5));
    REQUIRE_FALSE(check_congruent(broken, rhs, m).holds);
    REQUIRE_FALSE(check_congruent(broken, rhs, m).residue.is_zero());
}

TEST_CASE("verdict is stable under common-factor scaling of the raw parts") {
    std::mt19937 rng(31);
    Modulus m = standard_modulus(5);
    QCase c{5, 2, 1};
    SumParts lp = lhs_fused_parts(Family::cubed, c), rp = rhs_fused_parts(Family::cubed, c);
    CongruenceVerdict base = check_congruent_parts(lp, rp, m);
    int exercised = 0;
    for (int trial = 0; trial < 20 && exercised < 8; ++trial) {
        LaurentPoly S = random_posexp_poly(rng, 6);
        if (S.is_zero() || poly_gcd(S, m.expanded).degree() > 0) continue;
        ++exercised;
        SumParts scaled{poly_mul(lp.num, S), poly_mul(lp.den, S)};
        CongruenceVerdict v = check_congruent_parts(scaled, rp, m);
        REQUIRE(v.holds == base.holds);
        REQUIRE(v.coprimality_ok == base.coprimality_ok);
        REQUIRE(v.max_multiplicity == base.max_multiplicity);
    }
    REQUIRE(exercised >= 8);
}

TEST_CASE("bivariate congruence on constructed instances") {
    BiPoly fac = BiPoly::one_minus_a(Rational(1), 10);  // 1 - a q^10
    BiPoly arb = BiPoly::a_term(LaurentPoly::qpow(3), 2) + BiPoly(LaurentPoly(5));
    BiPoly rnum = BiPoly::a_term(LaurentPoly(1), 1) * BiPoly(cyclotomic(3));
    BiPoly one(LaurentPoly(1));

    SECTION("identical sides") {
        CongruenceVerdict v = check_bicongruent(rnum, one, rnum, one, {fac});
        REQUIRE(v.holds);
        REQUIRE(v.residue.is_zero());
    }
    SECTION("difference constructed as a multiple") {
        BiPoly lnum = rnum + fac * arb;
        CongruenceVerdict v = check_bicongruent(lnum, one, rnum, one, {fac});
        REQUIRE(v.holds);
        REQUIRE(v.max_multiplicity.size() == 1);
        REQUIRE(v.max_multiplicity[0] >= 1);
    }
    SECTION("difference that is not a multiple") {
        BiPoly lnum = rnum + arb;
        CongruenceVerdict v = check_bicongruent(lnum, one, rnum, one, {fac});
        REQUIRE_FALSE(v.holds);
        REQUIRE(v.coprimality_ok);
        REQUIRE_FALSE(v.residue.is_zero());
    }
    SECTION("denominator meeting a factor is flagged, not refuted") {
        CongruenceVerdict v = check_bicongruent(rnum, fac, rnum, fac, {fac});
        REQUIRE_FALSE(v.holds);
        REQUIRE_FALSE(v.coprimality_ok);
    }
    SECTION("bad factor lists throw") {
        REQUIRE_THROWS_AS(check_bicongruent(rnum, one, rnum, one, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(check_bicongruent(rnum, one, rnum, one, {BiPoly(LaurentPoly(2))}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(check_bicongruent(rnum, one, rnum, one, {fac, fac}), std::invalid_argument);
    }
}

TEST_CASE("parametric statement instance modulo the three factors") {
    for (auto [c, f] : std::vector<std::pair<QCase, Family>>{{{5, 2, 1}, Family::cubed},
                                                             {{3, 2, 1}, Family::squared}}) {
        BiSumParts lp = parametric_lhs_parts(c, f);
        BiSumParts rp = parametric_rhs_parts(c, f);
        std::vector<BiPoly> factors = {BiPoly(cyclotomic_neg(c.n)),
                                       BiPoly::one_minus_a(Rational(1), 2 * c.n),
                                       BiPoly::a_minus(Rational(1), 2 * c.n)};
        CongruenceVerdict v = check_bicongruent(lp.num, lp.den, rp.num, rp.den, factors);
        CAPTURE(c.n, c.d, c.r, family_name(f));
        REQUIRE(v.holds);
        REQUIRE(v.coprimality_ok);
        REQUIRE(v.max_multiplicity.size() == 3);
    }
}

TEST_CASE("bivariate unit-shift divisibility helper") {
    BiPoly fac = BiPoly::a_minus(Rational(1), 4);
    BiPoly mult = fac * BiPoly::a_term(LaurentPoly::monomial(Rational(1), -7), 1);
    REQUIRE(bipoly_unit_divisible(mult, fac));
    REQUIRE_FALSE(bipoly_unit_divisible(mult + BiPoly(LaurentPoly(1)), fac));
    REQUIRE(bipoly_unit_divisible(BiPoly(), fac));
}
