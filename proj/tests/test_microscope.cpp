// Proof-mechanism checks: specialization identities, the reflection
// congruence, termwise pairing, the parametric congruence, and the
// consistency chain tying them to the plain statements.

#include "qsc/microscope.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qsc;

TEST_CASE("specialization identities at a = q^{+-2n}") {
    for (Family f : {Family::cubed, Family::squared}) {
        REQUIRE(verify_bailey_instance({5, 2, 5}, +1, f));
        REQUIRE(verify_bailey_instance({5, 2, 5}, -1, f));
    }
    REQUIRE(verify_bailey_instance({3, 2, 1}, +1, Family::cubed));
    REQUIRE(verify_bailey_instance({5, 3, -1}, -1, Family::cubed));

    for (const QCase& c : {QCase{3, 2, 1}, QCase{3, 2, -1}, QCase{5, 2, 1}, QCase{5, 2, -1},
                           QCase{5, 4, 1}, QCase{7, 3, 1}})
        for (Family f : {Family::cubed, Family::squared})
            for (int sign : {+1, -1}) {
                CAPTURE(c.n, c.d, c.r, family_name(f), sign);
                REQUIRE(verify_bailey_instance(c, sign, f));
            }

    REQUIRE_THROWS_AS(verify_bailey_instance({3, 2, 1}, 2, Family::cubed), std::invalid_argument);
}

TEST_CASE("reflection congruence with a indeterminate") {
    REQUIRE(verify_poch_reflection(5, 2, 1, 0));
    REQUIRE(verify_poch_reflection(7, 3, 1, 1));
    // k at the top of its range
    REQUIRE(verify_poch_reflection(5, 2, 1, 2));
    REQUIRE(verify_poch_reflection(7, 3, 1, 2));
    for (long k = 0; k <= 3; ++k) REQUIRE(verify_poch_reflection(5, 2, -1, k));

    SECTION("the lemma does not require odd n or coprimality") {
        for (long k = 0; k <= 1; ++k) {
            REQUIRE(verify_poch_reflection(4, 3, 1, k));
            REQUIRE(verify_poch_reflection(6, 5, 1, k));
            REQUIRE(verify_poch_reflection(4, 2, 2, k));
        }
        for (long k = 0; k <= 2; ++k) REQUIRE(verify_poch_reflection(8, 3, 2, k));
    }

    SECTION("invalid inputs are rejected") {
        REQUIRE_THROWS_AS(verify_poch_reflection(5, 2, 2, 0), std::domain_error);
        REQUIRE_THROWS_AS(verify_poch_reflection(5, 2, 1, 3), std::domain_error);
        REQUIRE_THROWS_AS(verify_poch_reflection(5, 2, 1, -1), std::domain_error);
        REQUIRE_THROWS_AS(verify_poch_reflection(0, 2, 1, 0), std::domain_error);
    }
}

TEST_CASE("reflection is an involution") {
    // reflecting twice is the identity on indices, and the two exponents of a
    // round trip cancel modulo n: eps(k) + eps(M-k) = n * M exactly
    for (auto [n, d, r] : std::vector<std::array<long, 3>>{
             {5, 2, 1}, {5, 2, -1}, {7, 3, 1}, {9, 4, 1}, {4, 3, 1}, {8, 3, 2}, {13, 2, -3}}) {
        long M = (n - r) / d;
        for (long k = 0; k <= M; ++k) {
            REQUIRE(M - (M - k) == k);
            REQUIRE(reflection_exponent(n, d, r, k) + reflection_exponent(n, d, r, M - k) == n * M);
        }
    }
}

TEST_CASE("termwise pairing cancels modulo Phi_n(-q)") {
    REQUIRE(verify_term_pairing({3, 2, 1}, Family::cubed));
    REQUIRE(verify_term_pairing({5, 2, -1}, Family::squared));
    REQUIRE(verify_term_pairing({5, 2, 1}, Family::cubed));
    REQUIRE(verify_term_pairing({5, 2, 1}, Family::squared));
    REQUIRE(verify_term_pairing({5, 4, 1}, Family::cubed));
    REQUIRE(verify_term_pairing({7, 4, -1}, Family::squared));
    REQUIRE(verify_term_pairing({5, 2, 5}, Family::cubed));  // single self-paired term

    SECTION("the middle term itself vanishes when the length is even") {
        QCase c{5, 2, 1};  // M = 2, middle k = 1
        detail::PairTerm mid = detail::pairing_term(c, Family::cubed, 1);
        REQUIRE(bipoly_unit_divisible(mid.num, BiPoly(cyclotomic_neg(5))));
    }
}

TEST_CASE("parametric congruence modulo the three factors") {
    CongruenceVerdict triv = verify_parametric({5, 2, 5}, Family::cubed);
    REQUIRE(triv.holds);  // needs the normalize-and-retry path: raw dens carry 1+q^n

    CongruenceVerdict v1 = verify_parametric({5, 2, 1}, Family::cubed);
    REQUIRE(v1.holds);
    REQUIRE(v1.coprimality_ok);
    REQUIRE(v1.max_multiplicity.size() == 3);

    CongruenceVerdict v2 = verify_parametric({7, 4, -1}, Family::squared);
    REQUIRE(v2.holds);
}

TEST_CASE("cyclotomic split of Phi_n(q^2) for odd n") {
    for (long n = 3; n <= 25; n += 2) {
        LaurentPoly lhs = cyclotomic(n).subst_q_power(2);
        REQUIRE(lhs == poly_mul(cyclotomic(n), cyclotomic_neg(n)));
    }
}

TEST_CASE("full microscope report") {
    for (const QCase& c :
         {QCase{3, 2, 1}, QCase{5, 2, 1}, QCase{5, 2, -1}, QCase{5, 4, 1}, QCase{7, 3, 1}})
        for (Family f : {Family::cubed, Family::squared}) {
            MicroscopeReport rep = microscope_report(c, f);
            CAPTURE(c.n, c.d, c.r, family_name(f));
            REQUIRE(rep.bailey_plus);
            REQUIRE(rep.bailey_minus);
            REQUIRE(rep.pairing_ok);
            REQUIRE(rep.reflection_ok);
            REQUIRE(rep.parametric_ok.holds);
            REQUIRE(rep.consistency_ok);
            REQUIRE(rep.all_ok());
        }
}
