#pragma once

// Built-in invariant suite behind `qsc selftest`: a fast cross-section of the
// property tests that live in tests/, one line per group.  The full suite
// runs through ctest; this is the field diagnostic.

#include <iostream>
#include <random>
#include <string>

#include "qsc/cyclotomic.hpp"
#include "qsc/registry.hpp"
#include "qsc/report.hpp"
#include "qsc/sweep.hpp"

namespace qsc {

namespace detail {

template <typename Fn>
bool selftest_group(std::ostream& out, const std::string& name, Fn&& fn) {
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& ex) {
        note = ex.what();
    }
    out << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !note.empty()) out << " (" << note << ")";
    out << '\n';
    return ok;
}

}  // namespace detail

inline bool run_selftest(std::ostream& out = std::cout) {
    bool all = true;

    all &= detail::selftest_group(out, "cyclotomic-structure", [] {
        for (long n = 1; n <= 20; ++n) {
            LaurentPoly prod(1);
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) prod *= cyclotomic(d);
            if (!(prod == -LaurentPoly::one_minus_qpow(n))) return false;
        }
        for (long n = 3; n <= 15; n += 2)
            if (!(cyclotomic_neg(n) == cyclotomic(2 * n))) return false;
        for (long n = 3; n <= 9; n += 2)
            if (!(cyclotomic(n).subst_q_power(2) ==
                  poly_mul(cyclotomic(n), cyclotomic_neg(n))))
                return false;
        return true;
    });

    all &= detail::selftest_group(out, "q-factorial-splitting", [] {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> td(-4, 4), md(1, 3), kd(0, 6);
        for (int trial = 0; trial < 12; ++trial) {
            long t = td(rng), m = md(rng), j = kd(rng), k = kd(rng);
            LaurentPoly whole = q_pochhammer(t, m, j + k);
            LaurentPoly split =
                poly_mul(q_pochhammer(t, m, j), q_pochhammer(t + m * j, m, k));
            if (!(whole == split)) return false;
        }
        return true;
    });

    all &= detail::selftest_group(out, "truncated-congruences", [] {
        for (const char* id : {"T1", "T2"}) {
            for (const QCase& c :
                 {QCase{5, 2, 1}, QCase{7, 3, 1}, QCase{7, 2, -3}}) {
                Params ps;
                ps.n = c.n;
                ps.d = c.d;
                ps.r = c.r;
                if (run_statement(id, ps).outcome != "held") return false;
            }
        }
        Params e3;
        e3.n = 7;
        CaseRecord rec = run_statement("E3", e3);
        if (rec.outcome != "held" || rec.multiplicities.size() != 2 ||
            rec.multiplicities[1] < 3)
            return false;
        Params t3;
        t3.n = 7;
        t3.s = 1;
        return run_statement("T3", t3).outcome == "held";
    });

    all &= detail::selftest_group(out, "auxiliary-parameter", [] {
        for (const QCase& c : {QCase{5, 2, 1}, QCase{3, 2, 1}}) {
            if (!microscope_report(c, Family::cubed).all_ok()) return false;
            if (!microscope_report(c, Family::squared).all_ok()) return false;
        }
        return true;
    });

    all &= detail::selftest_group(out, "prime-power", [] {
        for (long p = 3; p <= 13; p += 2) {
            if (!is_small_prime(p)) continue;
            if (!check_vanhamme(VanHamme::B2, p).holds) return false;
            for (const char* id : {"COR3-1", "COR3-2", "COR3-3", "COR3-4",
                                   "COR4-1", "COR4-2", "COR4-3", "COR4-4",
                                   "HE", "EQ7-2"}) {
                PadicVerdict v = check_corollary(id, p);
                if (v.applicable && !v.holds) return false;
            }
            for (int d = 2; d <= 4; ++d) {
                PadicVerdict v = check_swisher(Rational(1, d), p);
                if (v.applicable && !v.holds) return false;
            }
        }
        PadicContext c7(7, 3);
        std::mt19937 rng(11);
        std::uniform_int_distribution<long> numd(-30, 30), dend(1, 30);
        for (int trial = 0; trial < 20; ++trial) {
            long den = dend(rng);
            if (den % 7 == 0) continue;
            Rational x(numd(rng), den);
            x.canonicalize();
            Integer lhs = gamma_p(c7, x) * gamma_p(c7, Rational(1) - x) % c7.pe;
            if (lhs != mod_reduce(Rational(parity_sign(a_p(x, 7))), c7.pe))
                return false;
        }
        return true;
    });

    all &= detail::selftest_group(out, "q-p-bridge", [] {
        return verify_q_p_bridge(3) && verify_q_p_bridge(5);
    });

    all &= detail::selftest_group(out, "determinism", [] {
        SweepSpec spec;
        spec.statement = "T1";
        spec.n_max = 7;
        Report serial = run_sweep(spec);
        spec.jobs = 2;
        Report parallel = run_sweep(spec);
        return canonical_json(serial) == canonical_json(parallel);
    });

    all &= detail::selftest_group(out, "negative-control", [] {
        for (const CorruptionPoint& pt : corruption_points()) {
            CongruenceVerdict v = run_corrupted("T1", {5, 2, 1}, pt);
            if (v.holds || v.residue.is_zero() || !v.coprimality_ok) return false;
        }
        CongruenceVerdict v =
            run_corrupted("T2", {5, 2, 1}, {false, ExpCoeff::linear});
        return !v.holds && !v.residue.is_zero();
    });

    out << (all ? "selftest passed" : "selftest FAILED") << '\n';
    return all;
}

}  // namespace qsc
