// Release gate.  Each criterion prints exactly one verdict line; the binary
// exits nonzero when any criterion fails.  Criteria with a stated time budget
// also fail when they blow it.

#include "qsc/registry.hpp"
#include "qsc/report.hpp"
#include "qsc/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

using namespace qsc;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

unsigned workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 2;
}

// The desk-scale grid: every valid (n,d,r) with odd n <= 25, d in 2..6 and
// |r| <= 7.  Criteria 1, 2, 4 and 9 all run over this set.
SweepSpec grid(const std::string& id) {
    SweepSpec s;
    s.statement = id;
    s.n_max = 25;
    s.jobs = static_cast<int>(workers());
    return s;
}

std::string case_tag(const QCase& c) {
    std::ostringstream o;
    o << "(" << c.n << "," << c.d << "," << c.r << ")";
    return o.str();
}

// 1: cubed-family congruences across the grid, zero failures.
Verdict cubed_sweep(Report& keep) {
    keep = run_sweep(grid("T1"));
    ReportSummary s = summarize(keep);
    std::ostringstream d;
    d << s.checked << " cases, " << s.failed << " failed";
    return {s.failed == 0 && s.checked > 0, d.str()};
}

// 2: squared-family sweep, zero failures, and the sharpened Phi_n(q)
// exponent at d = 2, r = +-1, n = 3 (mod 4): multiplicity >= 3 expected.
Verdict squared_sweep() {
    Report rep = run_sweep(grid("T2"));
    ReportSummary s = summarize(rep);
    if (s.failed != 0 || s.checked == 0)
        return {false, std::to_string(s.failed) + " sweep failures"};
    long seen = 0, low = 0;
    std::ostringstream bad;
    for (const CaseRecord& rec : rep.cases) {
        if (rec.outcome != "held") continue;
        const long n = rec.parameters.at("n");
        const long r = rec.parameters.at("r");
        if (rec.parameters.at("d") != 2 || n % 4 != 3 || n > 23) continue;
        if (r != 1 && r != -1) continue;
        ++seen;
        const int mult = rec.multiplicities.size() > 1 ? rec.multiplicities[1] : 0;
        if (mult < 3) {
            ++low;
            bad << " n=" << n << ",r=" << r << ",mult=" << mult;
        }
    }
    std::ostringstream d;
    d << s.checked << " cases, 0 failed; sharp multiplicity at " << (seen - low)
      << "/" << seen << " of the d=2 instances";
    if (low) d << "; below 3:" << bad.str();
    return {low == 0 && seen == 12, d.str()};
}

// 3: auxiliary-parameter layer over every valid case with n <= 13, d <= 4:
// both terminating specializations, the reflection identity at every k, the
// term pairing and the parametric congruence, for both families.
Verdict microscope_suite() {
    std::vector<QCase> cases;
    for (long n = 3; n <= 13; n += 2)
        for (long d : {2L, 3L, 4L})
            for (long r = n - d * n + d; r <= n; ++r)
                if (qcase_invalid_reason({n, d, r}) == nullptr)
                    cases.push_back({n, d, r});

    std::atomic<size_t> next{0};
    std::vector<std::string> fail(cases.size());
    auto work = [&] {
        for (size_t i; (i = next.fetch_add(1)) < cases.size();) {
            const QCase& c = cases[i];
            std::ostringstream w;
            for (Family f : {Family::cubed, Family::squared}) {
                MicroscopeReport rep = microscope_report(c, f);
                if (rep.all_ok()) continue;
                w << " " << family_name(f) << ":";
                if (!rep.bailey_plus) w << " bailey+";
                if (!rep.bailey_minus) w << " bailey-";
                if (!rep.pairing_ok) w << " pairing";
                if (!rep.reflection_ok) w << " reflection";
                if (!rep.parametric_ok.holds) w << " parametric";
                if (!rep.consistency_ok) w << " consistency";
            }
            if (!w.str().empty()) fail[i] = case_tag(c) + w.str();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers(); ++t) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    for (const std::string& f : fail)
        if (!f.empty()) return {false, f};
    return {true, std::to_string(cases.size()) + " cases, all checks true"};
}

// 4: the finite product on the transformation side equals the closed
// prefactor exactly (polynomial identity, not a congruence) across the grid.
Verdict prefactor_identity() {
    long count = 0;
    for (const EnumeratedCase& ec : enumerate_cases(grid("T1"))) {
        if (!ec.skip_reason.empty()) continue;
        QCase c{*ec.params.n, *ec.params.d, *ec.params.r};
        if (bailey_rhs_product(c) != closed_prefactor(c))
            return {false, "mismatch at " + case_tag(c)};
        ++count;
    }
    return {count > 0, std::to_string(count) + " cases, exact equality"};
}

// 5: every prime-power statement for odd primes up to 47 at e = 3.
Verdict prime_power_suite() {
    static const char* const ids[] = {
        "B2",     "E2",     "F2",     "SW-1/2", "SW-1/3", "SW-1/4",
        "EQ7-2",  "EQ7-4",  "EQ7-6",  "COR3-1", "COR3-2", "COR3-3",
        "COR3-4", "COR4-1", "COR4-2", "COR4-3", "COR4-4", "HE"};
    long held = 0, inapplicable = 0;
    for (const char* id : ids) {
        long held_here = 0;
        for (long p = 3; p <= 47; p += 2) {
            if (!is_small_prime(p)) continue;
            Params ps;
            ps.p = p;
            ps.e = 3;
            CaseRecord rec = run_statement(id, ps);
            if (rec.outcome == "failed")
                return {false, std::string(id) + " failed at p=" + std::to_string(p) +
                                   " residue " + rec.residue};
            if (rec.outcome == "held") {
                ++held;
                ++held_here;
            } else {
                ++inapplicable;
            }
        }
        if (held_here == 0) return {false, std::string(id) + " never applicable"};
    }
    std::ostringstream d;
    d << held << " held, " << inapplicable << " inapplicable, 0 failed";
    return {true, d.str()};
}

// 6: gamma functional equation and reflection, exact in Z/p^e.
Verdict gamma_properties() {
    long checks = 0;
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        for (int e = 1; e <= 3; ++e) {
            PadicContext ctx(p, e);
            std::vector<Rational> xs;
            for (long m = 1; m <= 2 * p; ++m) xs.emplace_back(m);
            for (long den : {2L, 3L, 4L, 5L, 7L}) {
                if (den % p == 0) continue;
                for (long num = -2 * p; num <= 2 * p; ++num) {
                    Rational x(num, den);
                    x.canonicalize();
                    xs.push_back(x);
                }
            }
            for (const Rational& x : xs) {
                const Integer g0 = gamma_p(ctx, x);
                const long v = (x == 0) ? 1 : valuation(x, p);
                const Rational step = (v > 0 ? Rational(-1) : -x) * g0;
                if (gamma_p(ctx, x + 1) != mod_reduce(step, ctx.pe))
                    return {false, "functional equation broke at p=" + std::to_string(p) +
                                       " x=" + x.get_str()};
                const Rational prod = Rational(g0) * gamma_p(ctx, Rational(1) - x);
                if (mod_reduce(prod, ctx.pe) !=
                    mod_reduce(Rational(parity_sign(a_p(x, p))), ctx.pe))
                    return {false, "reflection broke at p=" + std::to_string(p) +
                                       " x=" + x.get_str()};
                checks += 2;
            }
        }
    }
    return {true, std::to_string(checks) + " exact identities"};
}

// 7: the q = +-1 bridge for small primes.
Verdict bridge() {
    for (long p : {3L, 5L, 7L, 11L})
        if (!verify_q_p_bridge(p))
            return {false, "divisibility failed at p=" + std::to_string(p)};
    return {true, "p^2 | N(1) and p^3 | N(-1) for p in {3,5,7,11}"};
}

// 8: corrupting any single summand exponent must be caught with a witness.
Verdict negative_control() {
    long rejected = 0;
    for (const char* id : {"T1", "T2"})
        for (const CorruptionPoint& pt : corruption_points()) {
            CongruenceVerdict v = run_corrupted(id, {5, 2, 1}, pt);
            if (v.holds || !v.coprimality_ok || v.residue.is_zero())
                return {false, std::string(id) + " corruption slipped through"};
            ++rejected;
        }
    return {true, std::to_string(rejected) + " corrupted fixtures rejected, nonzero residues"};
}

// 9: a serial rerun of the criterion-1 sweep reproduces the parallel
// canonical report byte for byte.
Verdict determinism(const Report& first) {
    SweepSpec s = grid("T1");
    s.jobs = 1;
    Report second = run_sweep(s);
    const bool same = canonical_json(first) == canonical_json(second);
    return {same, same ? "canonical reports byte-identical (parallel vs serial)"
                       : "canonical reports differ"};
}

}  // namespace

int main() {
    struct Row {
        const char* name;
        std::function<Verdict()> run;
        double budget;  // seconds; 0 = no stated budget
    };
    Report first_sweep;
    const std::vector<Row> rows = {
        {"cubed-family sweep", [&] { return cubed_sweep(first_sweep); }, 600},
        {"squared-family sweep + sharp multiplicity", squared_sweep, 0},
        {"auxiliary-parameter suite", microscope_suite, 300},
        {"prefactor product identity", prefactor_identity, 0},
        {"prime-power suite", prime_power_suite, 60},
        {"gamma property suite", gamma_properties, 0},
        {"q-to-p bridge", bridge, 0},
        {"negative control", negative_control, 0},
        {"determinism", [&] { return determinism(first_sweep); }, 0},
    };

    int failed = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v = rows[i].run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (rows[i].budget > 0 && secs > rows[i].budget) {
            v.pass = false;
            v.detail += " [over budget]";
        }
        std::printf("%s  criterion %zu: %-42s %s  (%.1fs)\n", v.pass ? "pass" : "FAIL",
                    i + 1, rows[i].name, v.detail.c_str(), secs);
        std::fflush(stdout);
        if (!v.pass) ++failed;
    }
    std::printf(failed ? "%d of 9 criteria failed\n" : "all %d criteria passed\n",
                failed ? failed : 9);
    return failed ? 1 : 0;
}
