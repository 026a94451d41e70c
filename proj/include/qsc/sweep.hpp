#pragma once

// Case enumeration and sweep execution.  Enumeration is deterministic
// (lexicographic in n, d, r; primes ascending) and keeps hypothesis-violating
// combinations as skipped entries tagged with the violated hypothesis, so a
// sweep log doubles as an executable restatement of the statement's
// conditions.  Execution runs the independent cases on a bounded worker pool
// writing into preassigned slots, which makes parallel output identical to
// serial output.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "qsc/registry.hpp"
#include "qsc/report.hpp"

namespace qsc {

struct SweepSpec {
    std::string statement;
    long n_max = 0;
    std::vector<long> d_list = {2, 3, 4, 5, 6};
    std::vector<long> r_list = {-7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7};
    long p_max = 47;
    int e = 3;
    int jobs = 1;
};

// One grid point: either runnable parameters or a named skip reason.
struct EnumeratedCase {
    Params params;
    std::map<std::string, long> shown;  // parameters echoed for skipped rows
    std::string skip_reason;            // empty when the case is runnable
};

inline std::vector<EnumeratedCase> enumerate_cases(const SweepSpec& spec) {
    std::vector<EnumeratedCase> out;
    const StatementKind kind = statement_kind(spec.statement);

    auto sorted_unique = [](std::vector<long> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    if (kind == StatementKind::prime_power) {
        for (long p = 3; p <= spec.p_max; p += 2) {
            if (!is_small_prime(p)) continue;
            EnumeratedCase ec;
            ec.params.p = p;
            ec.params.e = spec.e;
            ec.shown = {{"e", spec.e}, {"p", p}};
            out.push_back(std::move(ec));
        }
        return out;
    }

    const std::vector<long> ds = sorted_unique(spec.d_list);
    const std::vector<long> rs = sorted_unique(spec.r_list);

    for (long n = 3; n <= spec.n_max; n += 2) {
        switch (kind) {
            case StatementKind::n_only: {
                EnumeratedCase ec;
                ec.params.n = n;
                ec.shown = {{"n", n}};
                out.push_back(std::move(ec));
                break;
            }
            case StatementKind::n_sign: {
                for (long s : {-1L, 1L}) {
                    if (std::find(rs.begin(), rs.end(), s) == rs.end()) continue;
                    const long d = spec.statement == "T3" ? 3 : 4;
                    EnumeratedCase ec;
                    ec.params.n = n;
                    ec.params.s = s;
                    ec.shown = {{"d", d}, {"n", n}, {"r", s}, {"s", s}};
                    if (const char* why = qcase_invalid_reason({n, d, s}))
                        ec.skip_reason = why;
                    out.push_back(std::move(ec));
                }
                break;
            }
            case StatementKind::q_grid: {
                for (long d : ds) {
                    for (long r : rs) {
                        EnumeratedCase ec;
                        ec.params.n = n;
                        ec.params.d = d;
                        ec.params.r = r;
                        ec.shown = {{"d", d}, {"n", n}, {"r", r}};
                        if (const char* why = qcase_invalid_reason({n, d, r}))
                            ec.skip_reason = why;
                        out.push_back(std::move(ec));
                    }
                }
                break;
            }
            case StatementKind::prime_power:
                break;  // handled above
        }
    }
    return out;
}

inline Report run_sweep(const SweepSpec& spec) {
    const std::vector<EnumeratedCase> cases = enumerate_cases(spec);
    Report rep;
    rep.statement = spec.statement;
    rep.cases.resize(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            try {
                if (!cases[i].skip_reason.empty()) {
                    CaseRecord rec;
                    rec.statement = spec.statement;
                    rec.parameters = cases[i].shown;
                    rec.outcome = "skipped";
                    rec.detail = cases[i].skip_reason;
                    rep.cases[i] = std::move(rec);
                } else {
                    rep.cases[i] = run_statement(spec.statement, cases[i].params);
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    return rep;
}

}  // namespace qsc
