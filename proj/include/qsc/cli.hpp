#pragma once

// Command-line front end.  Subcommand names and flags are part of the
// artifact's contract: cyclo, check, sweep, selftest.  Exit codes: 0 when
// nothing failed, 1 when a verdict failed, 2 on usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qsc/cyclotomic.hpp"
#include "qsc/registry.hpp"
#include "qsc/report.hpp"
#include "qsc/selftest.hpp"
#include "qsc/sweep.hpp"

namespace qsc {

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact verifier for cyclotomic q-congruences and their prime-power specializations"};
    app.require_subcommand(1);

    auto* cyclo = app.add_subcommand("cyclo", "print a cyclotomic polynomial");
    long cyclo_n = 0;
    bool cyclo_neg = false;
    cyclo->add_option("--n", cyclo_n, "index of the cyclotomic polynomial")->required();
    cyclo->add_flag("--neg", cyclo_neg, "print it with q replaced by -q");

    auto* check = app.add_subcommand("check", "verify a single statement instance");
    std::string check_id;
    long arg_n = 0, arg_d = 0, arg_r = 0, arg_s = 0, arg_p = 0;
    int arg_e = 3;
    check->add_option("--id", check_id, "statement id (see docs/statements.md)")->required();
    auto* opt_n = check->add_option("--n", arg_n, "order of the cyclotomic modulus");
    auto* opt_d = check->add_option("--d", arg_d, "arithmetic-progression step");
    auto* opt_r = check->add_option("--r", arg_r, "progression offset");
    auto* opt_s = check->add_option("--s", arg_s, "sign parameter, 1 or -1");
    auto* opt_p = check->add_option("--p", arg_p, "odd prime");
    auto* opt_e = check->add_option("--e", arg_e, "p-adic working precision");

    auto* sweep = app.add_subcommand("sweep", "verify a statement over a parameter grid");
    std::string sweep_id, sweep_out, sweep_format;
    SweepSpec spec;
    sweep->add_option("--id", sweep_id, "statement id")->required();
    sweep->add_option("--n-max", spec.n_max, "largest odd n to include")->required();
    sweep->add_option("--d-list", spec.d_list, "comma-separated steps d")->delimiter(',');
    sweep->add_option("--r-list", spec.r_list, "comma-separated offsets r")->delimiter(',');
    sweep->add_option("--p-max", spec.p_max, "largest prime for p-statements");
    sweep->add_option("--out", sweep_out, "report destination path")->required();
    sweep->add_option("--format", sweep_format, "report format")
        ->required()
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep->add_option("--jobs", spec.jobs, "worker threads");

    auto* self = app.add_subcommand("selftest", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        app.exit(help);
        return 0;
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (cyclo->parsed()) {
            if (cyclo_n <= 0) throw UsageError("--n must be positive");
            LaurentPoly phi = cyclotomic(cyclo_n);
            if (cyclo_neg) phi = phi.subst_q_negated();
            std::cout << "Phi_" << cyclo_n << (cyclo_neg ? "(-q) = " : "(q) = ")
                      << phi.str() << '\n';
            return 0;
        }
        if (check->parsed()) {
            Params ps;
            if (opt_n->count()) ps.n = arg_n;
            if (opt_d->count()) ps.d = arg_d;
            if (opt_r->count()) ps.r = arg_r;
            if (opt_s->count()) ps.s = arg_s;
            if (opt_p->count()) ps.p = arg_p;
            if (opt_e->count()) ps.e = arg_e;
            CaseRecord rec = run_statement(check_id, ps);
            Report rep;
            rep.statement = rec.statement;
            rep.cases.push_back(rec);
            std::cout << report_to_text(rep);
            return rec.outcome == "failed" ? 1 : 0;
        }
        if (sweep->parsed()) {
            spec.statement = sweep_id;
            Report rep = run_sweep(spec);
            std::ofstream out(sweep_out);
            if (!out) throw UsageError("cannot open output path: " + sweep_out);
            out << emit_report(rep, sweep_format);
            const ReportSummary s = summarize(rep);
            std::cout << "swept " << rep.statement << ": checked " << s.checked
                      << ", held " << s.held << ", failed " << s.failed
                      << ", inapplicable " << s.inapplicable << ", skipped "
                      << s.skipped << " -> " << sweep_out << '\n';
            return s.failed > 0 ? 1 : 0;
        }
        if (self->parsed()) return run_selftest(std::cout) ? 0 : 1;
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace qsc
