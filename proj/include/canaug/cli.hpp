// Command-line front end, callable in-process so the test suite can drive
// it. Exit codes: 0 success, 1 validation error, 2 I/O error, 3 budget
// refusal.

#ifndef CANAUG_CLI_HPP
#define CANAUG_CLI_HPP

#include <CLI11.hpp>
#include <iostream>

#include "augment.hpp"
#include "io.hpp"
#include "oracle.hpp"

namespace canaug {

namespace detail {

inline void print_stats(std::ostream& out, const RunStats& st, Mode mode) {
    out << "nodes expanded: " << st.nodes_expanded << "\n";
    out << "children generated: " << st.children_generated << "\n";
    out << "parent test passes: " << st.parent_test_pass
        << " / failures: " << st.parent_test_fail << "\n";
    out << "canonical form calls: " << st.canon_calls << "\n";
    if (st.duplicate_children)
        out << "children removed by canonical dedup: " << st.duplicate_children << "\n";
    if (st.duplicate_finals)
        out << "duplicate finals (unexpected): " << st.duplicate_finals << "\n";
    for (std::size_t l = 0; l < st.per_level.size(); ++l)
        if (st.per_level[l])
            out << (mode == Mode::column ? "level length " : "level dimension ") << l << ": "
                << st.per_level[l] << "\n";
}

}  // namespace detail

inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification of linear codes by canonical augmentation"};
    app.require_subcommand(1);

    // classify -----------------------------------------------------------
    auto* classify = app.add_subcommand("classify", "classify [n,k] codes up to equivalence");
    int q = 2, n = 0, k = 0, dmin = 1, dual_min = 1, divisible = 0, jobs = 1;
    std::string mode = "column", so = "none", seed_file, out_path, format = "count";
    bool stats = false;
    classify->add_option("--q", q, "field order (2, 3 or 4)")->required();
    classify->add_option("--n", n, "code length")->required();
    classify->add_option("--k", k, "code dimension")->required();
    classify->add_option("--dmin", dmin, "minimum distance target (>=)");
    classify->add_option("--dual-min", dual_min, "dual distance target (>=)");
    classify->add_option("--mode", mode, "growth direction")
        ->check(CLI::IsMember({"column", "row"}));
    classify->add_option("--so", so, "self-orthogonality form")
        ->check(CLI::IsMember({"none", "euclidean", "hermitian"}));
    classify->add_option("--divisible", divisible, "require all weights divisible by this");
    classify->add_option("--seed-file", seed_file, "start from the codes in this file");
    classify->add_option("--out", out_path, "write codes here (with --format gen)");
    classify->add_option("--format", format, "output codes or only the count")
        ->check(CLI::IsMember({"gen", "count"}));
    classify->add_option("--jobs", jobs, "worker threads");
    classify->add_flag("--stats", stats, "print search statistics");

    // oracle --------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force verification tools");
    auto* ocl = oracle_cmd->add_subcommand("classify", "exhaustive classification, tiny sizes");
    int oq = 2, on = 0, ok = 0, odmin = 1, odual = 1, odiv = 0;
    std::string oso = "none";
    ocl->add_option("--q", oq)->required();
    ocl->add_option("--n", on)->required();
    ocl->add_option("--k", ok)->required();
    ocl->add_option("--dmin", odmin);
    ocl->add_option("--dual-min", odual);
    ocl->add_option("--so", oso)->check(CLI::IsMember({"none", "euclidean", "hermitian"}));
    ocl->add_option("--divisible", odiv);
    auto* oeq = oracle_cmd->add_subcommand("equiv", "exhaustive equivalence of two codes");
    std::string file_a, file_b;
    oeq->add_option("fileA", file_a)->required();
    oeq->add_option("fileB", file_b)->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto to_so = [](const std::string& s) {
        if (s == "euclidean") return SOForm::euclidean;
        if (s == "hermitian") return SOForm::hermitian;
        return SOForm::none;
    };

    try {
        if (classify->parsed()) {
            RunContext ctx;
            ctx.q = q;
            ctx.n = n;
            ctx.k = k;
            ctx.mode = mode == "row" ? Mode::row : Mode::column;
            ctx.constraints.d = dmin;
            ctx.constraints.d_dual = dual_min;
            ctx.constraints.so = to_so(so);
            ctx.constraints.divisor = divisible;
            ctx.jobs = jobs;
            if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
            if (!seed_file.empty()) ctx.seeds = read_codes(seed_file);

            const RunResult res = generate(ctx);
            for (const auto& w : res.warnings) err << "warning: " << w << "\n";
            if (format == "gen") {
                if (out_path.empty())
                    write_codes(out, res.codes, q, n, k);
                else
                    write_codes(out_path, res.codes, q, n, k);
            }
            out << "classified " << res.codes.size() << " codes\n";
            if (stats) detail::print_stats(out, res.stats, ctx.mode);
            return 0;
        }
        if (ocl->parsed()) {
            ConstraintSet cs;
            cs.d = odmin;
            cs.d_dual = odual;
            cs.so = to_so(oso);
            cs.divisor = odiv;
            const auto res = oracle::classify_exhaustive(oq, on, ok, cs);
            out << "classified " << res.representatives.size() << " codes\n";
            return 0;
        }
        if (oeq->parsed()) {
            const auto a = read_codes(file_a);
            const auto b = read_codes(file_b);
            if (a.empty() || b.empty()) throw IoError("equiv: input files must contain a code");
            out << (oracle::equivalent_bruteforce(a[0], b[0]) ? "equivalent" : "inequivalent")
                << "\n";
            return 0;
        }
    } catch (const BudgetError& e) {
        err << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace canaug

#endif
