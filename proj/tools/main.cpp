#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"
#include "shufcompat/execution.hpp"

using namespace shufcompat;
using namespace shufcompat::cli;

namespace {

int emit(const Report& report, OutputFormat format, const std::string& out_dir, const std::string& stem) {
    std::string body = render(report, format);
    std::cout << body;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const char* ext = format == OutputFormat::json ? ".json" : format == OutputFormat::tsv ? ".tsv" : ".txt";
        std::ofstream file(std::filesystem::path(out_dir) / (stem + ext));
        if (!file) {
            std::cerr << "error: cannot write report into " << out_dir << "\n";
            return 2;
        }
        file << body;
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation statistics, shuffle compatibility and quasisymmetric checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output = "json";
    std::uint64_t seed = 20240601;
    int jobs = 0;
    std::string out_dir;
    app.add_option("--output", output, "Report format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--jobs", jobs, "Worker cap for parallel kernels (0 = runtime default)");
    app.add_option("--out-dir", out_dir, "Also write the report into this directory")
        ->envname("SHUFCOMPAT_OUTPUT_DIR");

    Options opt;
    std::string stem;
    std::function<Report()> run;

    // stats
    auto* stats = app.add_subcommand("stats", "All statistics of a permutation");
    stats->add_option("perm", opt.perm, "Permutation, e.g. 4,1,3,9,6,8")->required();
    stats->callback([&] { stem = "stats"; run = [&] { return cmd_stats(opt); }; });

    // shuffles
    auto* shuf = app.add_subcommand("shuffles", "Shuffles of two disjoint permutations");
    shuf->add_option("pi", opt.perm, "First permutation")->required();
    shuf->add_option("sigma", opt.perm2, "Second permutation")->required();
    auto* left_flag = shuf->add_flag("--left", opt.left, "Left shuffles only");
    shuf->add_flag("--right", opt.right, "Right shuffles only")->excludes(left_flag);
    shuf->add_option("--stat", opt.stat, "Also report the statistic multiset");
    shuf->callback([&] { stem = "shuffles"; run = [&] { return cmd_shuffles(opt); }; });

    // certify
    auto* cert = app.add_subcommand("certify", "Brute-force shuffle-compatibility certification");
    cert->add_option("--notion", opt.notion, "shuffle, left, right, weak-left, weak-right, LR, head-graft")
        ->required();
    cert->add_option("--stat", opt.stat, "Statistic name")->required();
    cert->add_option("--max-size", opt.max_size, "Total size bound")->capture_default_str();
    cert->callback([&] { stem = "certify"; run = [&] { return cmd_certify(opt); }; });

    // lacunar
    auto* lac = app.add_subcommand("lacunar", "Nonempty lacunar subsets of [n]");
    lac->add_option("--n", opt.n, "n")->required();
    lac->callback([&] { stem = "lacunar"; run = [&] { return cmd_lacunar(opt); }; });

    // qsym
    auto* qsym = app.add_subcommand("qsym", "Quasisymmetric function arithmetic");
    qsym->require_subcommand(1);
    auto* qeval = qsym->add_subcommand("eval", "Evaluate an F/M expression");
    qeval->add_option("expr", opt.expr, "Expression, e.g. \"(F[1,2] - F[3]) < F[1]\"")->required();
    qeval->add_option("--degree", opt.degree, "Degree bound")->capture_default_str();
    qeval->add_option("--basis", opt.basis, "Output basis")->check(CLI::IsMember({"F", "M"}))->capture_default_str();
    qeval->callback([&] { stem = "qsym-eval"; run = [&] { return cmd_qsym_eval(opt); }; });
    auto* qcheck = qsym->add_subcommand("check", "Antipode identities on seeded random pairs");
    qcheck->add_option("--pairs", opt.pairs, "Number of random pairs")->capture_default_str();
    qcheck->add_option("--max-size", opt.term_size, "Largest term size per element")->capture_default_str();
    qcheck->callback([&] {
        stem = "qsym-check";
        run = [&] { return cmd_qsym_check(opt, seed); };
    });

    // kernel
    auto* kern = app.add_subcommand("kernel", "Kernel of a descent statistic in degree n");
    kern->add_option("--stat", opt.stat, "Descent statistic")->required();
    kern->add_option("--n", opt.n, "Degree")->required();
    kern->add_option("--generators", opt.generators, "Compare with the arrow-relation span (Epk only)")
        ->check(CLI::IsMember({"f", "m"}));
    kern->add_flag("--m-binomial", opt.m_binomial, "Search for a two-term M certificate");
    kern->callback([&] { stem = "kernel"; run = [&] { return cmd_kernel(opt); }; });

    // ideal-matrix
    auto* ideal = app.add_subcommand("ideal-matrix", "Ideal verdicts for every descent statistic and operation");
    ideal->add_option("--max-degree", opt.degree, "Total degree bound")->capture_default_str();
    ideal->callback([&] { stem = "ideal-matrix"; run = [&] { return cmd_ideal_matrix(opt); }; });

    // enriched
    auto* enr = app.add_subcommand("enriched", "Enriched P-partitions and the K polynomials");
    enr->require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "Size")->required();
        sub->add_option("--cap", opt.cap, "Largest finite value V (default n)");
    };
    auto* eg = enr->add_subcommand("gamma", "Gamma of permutations against K_{n, Epk}");
    add_common(eg);
    eg->add_option("--perm", opt.perm, "A single permutation (default: all of size n)");
    eg->add_option("--preset", opt.preset, "ordinary, stembridge, petersen, epk")->capture_default_str();
    eg->callback([&] { stem = "enriched-gamma"; run = [&] { return cmd_enriched_gamma(opt); }; });
    auto* ek = enr->add_subcommand("kpoly", "K_{n, lambda} polynomials");
    add_common(ek);
    ek->add_option("--lambda", opt.lambda, "Subset of [n], e.g. 1,3 (default: every member of L_n)");
    ek->callback([&] { stem = "enriched-kpoly"; run = [&] { return cmd_enriched_kpoly(opt); }; });
    auto* ep = enr->add_subcommand("prodcheck", "Product rules for all standard pairs of total size <= n");
    add_common(ep);
    ep->callback([&] { stem = "enriched-prodcheck"; run = [&] { return cmd_enriched_prodcheck(opt); }; });
    auto* el = enr->add_subcommand("lindep", "Ranks of the K_{k, lambda} families for k <= n");
    add_common(el);
    el->callback([&] { stem = "enriched-lindep"; run = [&] { return cmd_enriched_lindep(opt); }; });

    // tables
    auto* tables = app.add_subcommand("tables", "Regenerate reference tables");
    tables->require_subcommand(1);
    auto* tpaper = tables->add_subcommand("paper", "Every reference example with its computed value");
    tpaper->add_option("--max-degree", opt.degree, "Degree bound for the ideal matrix")->capture_default_str();
    tpaper->callback([&] { stem = "tables-paper"; run = [&] { return cmd_tables_paper(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_worker_limit(jobs);
    OutputFormat format = output == "tsv" ? OutputFormat::tsv : output == "text" ? OutputFormat::text : OutputFormat::json;
    try {
        return emit(run(), format, out_dir, stem);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
