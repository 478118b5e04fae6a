#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "report.hpp"

namespace shufcompat::cli {

/// Bad flag values detected after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string perm;
    std::string perm2;
    bool left = false;
    bool right = false;
    std::string stat;
    std::string notion;
    int max_size = 6;
    int term_size = 5;
    int n = 0;
    std::string expr;
    int degree = 6;
    std::string basis = "F";
    int pairs = 200;
    std::string generators;
    bool m_binomial = false;
    int cap = -1;
    std::string preset = "epk";
    std::string lambda;
};

Report cmd_stats(const Options& o);
Report cmd_shuffles(const Options& o);
Report cmd_certify(const Options& o);
Report cmd_lacunar(const Options& o);
Report cmd_qsym_eval(const Options& o);
Report cmd_qsym_check(const Options& o, std::uint64_t seed);
Report cmd_kernel(const Options& o);
Report cmd_ideal_matrix(const Options& o);
Report cmd_enriched_gamma(const Options& o);
Report cmd_enriched_kpoly(const Options& o);
Report cmd_enriched_prodcheck(const Options& o);
Report cmd_enriched_lindep(const Options& o);
Report cmd_tables_paper(const Options& o);

}  // namespace shufcompat::cli
