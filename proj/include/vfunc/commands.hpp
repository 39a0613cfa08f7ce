#ifndef VFUNC_COMMANDS_HPP
#define VFUNC_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vfunc/codec.hpp"
#include "vfunc/error.hpp"

namespace vfunc::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kValidation = 2,
    kParse = 3,
    kDisagreement = 4,
};

/// Exit code for a library error: ParseError -> kParse, everything that
/// rejects the field or the pair -> kValidation, anything else -> kInternal.
int exit_code_for(ErrorKind kind) noexcept;

struct CommandResult {
    int exit_code = kOk;
    std::string output;  // stdout payload
    std::string error;   // stderr message, empty on success
};

struct SweepRow {
    std::string c;  // F_q coordinates of the varied coefficient
    VResult formula;
    VResult oracle;
    bool agree = false;
    std::string fingerprint;
};

struct SweepReport {
    int p = 0;
    int n = 0;
    std::vector<int> modulus;
    FqElem a;
    std::vector<SweepRow> rows;
    bool filtration_constant = false;
    bool v_constant = false;
    std::vector<std::string> exceptional_c;  // rows with v != p
    std::string minus_a_to_the_p;
    std::string minus_a_squared;
};

/// One CSV row "g1,g2,v_formula,v_oracle,agree,s,fingerprint" (quoted where needed).
std::string csv_header();

CommandResult cmd_v(const std::string& job_text, const std::string& format = "json");
CommandResult cmd_filtration(const std::string& job_text);

/// g1 = t^-(p^2-1), g2 = c t^-(p^2-1) + t^-1 with a = w, for every c outside F_p.
SweepReport counterexample_report(int p, int n, std::optional<std::vector<int>> modulus, unsigned threads = 0);
json sweep_report_to_json(const SweepReport& report);
CommandResult cmd_counterexample(int p, int n, std::optional<std::vector<int>> modulus, unsigned threads = 0);

/// `count` random valid pairs; row k depends only on (seed, k).
CommandResult cmd_sweep(int p, int n, int max_degree, std::uint64_t seed, int count,
                        std::optional<std::vector<int>> modulus = std::nullopt, unsigned threads = 0);

}  // namespace vfunc::cli

#endif  // VFUNC_COMMANDS_HPP
