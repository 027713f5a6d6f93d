#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace addenergy::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPreconditionFailed = 1,
    kBudgetExhausted = 2,
    kTargetUnreached = 3,
};

struct RunConfig {
    std::string subcommand;
    std::uint64_t work_budget = 50'000'000; // ADDENERGY_BUDGET overrides the default
    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::string output_format = "json";
    std::optional<std::string> plot_path;
};

// Parses `args` (without the program name), dispatches, and returns the exit
// status. Results go to `out`; diagnostics only to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace addenergy::cli
