#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace addenergy {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Invariant battery for one module ("core", "constructions", "spectrum",
// "product", "group") or "all". Deterministic for a given seed.
std::vector<CheckResult> run_verification(const std::string& suite, std::uint64_t seed = 1);

std::vector<std::string> verification_suites();

} // namespace addenergy
