#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addenergy/energy.hpp"

namespace addenergy {

struct SpectrumEntry {
    EnergyValue energy;
    IntSet witness; // normalized, lexicographically first with this energy
};

/**
 * Attainable energies of n-element integer sets, searched over normalized
 * sets (min 0, difference gcd 1, reflection-canonical) of diameter at most
 * `diameter_bound`. `complete` refers to that searched region only.
 */
struct EnergySpectrum {
    std::size_t n = 0;
    std::uint64_t diameter_bound = 0;
    std::vector<SpectrumEntry> entries; // ascending energy
    bool complete = false;
    std::uint64_t visited = 0; // normalized sets evaluated

    std::vector<EnergyValue> energies() const;
};

struct SpectrumOptions {
    std::uint64_t work_budget = 50'000'000;
    unsigned threads = 1;
};

// Upper estimate of candidate subsets: C(diameter_bound, n-1), saturating.
std::uint64_t spectrum_work_estimate(std::size_t n, std::uint64_t diameter_bound);

// Throws PreconditionError for n outside [2,12] or diameter_bound < n-1,
// BudgetExceeded when the estimate exceeds options.work_budget.
EnergySpectrum enumerate_spectrum(std::size_t n, std::uint64_t diameter_bound, const SpectrumOptions& options = {});

struct SpectrumGap {
    EnergyValue from;
    EnergyValue to;
    BigInt gap;
    bool flagged; // gap > 4 with both ends inside theorem_interval(n)
};

std::vector<SpectrumGap> spectrum_gaps(const EnergySpectrum& s);

// Every energy congruent to n mod 4.
bool residue_check(const EnergySpectrum& s);

// Tick chart of the attained energies with gaps > 4 highlighted.
std::string spectrum_svg(const EnergySpectrum& s);

} // namespace addenergy
