#pragma once

#include <cstdint>
#include <optional>

#include "addenergy/energy.hpp"

namespace addenergy {

// {1, ..., n}
IntSet arithmetic_progression(std::uint64_t n);

// {1, ..., n-1} u {n+k}, 1 <= k <= n-2
IntSet shifted_ap(std::uint64_t n, std::uint64_t k);

// max_energy(n) - E(shifted_ap(n, k)) = 4nk - 2k^2 - 6k
EnergyValue energy_drop(std::uint64_t n, std::uint64_t k);

/**
 * A (possibly shifted) progression body followed by a lacunary tail.
 *
 * body = {1, ..., b-1, b+k} with b = n - j (k = 0 leaves the progression
 * intact), tail = {base^p, ..., base^(p+j-1)} with p the least exponent
 * such that base^p > base * max(body). Every difference touching the
 * tail is new, so each tail element adds exactly 4(size so far) + 1.
 */
struct StagedSet {
    std::size_t n = 0;
    std::size_t j = 0;
    std::uint64_t k = 0;
    BigInt base = 10;
    IntSet body;
    IntSet tail;

    IntSet elements() const;
};

StagedSet staged_set(std::size_t n, std::size_t j, std::uint64_t k, const BigInt& base = 10);

// E(staged_set(n, j, k)) from the drop formula and the tail increments.
EnergyValue staged_energy(std::size_t n, std::size_t j, std::uint64_t k);

// Positive sequence with x_{i+1} >= ratio * x_i.
class LacunarySeq {
public:
    // Throws PreconditionError unless `elements` is positive and ratio-lacunary.
    explicit LacunarySeq(IntSet elements, Rational ratio = 10);

    const IntSet& elements() const { return elems_; }
    const Rational& ratio() const { return ratio_; }
    std::size_t size() const { return elems_.size(); }

    static bool is_lacunary(const IntSet& elements, const Rational& ratio);

private:
    IntSet elems_;
    Rational ratio_;
};

// Replace x_{3i} by 2 x_{3i-1} - x_{3i-2} for i = 1..k (1-based). Each
// replacement turns one difference into a repeated one: energy +4.
IntSet lacunary_swap(const LacunarySeq& x, std::size_t k);

// Residue every attainable energy of an n-element integer set has mod 4.
unsigned mod4_residue(std::uint64_t n);

struct EnergyInterval {
    BigInt lo;
    BigInt hi;
    bool empty() const { return lo > hi; }
    bool contains(const BigInt& x) const { return lo <= x && x <= hi; }
};

// [2n^2 - n + 66, max_energy(floor(n/3)) - 66], as stated with the theorem.
// Empty for every n below 84.
EnergyInterval theorem_interval(std::uint64_t n);

// Targets build_with_target_energy accepts: from the Sidon floor 2n^2 - n up
// to the largest staged-set energy E(staged_set(n, 1, 0)).
EnergyInterval builder_domain(std::uint64_t n);

struct BuildOptions {
    std::uint64_t seed = 1;
    std::size_t local_search_iterations = 4000;
    BigInt base = 10;
};

struct BuildStages {
    std::size_t j = 0;
    std::uint64_t k = 0;
    std::size_t swaps = 0;
    std::size_t local_search_moves = 0; // 0 when the staged schedule hit exactly
};

/**
 * Result of the two-stage synthesizer. When `reached` is false the witness
 * is the closest set found and `energy` is its (oracle-verified) energy.
 */
struct BuildResult {
    bool reached = false;
    std::uint64_t n = 0;
    BigInt target;
    IntSet witness;
    EnergyValue energy;
    BuildStages stages;
};

/**
 * Set of n integers with additive energy exactly `target`.
 *
 * Stage 1 picks a staged set (tail size j, shift k) whose energy lies at
 * most 4 * floor(j/3) below the target; stage 2 applies the missing +4
 * lacunary swaps to the tail. If no (j, k) works, a seeded hill-climb over
 * the body elements is tried before giving up. Every reached witness is
 * re-checked with energy_oracle.
 */
BuildResult build_with_target_energy(std::uint64_t n, const BigInt& target, const BuildOptions& options = {});

// Distinct energies of all unswapped staged sets of size n (the coarse chain).
std::vector<EnergyValue> coarse_chain_energies(std::uint64_t n);

} // namespace addenergy
