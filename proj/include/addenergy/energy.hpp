#pragma once

#include <cstdint>
#include <map>

#include "addenergy/int_set.hpp"

namespace addenergy {

using EnergyValue = BigInt;

/**
 * Difference function of a finite set.
 *
 * Only positive differences are stored; d(x) = d(-x) for x != 0 and
 * d(0) = n are answered on read.
 */
struct DifferenceProfile {
    std::size_t n = 0;
    std::map<BigInt, std::uint64_t> positive; // x > 0 -> d+(x) >= 1

    std::uint64_t d_plus(const BigInt& x) const;
    std::uint64_t d(const BigInt& x) const;

    friend bool operator==(const DifferenceProfile&, const DifferenceProfile&) = default;
};

// Number of (a1,a2,a3,a4) in A^4 with a1+a2 = a3+a4, counted as the sum of
// squared multiplicities of the ordered-pair sum multiset.
EnergyValue energy_oracle(const IntSet& a);

DifferenceProfile difference_profile(const IntSet& a);

// n^2 + 2 * sum d+(x)^2
EnergyValue energy_from_profile(const DifferenceProfile& p);

// Energy of an n-term arithmetic progression, the largest possible for n elements.
EnergyValue max_energy(std::uint64_t n);

// {a*x + b : x in A}; a must be nonzero.
IntSet affine_image(const IntSet& a, const BigInt& scale, const BigInt& shift);

/**
 * Energy of A u {a_new} from the energy of A when a_new exceeds max(A).
 *
 * Each new difference a_new - a_j is distinct, so its multiplicity goes
 * from t_j = d+(a_new - a_j) to t_j + 1 and
 *   E(A') = E(A) + 4n + 4 * sum t_j + 1.
 */
EnergyValue incremental_energy_extend(const IntSet& a, const EnergyValue& energy_a, const BigInt& a_new);

// Same, reading t_j from an already computed profile of A.
EnergyValue incremental_energy_extend(const IntSet& a, const DifferenceProfile& profile,
                                      const EnergyValue& energy_a, const BigInt& a_new);

/**
 * Canonical representative of the affine orbit of A: min 0, gcd of the
 * differences 1, and the lexicographically smaller of the set and its
 * reflection x -> max - x. Needs |A| >= 2.
 */
IntSet normalize(const IntSet& a);

} // namespace addenergy
