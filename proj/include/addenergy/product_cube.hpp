#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addenergy/constructions.hpp"
#include "addenergy/energy.hpp"

namespace addenergy {

/**
 * Cartesian product of coordinate factor sets over the alphabet
 * {0, ..., M-1}, added componentwise without wraparound. The product is
 * never materialized except by the oracle below.
 */
class ProductSet {
public:
    ProductSet(BigInt alphabet, std::vector<IntSet> factors);

    const BigInt& alphabet() const { return alphabet_; }
    const std::vector<IntSet>& factors() const { return factors_; }
    std::size_t dimension() const { return factors_.size(); }
    BigInt cardinality() const;

private:
    BigInt alphabet_;
    std::vector<IntSet> factors_;
};

// Product of the factor energies.
EnergyValue product_energy(const ProductSet& p);

// Quadruple count over the materialized tuples; refuses products above `cap`.
EnergyValue product_energy_oracle(const ProductSet& p, std::uint64_t cap = 10'000);

// Energy of an explicit set of integer vectors of equal length.
EnergyValue tuple_set_energy(const std::vector<std::vector<std::int64_t>>& tuples);

struct CubeExponentReport {
    unsigned k = 0;
    EnergyValue full_cube_energy;      // materialized count for {0,1}^k
    bool exhaustive = false;           // k <= 3
    long double max_exponent = 0;      // max log E(A) / log |A| over |A| >= 2
    std::size_t argmax_size = 0;
    EnergyValue argmax_energy;
    std::uint64_t subsets_checked = 0;
    long double log2_6 = 0;
};

CubeExponentReport cube_energy_exponent(unsigned k);

struct RatioChain {
    std::size_t w = 0;
    std::size_t n = 0;
    std::vector<IntSet> factor_sets;          // A_1, ..., A_L
    std::vector<ProductSet> sets;             // X_i = A_1 x ... x A_1 x A_i
    std::vector<EnergyValue> energies;        // E(X_i)
    std::vector<Rational> ratios;             // E(X_{i+1}) / E(X_i)
    Rational bound;                           // 1 + 360 / w^3
    std::size_t target_length = 0;           // floor(w^3 / 30)
    BigInt start_target;
    std::vector<BigInt> misses;               // targets the builder could not reach
};

/**
 * Product sets of equal size whose energies have consecutive ratios
 * (E + 4) / E. Factor energies run through consecutive +4 targets from
 * max(ceil(w^3/90), 2w^2 - w); the chain stops at the first target the
 * builder misses or at floor(w^3/30) sets.
 */
RatioChain ratio_chain(std::size_t w, std::size_t n, const BuildOptions& options = {});

// Distinct energies of w-element subsets of {0, ..., M-1}.
std::vector<EnergyValue> factor_energies(std::uint64_t alphabet, std::size_t w);

struct MinRatioReport {
    std::vector<EnergyValue> factor_energies;
    std::vector<EnergyValue> products; // distinct, ascending
    std::optional<Rational> min_ratio; // empty when fewer than two products
};

// Smallest consecutive ratio among energies of n-fold products of
// w-subsets of {0, ..., M-1}. Requires w <= M <= 5 and n <= 4.
MinRatioReport min_ratio_empirical(std::uint64_t alphabet, std::size_t n, std::size_t w);

} // namespace addenergy
