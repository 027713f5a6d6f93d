#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace addenergy {

using BigInt = mpz_class;
using Rational = mpq_class;

/**
 * Finite set of distinct integers, stored ascending.
 *
 * Construction sorts and drops repeated values, so every IntSet is a
 * set in the mathematical sense regardless of how it was built.
 */
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<long> values);
    explicit IntSet(std::vector<BigInt> values);

    static IntSet range(long first, long last); // inclusive

    std::span<const BigInt> elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const BigInt& operator[](std::size_t i) const { return elems_[i]; }
    const BigInt& min() const { return elems_.front(); }
    const BigInt& max() const { return elems_.back(); }
    BigInt diameter() const;

    bool contains(const BigInt& x) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    // Elements as int64 when every element satisfies |x| < 2^62, so that
    // pairwise sums and differences cannot overflow.
    std::optional<std::vector<std::int64_t>> to_small() const;

    std::string to_string() const; // "{0, 1, 3}"

    friend bool operator==(const IntSet& a, const IntSet& b) { return a.elems_ == b.elems_; }
    // Lexicographic on the ascending element lists.
    friend bool operator<(const IntSet& a, const IntSet& b);

private:
    std::vector<BigInt> elems_;
};

bool fits_small(const BigInt& x);

// num/den in lowest terms (gmpxx does not canonicalize on construction).
Rational make_ratio(const BigInt& num, const BigInt& den);

} // namespace addenergy
