#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "addenergy/energy.hpp"

namespace addenergy {

using Decimal = boost::multiprecision::cpp_dec_float_100;
using Residues = std::vector<std::uint64_t>;

// Direct product of cyclic groups Z_{m_1} x ... x Z_{m_r}.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::uint64_t> cyclic_orders);

    const std::vector<std::uint64_t>& cyclic_orders() const { return orders_; }
    BigInt order() const;
    std::size_t rank() const { return orders_.size(); }

    bool is_element(const Residues& x) const;
    Residues add(const Residues& x, const Residues& y) const;

    // Direct product of this group with another (orders concatenated).
    GroupSpec times(const GroupSpec& other) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    std::vector<std::uint64_t> orders_;
};

class GroupSet {
public:
    GroupSet(GroupSpec group, std::vector<Residues> elements);

    const GroupSpec& group() const { return group_; }
    const std::vector<Residues>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

private:
    GroupSpec group_;
    std::vector<Residues> elems_; // sorted, distinct
};

GroupSet full_group(const GroupSpec& g);

// {(a, b) : a in A, b in B} in the product group.
GroupSet group_product(const GroupSet& a, const GroupSet& b);

// r(x) = |{(a, a') in A^2 : a + a' = x}| over the support of A + A.
struct SumProfile {
    std::map<Residues, std::uint64_t> counts;

    std::uint64_t total() const;    // |A|^2
    EnergyValue energy() const;     // sum of r(x)^2
    std::size_t sumset_size() const { return counts.size(); }
};

SumProfile sum_profile(const GroupSet& a);

// Energy under group addition; |A| <= 10^4.
EnergyValue group_energy(const GroupSet& a);

// {(x, x^2 mod p)} in Z_p x Z_p for an odd prime p.
GroupSet sidon_parabola(std::uint64_t p);

// No two distinct unordered pairs (repetition allowed) share a sum; |A| <= 10^3.
bool is_sidon(const GroupSet& a);

bool is_prime(std::uint64_t p);

/**
 * The Sidon-product set A_k = S^k x G^(n-k) in (Z_p x Z_p)^n, where S is
 * the parabola (|S| = p) and G = Z_p x Z_p (M = p^2). Size and energy are
 * exact integers via multiplicativity; alpha is exact since
 * |A_k| = p^(2n-k) and |G^n| = p^(2n).
 */
struct TradeoffPoint {
    unsigned k = 0;
    unsigned n = 0;
    std::uint64_t p = 0;
    BigInt size;              // |A_k|
    BigInt group_order;       // |G^n|
    EnergyValue energy;       // E(A_k)
    Rational alpha;           // log|A_k| / log|G^n|
    Decimal delta;            // log E / log|A_k| - 2
    Decimal bound;            // 1 / (2 - delta)
    Decimal bound_gap;        // |alpha - 1/(2 - delta)|
    bool cauchy_holds = false; // |A_k|^4 <= |G^n| * E(A_k), i.e. 4 alpha <= 1 + alpha (2 + delta)
};

TradeoffPoint tradeoff_point(unsigned k, unsigned n, std::uint64_t p);

// |A|^4 <= |A + A| * E(A), and |A|^4 <= |G| * E(A) (the alpha/delta form).
bool cauchy_bound_check(const GroupSet& a);

// tradeoff_point(k, n, p) for k = 0..n; n <= 64, p <= 10^4.
std::vector<TradeoffPoint> density_curve(unsigned n, std::uint64_t p, unsigned threads = 1);

std::string decimal_string(const Decimal& x, int digits = 30);

} // namespace addenergy
