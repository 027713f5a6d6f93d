#include "addenergy/energy.hpp"

#include <algorithm>

#include "addenergy/errors.hpp"

namespace addenergy {

namespace {

template <typename T>
EnergyValue sum_of_squared_runs(std::vector<T>& sums)
{
    std::sort(sums.begin(), sums.end());
    EnergyValue total = 0;
    std::size_t i = 0;
    while (i < sums.size()) {
        std::size_t j = i + 1;
        while (j < sums.size() && sums[j] == sums[i]) {
            ++j;
        }
        const unsigned long run = j - i;
        total += BigInt(run) * run;
        i = j;
    }
    return total;
}

} // namespace

std::uint64_t DifferenceProfile::d_plus(const BigInt& x) const
{
    auto it = positive.find(x);
    return it == positive.end() ? 0 : it->second;
}

std::uint64_t DifferenceProfile::d(const BigInt& x) const
{
    if (x == 0) {
        return n;
    }
    return d_plus(abs(x));
}

EnergyValue energy_oracle(const IntSet& a)
{
    const std::size_t n = a.size();
    if (auto small = a.to_small()) {
        std::vector<std::int64_t> sums;
        sums.reserve(n * n);
        for (auto x : *small) {
            for (auto y : *small) {
                sums.push_back(x + y);
            }
        }
        return sum_of_squared_runs(sums);
    }
    std::vector<BigInt> sums;
    sums.reserve(n * n);
    for (const auto& x : a) {
        for (const auto& y : a) {
            sums.emplace_back(x + y);
        }
    }
    return sum_of_squared_runs(sums);
}

DifferenceProfile difference_profile(const IntSet& a)
{
    DifferenceProfile p;
    p.n = a.size();
    for (std::size_t j = 1; j < a.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            ++p.positive[BigInt(a[j] - a[i])];
        }
    }
    return p;
}

EnergyValue energy_from_profile(const DifferenceProfile& p)
{
    EnergyValue e = BigInt(p.n) * p.n;
    for (const auto& [x, count] : p.positive) {
        e += 2 * BigInt(count) * count;
    }
    return e;
}

EnergyValue max_energy(std::uint64_t n)
{
    if (n == 0) {
        return 0;
    }
    const BigInt m(n);
    return BigInt(m * m + (m - 1) * m * (2 * m - 1) / 3);
}

IntSet affine_image(const IntSet& a, const BigInt& scale, const BigInt& shift)
{
    require(scale != 0, "affine_image: scale must be nonzero");
    std::vector<BigInt> out;
    out.reserve(a.size());
    for (const auto& x : a) {
        out.emplace_back(scale * x + shift);
    }
    return IntSet(std::move(out));
}

EnergyValue incremental_energy_extend(const IntSet& a, const DifferenceProfile& profile,
                                      const EnergyValue& energy_a, const BigInt& a_new)
{
    require(!a.empty(), "incremental_energy_extend: set must be nonempty");
    require(a_new > a.max(), "incremental_energy_extend: new element must exceed max(A)");
    BigInt t_sum = 0;
    for (const auto& x : a) {
        t_sum += profile.d_plus(BigInt(a_new - x));
    }
    return EnergyValue(energy_a + 4 * BigInt(a.size()) + 4 * t_sum + 1);
}

EnergyValue incremental_energy_extend(const IntSet& a, const EnergyValue& energy_a, const BigInt& a_new)
{
    return incremental_energy_extend(a, difference_profile(a), energy_a, a_new);
}

IntSet normalize(const IntSet& a)
{
    require(a.size() >= 2, "normalize: need at least two elements");
    BigInt g = 0;
    for (const auto& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(x - a.min()).get_mpz_t());
    }
    const IntSet forward = affine_image(a, 1, -a.min());
    std::vector<BigInt> fwd, rev;
    for (const auto& x : forward) {
        fwd.emplace_back(x / g);
    }
    const BigInt top = fwd.back();
    for (const auto& x : fwd) {
        rev.emplace_back(top - x);
    }
    IntSet f(std::move(fwd));
    IntSet r(std::move(rev));
    return r < f ? r : f;
}

} // namespace addenergy
