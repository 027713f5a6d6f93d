#include "addenergy/product_cube.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "addenergy/errors.hpp"
#include "addenergy/spectrum.hpp"

namespace addenergy {

ProductSet::ProductSet(BigInt alphabet, std::vector<IntSet> factors)
    : alphabet_(std::move(alphabet))
    , factors_(std::move(factors))
{
    require(alphabet_ >= 2, "ProductSet: alphabet size must be at least 2");
    for (const auto& f : factors_) {
        require(!f.empty(), "ProductSet: factors must be nonempty");
        require(f.min() >= 0 && f.max() < alphabet_, "ProductSet: factor elements must lie in [0, M)");
    }
}

BigInt ProductSet::cardinality() const
{
    BigInt c = 1;
    for (const auto& f : factors_) {
        c *= static_cast<unsigned long>(f.size());
    }
    return c;
}

EnergyValue product_energy(const ProductSet& p)
{
    EnergyValue e = 1;
    for (const auto& f : p.factors()) {
        e *= energy_oracle(f);
    }
    return e;
}

EnergyValue tuple_set_energy(const std::vector<std::vector<std::int64_t>>& tuples)
{
    if (tuples.empty()) {
        return 0;
    }
    const std::size_t dim = tuples.front().size();
    std::vector<std::int64_t> lo(dim, INT64_MAX), radix(dim);
    std::vector<std::int64_t> hi(dim, INT64_MIN);
    for (const auto& t : tuples) {
        require(t.size() == dim, "tuple_set_energy: tuples must have equal length");
        for (std::size_t c = 0; c < dim; ++c) {
            lo[c] = std::min(lo[c], t[c]);
            hi[c] = std::max(hi[c], t[c]);
        }
    }
    BigInt space = 1;
    for (std::size_t c = 0; c < dim; ++c) {
        radix[c] = 2 * (hi[c] - lo[c]) + 1;
        space *= static_cast<long>(radix[c]);
    }
    // Each pair sum is keyed by its mixed-radix index; the encoding is
    // injective because every sum coordinate lies in [2lo, 2hi].
    auto code = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::uint64_t key = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            key = key * static_cast<std::uint64_t>(radix[c]) + static_cast<std::uint64_t>(a[c] + b[c] - 2 * lo[c]);
        }
        return key;
    };

    EnergyValue energy = 0;
    if (space <= (1u << 24)) {
        std::vector<std::uint32_t> counts(space.get_ui(), 0);
        std::uint64_t sumsq = 0;
        for (const auto& a : tuples) {
            for (const auto& b : tuples) {
                auto& c = counts[code(a, b)];
                sumsq += 2 * static_cast<std::uint64_t>(c) + 1;
                ++c;
            }
        }
        energy = static_cast<unsigned long>(sumsq);
        return energy;
    }

    std::vector<std::vector<std::int64_t>> sums;
    sums.reserve(tuples.size() * tuples.size());
    for (const auto& a : tuples) {
        for (const auto& b : tuples) {
            std::vector<std::int64_t> s(dim);
            for (std::size_t c = 0; c < dim; ++c) {
                s[c] = a[c] + b[c];
            }
            sums.push_back(std::move(s));
        }
    }
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 0; i < sums.size();) {
        std::size_t j = i + 1;
        while (j < sums.size() && sums[j] == sums[i]) {
            ++j;
        }
        energy += BigInt(static_cast<unsigned long>(j - i)) * static_cast<unsigned long>(j - i);
        i = j;
    }
    return energy;
}

EnergyValue product_energy_oracle(const ProductSet& p, std::uint64_t cap)
{
    require(p.cardinality() <= cap, "product_energy_oracle: product exceeds materialization cap");
    std::vector<std::vector<std::int64_t>> coords;
    for (const auto& f : p.factors()) {
        auto small = f.to_small();
        require(small.has_value(), "product_energy_oracle: factor elements too large to materialize");
        coords.push_back(*small);
    }
    std::vector<std::vector<std::int64_t>> tuples{{}};
    for (const auto& axis : coords) {
        std::vector<std::vector<std::int64_t>> next;
        next.reserve(tuples.size() * axis.size());
        for (const auto& t : tuples) {
            for (auto x : axis) {
                auto u = t;
                u.push_back(x);
                next.push_back(std::move(u));
            }
        }
        tuples = std::move(next);
    }
    return tuple_set_energy(tuples);
}

CubeExponentReport cube_energy_exponent(unsigned k)
{
    require(k >= 1, "cube_energy_exponent: k must be positive");
    CubeExponentReport r;
    r.k = k;
    r.log2_6 = std::log2(6.0L);
    const ProductSet cube(2, std::vector<IntSet>(k, IntSet{0, 1}));
    r.full_cube_energy = k <= 13 ? product_energy_oracle(cube) : product_energy(cube);
    if (k > 3) {
        return r;
    }
    r.exhaustive = true;
    const std::size_t points = std::size_t{1} << k;
    std::vector<std::vector<std::int64_t>> cube_points;
    for (std::size_t v = 0; v < points; ++v) {
        std::vector<std::int64_t> t(k);
        for (unsigned c = 0; c < k; ++c) {
            t[c] = (v >> c) & 1;
        }
        cube_points.push_back(std::move(t));
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << points); ++mask) {
        std::vector<std::vector<std::int64_t>> subset;
        for (std::size_t v = 0; v < points; ++v) {
            if ((mask >> v) & 1) {
                subset.push_back(cube_points[v]);
            }
        }
        if (subset.size() < 2) {
            continue;
        }
        ++r.subsets_checked;
        const EnergyValue e = tuple_set_energy(subset);
        const long double exponent = std::log(e.get_d()) / std::log(static_cast<long double>(subset.size()));
        if (exponent > r.max_exponent) {
            r.max_exponent = exponent;
            r.argmax_size = subset.size();
            r.argmax_energy = e;
        }
    }
    return r;
}

RatioChain ratio_chain(std::size_t w, std::size_t n, const BuildOptions& options)
{
    require(w >= 12, "ratio_chain: w must be at least 12");
    require(n >= 2, "ratio_chain: n must be at least 2");
    RatioChain chain;
    chain.w = w;
    chain.n = n;
    const BigInt ww(static_cast<unsigned long>(w));
    const BigInt cube = ww * ww * ww;
    chain.bound = Rational(1) + make_ratio(360, cube);
    chain.target_length = BigInt(cube / 30).get_ui();

    BigInt start = (cube + 89) / 90;
    start = std::max(start, BigInt(2 * ww * ww - ww));
    while (BigInt(start % 4) != w % 4) {
        ++start;
    }
    chain.start_target = start;

    const EnergyInterval domain = builder_domain(w);
    std::vector<EnergyValue> factor_energy;
    for (BigInt t = start; chain.factor_sets.size() < chain.target_length; t += 4) {
        if (!domain.contains(t)) {
            chain.misses.push_back(t);
            break;
        }
        BuildResult r = build_with_target_energy(w, t, options);
        if (!r.reached) {
            chain.misses.push_back(t);
            break;
        }
        chain.factor_sets.push_back(r.witness);
        factor_energy.push_back(r.energy);
    }
    if (chain.factor_sets.empty()) {
        return chain;
    }

    BigInt top = 0;
    for (const auto& a : chain.factor_sets) {
        top = std::max(top, a.max());
    }
    const BigInt alphabet = top + 1;
    const EnergyValue head = factor_energy.front();
    BigInt head_power;
    mpz_pow_ui(head_power.get_mpz_t(), head.get_mpz_t(), n - 1);
    for (std::size_t i = 0; i < chain.factor_sets.size(); ++i) {
        std::vector<IntSet> factors(n - 1, chain.factor_sets.front());
        factors.push_back(chain.factor_sets[i]);
        chain.sets.emplace_back(alphabet, std::move(factors));
        chain.energies.push_back(head_power * factor_energy[i]);
    }
    for (std::size_t i = 1; i < chain.energies.size(); ++i) {
        chain.ratios.push_back(make_ratio(chain.energies[i], chain.energies[i - 1]));
    }
    return chain;
}

std::vector<EnergyValue> factor_energies(std::uint64_t alphabet, std::size_t w)
{
    require(w >= 1 && w <= alphabet, "factor_energies: need 1 <= w <= M");
    if (w == 1) {
        return {EnergyValue(1)};
    }
    return enumerate_spectrum(w, alphabet - 1).energies();
}

MinRatioReport min_ratio_empirical(std::uint64_t alphabet, std::size_t n, std::size_t w)
{
    require(alphabet <= 5 && w <= alphabet, "min_ratio_empirical: need w <= M <= 5");
    require(n >= 1 && n <= 4, "min_ratio_empirical: need 1 <= n <= 4");
    MinRatioReport r;
    r.factor_energies = factor_energies(alphabet, w);

    // every multiset of n factor energies
    const std::size_t m = r.factor_energies.size();
    std::function<void(std::size_t, std::size_t, const EnergyValue&)> walk =
        [&](std::size_t slot, std::size_t from, const EnergyValue& acc) {
            if (slot == n) {
                r.products.push_back(acc);
                return;
            }
            for (std::size_t i = from; i < m; ++i) {
                walk(slot + 1, i, acc * r.factor_energies[i]);
            }
        };
    walk(0, 0, EnergyValue(1));
    std::sort(r.products.begin(), r.products.end());
    r.products.erase(std::unique(r.products.begin(), r.products.end()), r.products.end());

    for (std::size_t i = 1; i < r.products.size(); ++i) {
        const Rational q = make_ratio(r.products[i], r.products[i - 1]);
        if (!r.min_ratio || q < *r.min_ratio) {
            r.min_ratio = q;
        }
    }
    return r;
}

} // namespace addenergy
