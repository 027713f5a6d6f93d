#include "addenergy/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "addenergy/constructions.hpp"
#include "addenergy/errors.hpp"
#include "addenergy/group_density.hpp"
#include "addenergy/product_cube.hpp"
#include "addenergy/spectrum.hpp"

namespace addenergy {

namespace {

using Rng = std::mt19937_64;

IntSet random_set(Rng& rng, std::size_t max_size, long spread)
{
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<long> value(-spread, spread);
    std::vector<BigInt> v;
    const std::size_t n = size(rng);
    while (v.size() < n) {
        v.emplace_back(value(rng));
    }
    return IntSet(std::move(v));
}

struct Check {
    std::string name;
    std::function<std::string(Rng&)> body; // empty string = pass, else failure detail
};

std::vector<Check> core_checks()
{
    return {
        {"three-way energy agreement",
         [](Rng& rng) -> std::string {
             for (int trial = 0; trial < 200; ++trial) {
                 const IntSet a = random_set(rng, 40, 200);
                 const auto e = energy_oracle(a);
                 if (energy_from_profile(difference_profile(a)) != e) {
                     return "profile route disagrees on " + a.to_string();
                 }
                 IntSet built{a.min().get_si()};
                 EnergyValue running = 1;
                 for (std::size_t i = 1; i < a.size(); ++i) {
                     running = incremental_energy_extend(built, running, a[i]);
                     std::vector<BigInt> v(built.begin(), built.end());
                     v.push_back(a[i]);
                     built = IntSet(std::move(v));
                 }
                 if (running != e) {
                     return "incremental route disagrees on " + a.to_string();
                 }
             }
             return {};
         }},
        {"energy bounds and mod-4 congruence",
         [](Rng& rng) -> std::string {
             for (int trial = 0; trial < 500; ++trial) {
                 const IntSet a = random_set(rng, 30, 1'000'000);
                 const BigInt n(static_cast<unsigned long>(a.size()));
                 const auto e = energy_oracle(a);
                 if (e < n * n || e > n * n * n) {
                     return "bounds violated on " + a.to_string();
                 }
                 if (BigInt(e % 4) != BigInt(n % 4)) {
                     return "congruence violated on " + a.to_string();
                 }
             }
             return {};
         }},
        {"max energy formula on progressions",
         [](Rng&) -> std::string {
             for (std::uint64_t n = 1; n <= 60; ++n) {
                 if (energy_oracle(IntSet::range(1, static_cast<long>(n))) != max_energy(n)) {
                     return "n=" + std::to_string(n);
                 }
             }
             return {};
         }},
        {"affine invariance",
         [](Rng& rng) -> std::string {
             std::uniform_int_distribution<long> coef(-50, 50);
             for (int trial = 0; trial < 100; ++trial) {
                 IntSet a = random_set(rng, 20, 100);
                 if (a.size() < 2) {
                     continue;
                 }
                 long s = coef(rng);
                 if (s == 0) {
                     s = 7;
                 }
                 const IntSet b = affine_image(a, s, coef(rng));
                 if (energy_oracle(a) != energy_oracle(b) || normalize(a) != normalize(b)) {
                     return "fails for " + a.to_string();
                 }
             }
             return {};
         }},
        {"profile mass and diameter",
         [](Rng& rng) -> std::string {
             for (int trial = 0; trial < 100; ++trial) {
                 const IntSet a = random_set(rng, 30, 500);
                 const auto p = difference_profile(a);
                 std::uint64_t mass = 0;
                 for (const auto& [x, c] : p.positive) {
                     mass += c;
                 }
                 if (mass != a.size() * (a.size() - 1) / 2) {
                     return "mass wrong on " + a.to_string();
                 }
                 if (a.size() >= 2 && (p.positive.rbegin()->first != a.diameter() || p.d_plus(a.diameter()) != 1)) {
                     return "diameter entry wrong on " + a.to_string();
                 }
             }
             return {};
         }},
    };
}

std::vector<Check> construction_checks()
{
    return {
        {"drop and gap formulas",
         [](Rng&) -> std::string {
             for (std::uint64_t n = 3; n <= 30; ++n) {
                 for (std::uint64_t k = 1; k <= n - 2; ++k) {
                     const auto e = energy_oracle(shifted_ap(n, k));
                     if (max_energy(n) - e != energy_drop(n, k)) {
                         return "drop n=" + std::to_string(n) + " k=" + std::to_string(k);
                     }
                     if (k + 1 <= n - 2 && e - energy_oracle(shifted_ap(n, k + 1)) != BigInt(4 * n - 4 * k - 8)) {
                         return "gap n=" + std::to_string(n) + " k=" + std::to_string(k);
                     }
                 }
             }
             return {};
         }},
        {"lacunary swaps add 4 each",
         [](Rng& rng) -> std::string {
             std::uniform_int_distribution<int> mult(10, 40), len(3, 15), start(1, 9);
             for (int trial = 0; trial < 20; ++trial) {
                 std::vector<BigInt> v{BigInt(start(rng))};
                 const int m = len(rng);
                 while (static_cast<int>(v.size()) < m) {
                     v.push_back(v.back() * mult(rng));
                 }
                 const LacunarySeq x{IntSet(v)};
                 const auto base = energy_oracle(x.elements());
                 for (std::size_t k = 0; k <= x.size() / 3; ++k) {
                     if (energy_oracle(lacunary_swap(x, k)) != base + 4 * BigInt(static_cast<unsigned long>(k))) {
                         return "swap count " + std::to_string(k) + " on " + x.elements().to_string();
                     }
                 }
             }
             return {};
         }},
        {"staged energies and tail isolation",
         [](Rng&) -> std::string {
             for (std::size_t n = 3; n <= 14; ++n) {
                 for (std::size_t j = 0; j < n; ++j) {
                     const std::size_t b = n - j;
                     for (std::uint64_t k = 0; k <= (b >= 3 ? b - 2 : 0); ++k) {
                         const StagedSet s = staged_set(n, j, k);
                         if (energy_oracle(s.elements()) != staged_energy(n, j, k)) {
                             return "staged energy n=" + std::to_string(n) + " j=" + std::to_string(j);
                         }
                         const auto body = difference_profile(s.body);
                         const auto all = difference_profile(s.elements());
                         for (const auto& [x, c] : all.positive) {
                             if (body.d_plus(x) != 0 && body.d_plus(x) != c) {
                                 return "tail difference collides with body at n=" + std::to_string(n);
                             }
                         }
                     }
                 }
             }
             return {};
         }},
        {"builder soundness at n=20",
         [](Rng& rng) -> std::string {
             const auto domain = builder_domain(20);
             std::uniform_int_distribution<unsigned long> pick(0, BigInt((domain.hi - domain.lo) / 4).get_ui());
             for (int trial = 0; trial < 10; ++trial) {
                 const BigInt t = domain.lo + 4 * BigInt(pick(rng));
                 const BuildResult r = build_with_target_energy(20, t);
                 if (r.witness.size() != 20 || energy_oracle(r.witness) != r.energy
                     || (r.reached && r.energy != t)) {
                     return "unsound witness for target " + t.get_str();
                 }
             }
             return {};
         }},
    };
}

std::vector<Check> spectrum_checks()
{
    return {
        {"small spectra",
         [](Rng&) -> std::string {
             if (enumerate_spectrum(2, 1).energies() != std::vector<EnergyValue>{6}) {
                 return "n=2";
             }
             if (enumerate_spectrum(3, 8).energies() != std::vector<EnergyValue>{15, 19}) {
                 return "n=3";
             }
             if (enumerate_spectrum(4, 12).energies() != std::vector<EnergyValue>{28, 32, 36, 44}) {
                 return "n=4";
             }
             return {};
         }},
        {"residues, witnesses and Sidon floor",
         [](Rng&) -> std::string {
             for (std::size_t n = 2; n <= 6; ++n) {
                 const auto s = enumerate_spectrum(n, 3 * n * n);
                 if (!residue_check(s)) {
                     return "residue n=" + std::to_string(n);
                 }
                 for (const auto& e : s.entries) {
                     if (energy_oracle(e.witness) != e.energy || normalize(e.witness) != e.witness) {
                         return "witness n=" + std::to_string(n);
                     }
                 }
                 const BigInt nn(static_cast<unsigned long>(n));
                 if (s.entries.front().energy != 2 * nn * nn - nn || s.entries.back().energy != max_energy(n)) {
                     return "extremes n=" + std::to_string(n);
                 }
             }
             return {};
         }},
        {"monotone coverage",
         [](Rng&) -> std::string {
             for (std::uint64_t d = 5; d < 20; ++d) {
                 const auto small = enumerate_spectrum(5, d).energies();
                 const auto large = enumerate_spectrum(5, d + 1).energies();
                 if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) {
                     return "d=" + std::to_string(d);
                 }
             }
             return {};
         }},
    };
}

std::vector<Check> product_checks()
{
    return {
        {"multiplicativity",
         [](Rng& rng) -> std::string {
             std::uniform_int_distribution<int> dims(1, 4), alpha(2, 6);
             for (int trial = 0; trial < 50; ++trial) {
                 const int m = alpha(rng);
                 std::vector<IntSet> factors;
                 const int d = dims(rng);
                 for (int i = 0; i < d; ++i) {
                     std::vector<BigInt> v;
                     std::uniform_int_distribution<int> coin(0, 1);
                     for (int x = 0; x < m; ++x) {
                         if (coin(rng)) {
                             v.emplace_back(x);
                         }
                     }
                     if (v.empty()) {
                         v.emplace_back(0);
                     }
                     factors.emplace_back(std::move(v));
                 }
                 const ProductSet p(m, factors);
                 if (p.cardinality() > 10'000) {
                     continue;
                 }
                 if (product_energy(p) != product_energy_oracle(p)) {
                     return "mismatch in trial " + std::to_string(trial);
                 }
             }
             return {};
         }},
        {"boolean cube energies and exponent",
         [](Rng&) -> std::string {
             EnergyValue six_k = 1;
             for (unsigned k = 1; k <= 3; ++k) {
                 six_k *= 6;
                 const auto r = cube_energy_exponent(k);
                 if (r.full_cube_energy != six_k) {
                     return "E({0,1}^" + std::to_string(k) + ")";
                 }
                 if (r.max_exponent > r.log2_6 + 1e-12L) {
                     return "exponent above log2 6 at k=" + std::to_string(k);
                 }
             }
             return {};
         }},
        {"min ratio on [4]",
         [](Rng&) -> std::string {
             const auto r = min_ratio_empirical(4, 2, 3);
             if (!r.min_ratio || *r.min_ratio != Rational(19, 15)) {
                 return "expected 19/15";
             }
             return {};
         }},
        {"ratio chain bound at w=12",
         [](Rng&) -> std::string {
             const auto chain = ratio_chain(12, 2);
             if (chain.sets.size() < 2) {
                 return "chain too short";
             }
             for (const auto& q : chain.ratios) {
                 if (q <= 1 || q > chain.bound) {
                     return "ratio out of bounds";
                 }
             }
             return {};
         }},
    };
}

std::vector<Check> group_checks()
{
    return {
        {"parabola Sidon sets",
         [](Rng&) -> std::string {
             for (std::uint64_t p : {3, 5, 7, 11, 13}) {
                 const auto s = sidon_parabola(p);
                 if (!is_sidon(s) || group_energy(s) != BigInt(static_cast<unsigned long>(2 * p * p - p))) {
                     return "p=" + std::to_string(p);
                 }
             }
             return {};
         }},
        {"full cyclic groups have energy M^3",
         [](Rng&) -> std::string {
             for (std::uint64_t m = 2; m <= 30; ++m) {
                 if (group_energy(full_group(GroupSpec({m}))) != BigInt(static_cast<unsigned long>(m * m * m))) {
                     return "M=" + std::to_string(m);
                 }
             }
             return {};
         }},
        {"Cauchy bound on random subsets",
         [](Rng& rng) -> std::string {
             std::uniform_int_distribution<std::uint64_t> order(2, 12);
             for (int trial = 0; trial < 100; ++trial) {
                 const GroupSpec g({order(rng), order(rng)});
                 std::vector<Residues> elems;
                 std::bernoulli_distribution keep(0.3);
                 for (std::uint64_t x = 0; x < g.cyclic_orders()[0]; ++x) {
                     for (std::uint64_t y = 0; y < g.cyclic_orders()[1]; ++y) {
                         if (keep(rng)) {
                             elems.push_back({x, y});
                         }
                     }
                 }
                 if (elems.empty()) {
                     continue;
                 }
                 if (!cauchy_bound_check(GroupSet(g, elems))) {
                     return "violated in trial " + std::to_string(trial);
                 }
             }
             return {};
         }},
        {"density gap shrinks with p",
         [](Rng&) -> std::string {
             const auto small = density_curve(4, 5);
             const auto large = density_curve(4, 101);
             for (unsigned k = 1; k <= 3; ++k) {
                 if (!(large[k].bound_gap < small[k].bound_gap)) {
                     return "k=" + std::to_string(k);
                 }
             }
             return {};
         }},
    };
}

const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> suites{
        {"core", core_checks},
        {"constructions", construction_checks},
        {"spectrum", spectrum_checks},
        {"product", product_checks},
        {"group", group_checks},
    };
    return suites;
}

} // namespace

std::vector<std::string> verification_suites()
{
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) {
        names.push_back(name);
    }
    return names;
}

std::vector<CheckResult> run_verification(const std::string& suite, std::uint64_t seed)
{
    bool known = suite == "all";
    for (const auto& [name, _] : registry()) {
        known = known || name == suite;
    }
    require(known, "unknown verification suite '" + suite + "'");

    std::vector<CheckResult> results;
    for (const auto& [name, make] : registry()) {
        if (suite != "all" && suite != name) {
            continue;
        }
        for (const auto& check : make()) {
            Rng rng(seed);
            CheckResult r{name, check.name, false, {}};
            try {
                r.detail = check.body(rng);
                r.passed = r.detail.empty();
            } catch (const std::exception& e) {
                r.detail = std::string("exception: ") + e.what();
            }
            results.push_back(std::move(r));
        }
    }
    return results;
}

} // namespace addenergy
