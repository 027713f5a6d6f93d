// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "addenergy/constructions.hpp"
#include "addenergy/energy.hpp"
#include "addenergy/group_density.hpp"
#include "addenergy/product_cube.hpp"
#include "addenergy/spectrum.hpp"
#include "oracles.hpp"

using namespace addenergy;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
    std::vector<std::string> notes;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit_seconds;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << timing
              << (in_time ? "" : ", over time limit") << ")  " << o.detail << '\n';
    for (const auto& n : o.notes) {
        std::cout << "        note: " << n << '\n';
    }
    std::cout.flush();
}

BigInt big(std::uint64_t x)
{
    return BigInt(static_cast<unsigned long>(x));
}

std::string join(const std::vector<EnergyValue>& v)
{
    std::string s;
    for (const auto& x : v) {
        s += (s.empty() ? "" : ",") + x.get_str();
    }
    return "{" + s + "}";
}

Outcome max_energy_formula()
{
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const BigInt expect = big(n * n) + big((n - 1) * n * (2 * n - 1) / 3);
        if (energy_oracle(arithmetic_progression(n)) != expect || max_energy(n) != expect) {
            return {false, "mismatch at n=" + std::to_string(n), {}};
        }
    }
    return {true, "n = 1..200 exact", {}};
}

Outcome mod4_congruence()
{
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> size(1, 50);
    std::uniform_int_distribution<long> elem(-1'000'000'000L, 1'000'000'000L);
    int exceptions = 0;
    for (int t = 0; t < 10'000; ++t) {
        std::vector<BigInt> xs;
        const int m = size(rng);
        for (int i = 0; i < m; ++i) {
            xs.emplace_back(elem(rng));
        }
        const IntSet a(xs);
        const BigInt e = energy_oracle(a);
        if (BigInt(e - big(a.size())) % 4 != 0) {
            ++exceptions;
        }
    }
    return {exceptions == 0, "10000 sets, " + std::to_string(exceptions) + " exceptions", {}};
}

Outcome drop_and_gap()
{
    std::size_t cases = 0;
    for (std::int64_t n = 3; n <= 30; ++n) {
        const BigInt ap = energy_oracle(arithmetic_progression(n));
        BigInt previous = ap;
        for (std::int64_t k = 1; k <= n - 2; ++k) {
            const BigInt e = energy_oracle(shifted_ap(n, k));
            if (ap - e != 4 * n * k - 2 * k * k - 6 * k || energy_drop(n, k) != ap - e) {
                return {false, "drop mismatch n=" + std::to_string(n) + " k=" + std::to_string(k), {}};
            }
            // gap between shifts k - 1 and k, stated as 4n - 4k' - 8 with k' = k - 1
            if (k >= 2 && previous - e != 4 * n - 4 * (k - 1) - 8) {
                return {false, "gap mismatch n=" + std::to_string(n) + " k=" + std::to_string(k), {}};
            }
            previous = e;
            ++cases;
        }
    }
    return {true, std::to_string(cases) + " (n, k) pairs exact", {}};
}

Outcome lacunary_swaps()
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> len(1, 15);
    std::uniform_int_distribution<int> first(1, 50);
    std::uniform_int_distribution<int> extra(0, 40);
    std::size_t swaps = 0;
    for (int t = 0; t < 100; ++t) {
        const int m = len(rng);
        std::vector<BigInt> xs{BigInt(first(rng))};
        for (int i = 1; i < m; ++i) {
            xs.push_back(xs.back() * 10 + extra(rng)); // ratio >= 10
        }
        const LacunarySeq seq{IntSet(xs)};
        BigInt previous = energy_oracle(seq.elements());
        for (std::size_t k = 1; k <= seq.size() / 3; ++k) {
            const BigInt e = energy_oracle(lacunary_swap(seq, k));
            if (e - previous != 4) {
                return {false, "swap " + std::to_string(k) + " of " + seq.elements().to_string() + " changed energy by "
                                   + BigInt(e - previous).get_str(),
                        {}};
            }
            previous = e;
            ++swaps;
        }
    }
    return {true, "100 sequences, " + std::to_string(swaps) + " swaps, each +4", {}};
}

// Literal reading: targets are drawn from the theorem's interval. That interval
// is empty for every n < 84, so there is nothing to sample at n = 20, 30, 40.
Outcome builder_coverage()
{
    Outcome o{true, "", {}};
    std::ostringstream detail;
    for (std::uint64_t n : {20, 30, 40}) {
        const EnergyInterval iv = theorem_interval(n);
        std::vector<BigInt> admissible;
        for (BigInt t = iv.lo; t <= iv.hi && admissible.size() < 100000; ++t) {
            if (BigInt(t - big(n)) % 4 == 0) {
                admissible.push_back(t);
            }
        }
        detail << "n=" << n << " interval [" << iv.lo.get_str() << ", " << iv.hi.get_str() << "] has "
               << admissible.size() << " admissible targets; ";
        if (admissible.size() < 50) {
            o.ok = false;
            continue;
        }
        std::mt19937_64 rng(n);
        std::shuffle(admissible.begin(), admissible.end(), rng);
        admissible.resize(50);
        std::size_t reached = 0;
        for (const auto& t : admissible) {
            const BuildResult r = build_with_target_energy(n, t);
            reached += r.reached && energy_oracle(r.witness) == t && r.witness.size() == n ? 1 : 0;
        }
        o.ok = o.ok && reached * 10 >= 50 * 9;
    }
    o.detail = detail.str() + (o.ok ? "" : "cannot sample 50 targets");

    // Same protocol over the range the builder actually accepts.
    for (std::uint64_t n : {20, 30, 40}) {
        const EnergyInterval dom = builder_domain(n);
        std::mt19937_64 rng(1000 + n);
        const BigInt slots = (dom.hi - dom.lo) / 4 + 1;
        std::uniform_int_distribution<unsigned long> pick(0, slots.get_ui() - 1);
        BuildOptions plain;
        plain.local_search_iterations = 0;
        BigInt run_end = dom.lo;
        while (run_end + 4 <= dom.hi && build_with_target_energy(n, run_end + 4, plain).reached) {
            run_end += 4;
        }
        std::size_t reached = 0, sound = 0, returned = 0;
        for (int i = 0; i < 50; ++i) {
            const BigInt t = dom.lo + 4 * BigInt(pick(rng));
            const BuildResult r = build_with_target_energy(n, t);
            ++returned;
            const bool exact = energy_oracle(r.witness) == r.energy && r.witness.size() == n;
            sound += exact ? 1 : 0;
            reached += r.reached && r.energy == t ? 1 : 0;
        }
        o.notes.push_back("builder domain n=" + std::to_string(n) + " [" + dom.lo.get_str() + ", " + dom.hi.get_str()
                          + "]: reached " + std::to_string(reached) + "/50, witnesses exact "
                          + std::to_string(sound) + "/" + std::to_string(returned) + ", every target in ["
                          + dom.lo.get_str() + ", " + run_end.get_str() + "] reached");
    }
    return o;
}

Outcome spectrum_truth()
{
    std::vector<std::string> problems;
    auto check = [&](std::size_t n, std::int64_t d, const std::vector<EnergyValue>& pinned) {
        const auto brute = oracle::subset_energies(n, d);
        std::vector<EnergyValue> from_oracle;
        for (auto e : brute) {
            from_oracle.push_back(big(e));
        }
        if (from_oracle != pinned) {
            problems.push_back("oracle n=" + std::to_string(n) + " gave " + join(from_oracle));
        }
        const EnergySpectrum s = enumerate_spectrum(n, d);
        if (s.energies() != from_oracle) {
            problems.push_back("enumeration n=" + std::to_string(n) + " gave " + join(s.energies()));
        }
        if (!residue_check(s)) {
            problems.push_back("residue check failed for n=" + std::to_string(n));
        }
    };
    check(3, 8, {15, 19});
    check(4, 12, {28, 32, 36, 44});
    if (!problems.empty()) {
        return {false, problems.front(), {}};
    }
    return {true, "{15,19} and {28,32,36,44}, residues ok", {}};
}

Outcome multiplicativity()
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> alphabet(2, 12);
    std::uniform_int_distribution<int> dim(1, 4);
    int done = 0;
    while (done < 200) {
        const int m = alphabet(rng);
        const int k = dim(rng);
        std::vector<IntSet> factors;
        std::uint64_t size = 1;
        for (int i = 0; i < k; ++i) {
            std::vector<BigInt> xs;
            std::bernoulli_distribution keep(0.5);
            for (int x = 0; x < m; ++x) {
                if (keep(rng)) {
                    xs.emplace_back(x);
                }
            }
            if (xs.empty()) {
                xs.emplace_back(m - 1);
            }
            size *= xs.size();
            factors.emplace_back(xs);
        }
        if (size > 10'000) {
            continue;
        }
        const ProductSet p(BigInt(m), factors);
        if (product_energy(p) != product_energy_oracle(p)) {
            return {false, "mismatch on factor list #" + std::to_string(done), {}};
        }
        ++done;
    }
    for (unsigned k = 1; k <= 3; ++k) {
        std::vector<oracle::Vec> cube;
        for (std::int64_t mask = 0; mask < (1 << k); ++mask) {
            oracle::Vec v;
            for (unsigned b = 0; b < k; ++b) {
                v.push_back((mask >> b) & 1);
            }
            cube.push_back(v);
        }
        std::uint64_t six = 1;
        for (unsigned i = 0; i < k; ++i) {
            six *= 6;
        }
        const ProductSet p(2, std::vector<IntSet>(k, IntSet{0, 1}));
        if (oracle::vector_quadruple_energy(cube) != six || product_energy_oracle(p) != big(six)
            || product_energy(p) != big(six)) {
            return {false, "cube energy at k=" + std::to_string(k) + " is not 6^k", {}};
        }
    }
    return {true, "200 factor lists exact, E({0,1}^k) = 6^k for k = 1..3", {}};
}

Outcome chain_w20()
{
    const RatioChain c = ratio_chain(20, 3);
    const Rational limit = make_ratio(1045, 1000);
    bool equal_size = true;
    for (const auto& s : c.sets) {
        equal_size = equal_size && s.cardinality() == 8000;
    }
    bool within = true;
    for (const auto& r : c.ratios) {
        within = within && r <= limit;
    }
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        within = within && product_energy(c.sets[i]) == c.energies[i];
    }
    std::ostringstream d;
    d << c.sets.size() << " sets of size 8000, energies " << (c.energies.empty() ? "-" : c.energies.front().get_str())
      << ".." << (c.energies.empty() ? "-" : c.energies.back().get_str()) << ", bound " << c.bound.get_str();
    if (!c.ratios.empty()) {
        d << ", max ratio " << std::max_element(c.ratios.begin(), c.ratios.end())->get_str();
    }
    return {c.bound == limit && c.sets.size() >= 50 && equal_size && within, d.str(), {}};
}

Outcome sidon_suite()
{
    Outcome o{true, "p = 3,5,7,11,13: Sidon with E = 2p^2 - p", {}};
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        const GroupSet s = sidon_parabola(p);
        const BigInt e = group_energy(s);
        if (!is_sidon(s) || e != big(2 * p * p - p)) {
            return {false, "p=" + std::to_string(p) + " energy " + e.get_str(), {}};
        }
        if (e != big(4 * p * p)) {
            o.notes.push_back("p=" + std::to_string(p) + ": E = " + e.get_str() + ", not 4|S|^2 = "
                              + std::to_string(4 * p * p));
        }
    }
    return o;
}

Outcome density_tradeoff()
{
    const auto a = density_curve(4, 5);
    const auto b = density_curve(4, 101);
    const auto c = density_curve(4, 1009);
    std::ostringstream d;
    bool ok = true;
    for (unsigned k = 1; k <= 3; ++k) {
        ok = ok && a[k].bound_gap > b[k].bound_gap && b[k].bound_gap > c[k].bound_gap;
        d << "k=" << k << " gaps " << decimal_string(a[k].bound_gap, 4) << " > " << decimal_string(b[k].bound_gap, 4)
          << " > " << decimal_string(c[k].bound_gap, 4) << "; ";
    }
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> rank(1, 3);
    std::uniform_int_distribution<std::uint64_t> order(2, 9);
    std::uniform_real_distribution<double> density(0.05, 1.0);
    int holds = 0;
    for (int t = 0; t < 1000; ++t) {
        std::vector<std::uint64_t> orders(rank(rng));
        for (auto& m : orders) {
            m = order(rng);
        }
        const GroupSpec g(orders);
        std::bernoulli_distribution keep(density(rng));
        const GroupSet all = full_group(g);
        std::vector<Residues> elems;
        for (const auto& x : all.elements()) {
            if (keep(rng)) {
                elems.push_back(x);
            }
        }
        if (elems.empty()) {
            elems.push_back(Residues(g.rank(), 0));
        }
        holds += cauchy_bound_check(GroupSet(g, elems)) ? 1 : 0;
    }
    d << "Cauchy bound on " << holds << "/1000 random sets";
    return {ok && holds == 1000, d.str(), {}};
}

Outcome min_ratio()
{
    const MinRatioReport r = min_ratio_empirical(4, 2, 3);
    if (r.factor_energies != std::vector<EnergyValue>{15, 19}) {
        return {false, "factor spectrum " + join(r.factor_energies), {}};
    }
    const bool ok = r.min_ratio && *r.min_ratio == make_ratio(19, 15);
    return {ok, "min ratio " + (r.min_ratio ? r.min_ratio->get_str() : std::string("none")), {}};
}

} // namespace

int main()
{
    criterion(1, "max energy formula for n <= 200", 10, max_energy_formula);
    criterion(2, "E(A) = |A| mod 4 on 10^4 random sets", 30, mod4_congruence);
    criterion(3, "shifted progression drop and gap, n <= 30", 5, drop_and_gap);
    criterion(4, "lacunary swaps add exactly 4", 10, lacunary_swaps);
    criterion(5, "builder soundness and coverage on the theorem interval", 120, builder_coverage);
    criterion(6, "spectrum ground truth n = 3, 4", 10, spectrum_truth);
    criterion(7, "product energy multiplicativity and cube 6^k", 60, multiplicativity);
    criterion(8, "ratio chain w = 20, n = 3", 120, chain_w20);
    criterion(9, "parabola Sidon sets", 10, sidon_suite);
    criterion(10, "density tradeoff gaps and Cauchy bound", 60, density_tradeoff);
    criterion(11, "min ratio M = 4, w = 3, n = 2 is 19/15", 5, min_ratio);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}
