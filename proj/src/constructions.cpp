#include "addenergy/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "addenergy/errors.hpp"

namespace addenergy {

IntSet arithmetic_progression(std::uint64_t n)
{
    require(n >= 1, "arithmetic_progression: n must be positive");
    return IntSet::range(1, static_cast<long>(n));
}

IntSet shifted_ap(std::uint64_t n, std::uint64_t k)
{
    require(n >= 3, "shifted_ap: n must be at least 3");
    require(k >= 1 && k <= n - 2, "shifted_ap: k must lie in [1, n-2]");
    std::vector<BigInt> v;
    for (std::uint64_t i = 1; i < n; ++i) {
        v.emplace_back(static_cast<unsigned long>(i));
    }
    v.emplace_back(static_cast<unsigned long>(n + k));
    return IntSet(std::move(v));
}

EnergyValue energy_drop(std::uint64_t n, std::uint64_t k)
{
    require(n >= 3, "energy_drop: n must be at least 3");
    require(k >= 1 && k <= n - 2, "energy_drop: k must lie in [1, n-2]");
    const BigInt nn(static_cast<unsigned long>(n));
    const BigInt kk(static_cast<unsigned long>(k));
    return EnergyValue(4 * nn * kk - 2 * kk * kk - 6 * kk);
}

IntSet StagedSet::elements() const
{
    std::vector<BigInt> v(body.begin(), body.end());
    v.insert(v.end(), tail.begin(), tail.end());
    return IntSet(std::move(v));
}

namespace {

void check_stage(std::size_t n, std::size_t j, std::uint64_t k)
{
    require(j < n, "staged_set: tail must leave a nonempty body (j < n)");
    if (k >= 1) {
        require(n >= j + 3, "staged_set: a shifted body needs n >= j + 3");
        require(k <= n - j - 2, "staged_set: k must lie in [1, n-j-2]");
    }
}

IntSet staged_body(std::size_t b, std::uint64_t k)
{
    if (k == 0) {
        return arithmetic_progression(b);
    }
    return shifted_ap(b, k);
}

} // namespace

StagedSet staged_set(std::size_t n, std::size_t j, std::uint64_t k, const BigInt& base)
{
    check_stage(n, j, k);
    require(base >= 10, "staged_set: lacunary base must be at least 10");
    StagedSet s;
    s.n = n;
    s.j = j;
    s.k = k;
    s.base = base;
    s.body = staged_body(n - j, k);

    const BigInt floor_value = base * s.body.max();
    BigInt power = 1;
    while (power <= floor_value) {
        power *= base;
    }
    std::vector<BigInt> tail;
    for (std::size_t i = 0; i < j; ++i) {
        tail.push_back(power);
        power *= base;
    }
    s.tail = IntSet(std::move(tail));
    return s;
}

EnergyValue staged_energy(std::size_t n, std::size_t j, std::uint64_t k)
{
    check_stage(n, j, k);
    const std::size_t b = n - j;
    EnergyValue e = max_energy(b);
    if (k >= 1) {
        e -= energy_drop(b, k);
    }
    const BigInt jj(static_cast<unsigned long>(j));
    const BigInt bb(static_cast<unsigned long>(b));
    // tail element i (0-based) joins a set of b + i elements: +4(b+i)+1
    e += 4 * (jj * bb + jj * (jj - 1) / 2) + jj;
    return e;
}

bool LacunarySeq::is_lacunary(const IntSet& elements, const Rational& ratio)
{
    if (!elements.empty() && elements.min() <= 0) {
        return false;
    }
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (Rational(elements[i]) < ratio * elements[i - 1]) {
            return false;
        }
    }
    return true;
}

LacunarySeq::LacunarySeq(IntSet elements, Rational ratio)
    : elems_(std::move(elements))
    , ratio_(std::move(ratio))
{
    require(ratio_ >= 10, "LacunarySeq: ratio must be at least 10");
    require(is_lacunary(elems_, ratio_), "LacunarySeq: elements are not positive and ratio-lacunary");
}

IntSet lacunary_swap(const LacunarySeq& x, std::size_t k)
{
    const auto& e = x.elements();
    require(k <= e.size() / 3, "lacunary_swap: k exceeds floor(m/3)");
    std::vector<BigInt> v(e.begin(), e.end());
    for (std::size_t i = 1; i <= k; ++i) {
        v[3 * i - 1] = 2 * e[3 * i - 2] - e[3 * i - 3];
    }
    return IntSet(std::move(v));
}

unsigned mod4_residue(std::uint64_t n)
{
    require(n >= 1, "mod4_residue: n must be positive");
    return static_cast<unsigned>(n % 4);
}

EnergyInterval theorem_interval(std::uint64_t n)
{
    const BigInt nn(static_cast<unsigned long>(n));
    return {BigInt(2 * nn * nn - nn + 66), BigInt(max_energy(n / 3) - 66)};
}

EnergyInterval builder_domain(std::uint64_t n)
{
    require(n >= 2, "builder_domain: n must be at least 2");
    const BigInt nn(static_cast<unsigned long>(n));
    return {BigInt(2 * nn * nn - nn), staged_energy(n, 1, 0)};
}

namespace {

struct Candidate {
    std::size_t j = 0;
    std::uint64_t k = 0;
    std::size_t swaps = 0;
    BigInt energy;
};

struct Realized {
    IntSet body;
    IntSet tail;
};

Realized realize(std::size_t n, const Candidate& c, const BigInt& base)
{
    const StagedSet s = staged_set(n, c.j, c.k, base);
    return {s.body, lacunary_swap(LacunarySeq(s.tail), c.swaps)};
}

IntSet join(const std::vector<BigInt>& body, const IntSet& tail)
{
    std::vector<BigInt> v(body);
    v.insert(v.end(), tail.begin(), tail.end());
    return IntSet(std::move(v));
}

} // namespace

BuildResult build_with_target_energy(std::uint64_t n, const BigInt& target, const BuildOptions& options)
{
    require(n >= 12, "build_with_target_energy: n must be at least 12");
    require(BigInt(target % 4) == n % 4,
            "build_with_target_energy: target must be congruent to n mod 4");
    const EnergyInterval domain = builder_domain(n);
    require(domain.contains(target),
            "build_with_target_energy: target outside [" + domain.lo.get_str() + ", " + domain.hi.get_str() + "]");

    BuildResult result;
    result.n = n;
    result.target = target;

    std::optional<Candidate> closest;
    BigInt closest_gap;
    for (std::size_t j = n - 1; j >= 1; --j) {
        const std::size_t b = n - j;
        const std::uint64_t k_max = b >= 3 ? b - 2 : 0;
        const std::size_t swap_cap = j / 3;
        for (std::uint64_t k = 0; k <= k_max; ++k) {
            const EnergyValue e = staged_energy(n, j, k);
            const BigInt diff = target - e;
            std::size_t swaps = 0;
            if (diff > 0) {
                swaps = std::min<std::size_t>(swap_cap, BigInt(diff / 4).get_ui());
            }
            const BigInt reached = e + 4 * BigInt(static_cast<unsigned long>(swaps));
            const BigInt gap = abs(BigInt(target - reached));
            if (!closest || gap < closest_gap) {
                closest = Candidate{j, k, swaps, reached};
                closest_gap = gap;
            }
            if (gap == 0) {
                break;
            }
        }
        if (closest_gap == 0) {
            break;
        }
    }

    Realized start = realize(n, *closest, options.base);
    result.stages = {closest->j, closest->k, closest->swaps, 0};

    if (closest_gap != 0 && start.body.size() >= 3) {
        std::mt19937_64 rng(options.seed);
        std::vector<BigInt> body(start.body.begin(), start.body.end());
        BigInt gap = closest_gap;
        std::vector<BigInt> best_body = body;
        BigInt best_gap = gap;
        const long hi = 2 * body.back().get_si() + 2;
        std::uniform_int_distribution<std::size_t> pick(0, body.size() - 1);
        std::uniform_int_distribution<long> value(1, hi);
        std::size_t moves = 0;
        for (std::size_t it = 0; it < options.local_search_iterations && best_gap != 0; ++it) {
            std::vector<BigInt> trial = body;
            trial[pick(rng)] = value(rng);
            std::sort(trial.begin(), trial.end());
            if (std::adjacent_find(trial.begin(), trial.end()) != trial.end()) {
                continue;
            }
            const BigInt e = energy_oracle(join(trial, start.tail));
            const BigInt trial_gap = abs(BigInt(target - e));
            if (trial_gap <= gap) {
                body = std::move(trial);
                gap = trial_gap;
                ++moves;
                if (gap < best_gap) {
                    best_gap = gap;
                    best_body = body;
                }
            }
        }
        if (best_gap < closest_gap) {
            start.body = IntSet(std::move(best_body));
            result.stages.local_search_moves = moves;
        }
    }

    result.witness = join({start.body.begin(), start.body.end()}, start.tail);
    result.energy = energy_oracle(result.witness);
    result.reached = result.energy == target;
    if (closest_gap == 0 && !result.reached) {
        throw std::logic_error("build_with_target_energy: staged witness energy disagrees with the schedule");
    }
    if (result.witness.size() != n) {
        throw std::logic_error("build_with_target_energy: witness has the wrong size");
    }
    return result;
}

std::vector<EnergyValue> coarse_chain_energies(std::uint64_t n)
{
    require(n >= 1, "coarse_chain_energies: n must be positive");
    std::vector<EnergyValue> out;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t b = n - j;
        const std::uint64_t k_max = b >= 3 ? b - 2 : 0;
        for (std::uint64_t k = 0; k <= k_max; ++k) {
            out.push_back(staged_energy(n, j, k));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace addenergy
