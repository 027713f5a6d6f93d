#include "addenergy/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "addenergy/constructions.hpp"
#include "addenergy/errors.hpp"

namespace addenergy {

std::vector<EnergyValue> EnergySpectrum::energies() const
{
    std::vector<EnergyValue> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(e.energy);
    }
    return out;
}

std::uint64_t spectrum_work_estimate(std::size_t n, std::uint64_t diameter_bound)
{
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), diameter_bound, n - 1);
    if (!c.fits_ulong_p()) {
        return UINT64_MAX;
    }
    return c.get_ui();
}

namespace {

struct Chunk {
    std::int64_t diameter;
    std::int64_t first; // smallest interior element; 0 when n == 2
};

// Per-worker search state: the partial set plus a difference histogram whose
// sum of squares is kept up to date incrementally.
class Searcher {
public:
    Searcher(std::size_t n, std::int64_t diameter_bound, std::size_t energy_cap)
        : n_(n)
        , counts_(static_cast<std::size_t>(diameter_bound) + 1, 0)
        , best_(energy_cap + 1)
    {
    }

    void run(const Chunk& c)
    {
        d_ = c.diameter;
        elems_.clear();
        push(0);
        if (n_ == 2) {
            push(d_);
            leaf();
            pop();
            pop();
            return;
        }
        push(c.first);
        extend(c.first + 1, n_ - 3);
        pop();
        pop();
    }

    std::uint64_t visited() const { return visited_; }
    const std::vector<std::vector<std::int64_t>>& best() const { return best_; }

private:
    void push(std::int64_t x)
    {
        for (auto y : elems_) {
            auto& c = counts_[static_cast<std::size_t>(x - y)];
            sumsq_ += 2 * c + 1;
            ++c;
        }
        elems_.push_back(x);
    }

    void pop()
    {
        const auto x = elems_.back();
        elems_.pop_back();
        for (auto y : elems_) {
            auto& c = counts_[static_cast<std::size_t>(x - y)];
            --c;
            sumsq_ -= 2 * c + 1;
        }
    }

    void extend(std::int64_t from, std::size_t remaining)
    {
        if (remaining == 0) {
            push(d_);
            leaf();
            pop();
            return;
        }
        for (std::int64_t x = from; x + static_cast<std::int64_t>(remaining) <= d_; ++x) {
            push(x);
            extend(x + 1, remaining - 1);
            pop();
        }
    }

    void leaf()
    {
        std::int64_t g = 0;
        for (auto x : elems_) {
            g = std::gcd(g, x);
        }
        if (g != 1) {
            return;
        }
        // canonical: not lexicographically larger than the reflection
        const std::size_t n = elems_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t r = d_ - elems_[n - 1 - i];
            if (elems_[i] != r) {
                if (elems_[i] > r) {
                    return;
                }
                break;
            }
        }
        ++visited_;
        const std::size_t energy = n * n + 2 * sumsq_;
        auto& slot = best_[energy];
        if (slot.empty() || elems_ < slot) {
            slot = elems_;
        }
    }

    std::size_t n_;
    std::int64_t d_ = 0;
    std::vector<std::int64_t> elems_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t sumsq_ = 0;
    std::uint64_t visited_ = 0;
    std::vector<std::vector<std::int64_t>> best_;
};

} // namespace

EnergySpectrum enumerate_spectrum(std::size_t n, std::uint64_t diameter_bound, const SpectrumOptions& options)
{
    require(n >= 2 && n <= 12, "enumerate_spectrum: n must lie in [2, 12]");
    require(diameter_bound >= n - 1, "enumerate_spectrum: diameter bound must be at least n-1");
    const std::uint64_t estimate = spectrum_work_estimate(n, diameter_bound);
    if (estimate > options.work_budget) {
        throw BudgetExceeded("enumerate_spectrum: estimated " + std::to_string(estimate)
                             + " subsets exceeds work budget " + std::to_string(options.work_budget));
    }

    std::vector<Chunk> chunks;
    for (std::int64_t d = static_cast<std::int64_t>(n - 1); d <= static_cast<std::int64_t>(diameter_bound); ++d) {
        if (n == 2) {
            chunks.push_back({d, 0});
            continue;
        }
        for (std::int64_t f = 1; f + static_cast<std::int64_t>(n - 3) < d; ++f) {
            chunks.push_back({d, f});
        }
    }

    const std::size_t energy_cap = max_energy(n).get_ui();
    const unsigned workers = std::max(1u, options.threads);
    std::vector<Searcher> searchers;
    searchers.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        searchers.emplace_back(n, static_cast<std::int64_t>(diameter_bound), energy_cap);
    }
    std::atomic<std::size_t> next{0};
    auto work = [&](Searcher& s) {
        for (std::size_t i = next++; i < chunks.size(); i = next++) {
            s.run(chunks[i]);
        }
    };
    if (workers == 1) {
        work(searchers[0]);
    } else {
        std::vector<std::jthread> pool;
        for (auto& s : searchers) {
            pool.emplace_back([&work, &s] { work(s); });
        }
    }

    EnergySpectrum out;
    out.n = n;
    out.diameter_bound = diameter_bound;
    for (std::size_t e = 0; e <= energy_cap; ++e) {
        const std::vector<std::int64_t>* pick = nullptr;
        for (const auto& s : searchers) {
            const auto& cand = s.best()[e];
            if (!cand.empty() && (pick == nullptr || cand < *pick)) {
                pick = &cand;
            }
        }
        if (pick != nullptr) {
            std::vector<BigInt> w;
            for (auto x : *pick) {
                w.emplace_back(static_cast<long>(x));
            }
            out.entries.push_back({EnergyValue(static_cast<unsigned long>(e)), IntSet(std::move(w))});
        }
    }
    for (const auto& s : searchers) {
        out.visited += s.visited();
    }
    out.complete = true;
    return out;
}

std::vector<SpectrumGap> spectrum_gaps(const EnergySpectrum& s)
{
    const EnergyInterval interval = theorem_interval(s.n);
    std::vector<SpectrumGap> out;
    for (std::size_t i = 1; i < s.entries.size(); ++i) {
        const auto& from = s.entries[i - 1].energy;
        const auto& to = s.entries[i].energy;
        const BigInt gap = to - from;
        const bool inside = interval.contains(from) && interval.contains(to);
        out.push_back({from, to, gap, inside && gap > 4});
    }
    return out;
}

bool residue_check(const EnergySpectrum& s)
{
    return std::all_of(s.entries.begin(), s.entries.end(),
                       [&](const SpectrumEntry& e) { return BigInt(e.energy % 4) == s.n % 4; });
}

std::string spectrum_svg(const EnergySpectrum& s)
{
    constexpr double width = 800, height = 160, margin = 40;
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<text x=\"" << margin << "\" y=\"20\" font-size=\"12\">attainable energies, n=" << s.n
       << ", diameter<=" << s.diameter_bound << "</text>\n";
    os << "<line x1=\"" << margin << "\" y1=\"100\" x2=\"" << width - margin << "\" y2=\"100\" stroke=\"black\"/>\n";
    if (!s.entries.empty()) {
        const double lo = s.entries.front().energy.get_d();
        const double hi = s.entries.back().energy.get_d();
        const double span = hi > lo ? hi - lo : 1.0;
        auto x_of = [&](const EnergyValue& e) { return margin + (e.get_d() - lo) / span * (width - 2 * margin); };
        for (const auto& g : spectrum_gaps(s)) {
            if (g.gap > 4) {
                os << "<rect x=\"" << x_of(g.from) << "\" y=\"90\" width=\"" << x_of(g.to) - x_of(g.from)
                   << "\" height=\"20\" fill=\"" << (g.flagged ? "#e34a33" : "#fdbb84") << "\" opacity=\"0.6\"/>\n";
            }
        }
        for (const auto& e : s.entries) {
            os << "<line x1=\"" << x_of(e.energy) << "\" y1=\"85\" x2=\"" << x_of(e.energy)
               << "\" y2=\"115\" stroke=\"#2b8cbe\"/>\n";
        }
        os << "<text x=\"" << margin << "\" y=\"135\" font-size=\"10\">" << s.entries.front().energy.get_str()
           << "</text>\n";
        os << "<text x=\"" << width - margin << "\" y=\"135\" font-size=\"10\" text-anchor=\"end\">"
           << s.entries.back().energy.get_str() << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace addenergy
