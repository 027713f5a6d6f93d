#include "addenergy/group_density.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "addenergy/errors.hpp"

namespace addenergy {

GroupSpec::GroupSpec(std::vector<std::uint64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders))
{
    require(!orders_.empty(), "GroupSpec: need at least one cyclic factor");
    for (auto m : orders_) {
        require(m >= 2, "GroupSpec: cyclic orders must be at least 2");
    }
}

BigInt GroupSpec::order() const
{
    BigInt o = 1;
    for (auto m : orders_) {
        o *= static_cast<unsigned long>(m);
    }
    return o;
}

bool GroupSpec::is_element(const Residues& x) const
{
    if (x.size() != orders_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= orders_[i]) {
            return false;
        }
    }
    return true;
}

Residues GroupSpec::add(const Residues& x, const Residues& y) const
{
    Residues s(orders_.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = (x[i] + y[i]) % orders_[i];
    }
    return s;
}

GroupSpec GroupSpec::times(const GroupSpec& other) const
{
    auto orders = orders_;
    orders.insert(orders.end(), other.orders_.begin(), other.orders_.end());
    return GroupSpec(std::move(orders));
}

GroupSet::GroupSet(GroupSpec group, std::vector<Residues> elements)
    : group_(std::move(group))
    , elems_(std::move(elements))
{
    for (const auto& x : elems_) {
        require(group_.is_element(x), "GroupSet: element is not a residue vector of the group");
    }
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

GroupSet full_group(const GroupSpec& g)
{
    require(g.order() <= 1'000'000, "full_group: group too large to materialize");
    std::vector<Residues> elems{{}};
    for (auto m : g.cyclic_orders()) {
        std::vector<Residues> next;
        for (const auto& x : elems) {
            for (std::uint64_t r = 0; r < m; ++r) {
                auto y = x;
                y.push_back(r);
                next.push_back(std::move(y));
            }
        }
        elems = std::move(next);
    }
    return GroupSet(g, std::move(elems));
}

GroupSet group_product(const GroupSet& a, const GroupSet& b)
{
    std::vector<Residues> elems;
    elems.reserve(a.size() * b.size());
    for (const auto& x : a.elements()) {
        for (const auto& y : b.elements()) {
            auto z = x;
            z.insert(z.end(), y.begin(), y.end());
            elems.push_back(std::move(z));
        }
    }
    return GroupSet(a.group().times(b.group()), std::move(elems));
}

std::uint64_t SumProfile::total() const
{
    std::uint64_t t = 0;
    for (const auto& [x, r] : counts) {
        t += r;
    }
    return t;
}

EnergyValue SumProfile::energy() const
{
    EnergyValue e = 0;
    for (const auto& [x, r] : counts) {
        e += BigInt(static_cast<unsigned long>(r)) * static_cast<unsigned long>(r);
    }
    return e;
}

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

/**
 * Visits r(x) for every x in A + A. Sums are grouped by their first
 * coordinate so that only one bucket of pair sums is held at a time; the
 * remaining coordinates are keyed by mixed radix. Small groups use a dense
 * histogram instead.
 */
template <typename Visit>
void for_each_sum(const GroupSet& a, Visit&& visit)
{
    const auto& orders = a.group().cyclic_orders();
    require(a.group().order().fits_ulong_p(), "group too large to enumerate sums");
    const std::uint64_t order = a.group().order().get_ui();

    auto encode = [&](const Residues& x, std::size_t from) {
        std::uint64_t key = 0;
        for (std::size_t i = from; i < orders.size(); ++i) {
            key = key * orders[i] + x[i];
        }
        return key;
    };
    auto decode = [&](std::uint64_t key, std::size_t from, Residues& out) {
        for (std::size_t i = orders.size(); i-- > from;) {
            out[i] = key % orders[i];
            key /= orders[i];
        }
    };

    if (order <= kDenseLimit) {
        std::vector<std::uint32_t> hist(order, 0);
        const auto& elems = a.elements();
        for (const auto& x : elems) {
            for (const auto& y : elems) {
                std::uint64_t key = 0;
                for (std::size_t i = 0; i < orders.size(); ++i) {
                    key = key * orders[i] + (x[i] + y[i]) % orders[i];
                }
                ++hist[key];
            }
        }
        Residues r(orders.size());
        for (std::uint64_t key = 0; key < order; ++key) {
            if (hist[key]) {
                decode(key, 0, r);
                visit(r, std::uint64_t{hist[key]});
            }
        }
        return;
    }

    const std::uint64_t m0 = orders[0];
    std::vector<std::vector<std::uint64_t>> bucket(m0); // first coordinate -> tail codes
    for (const auto& x : a.elements()) {
        bucket[x[0]].push_back(encode(x, 1));
    }
    std::vector<std::uint64_t> tail_radix(orders.begin() + 1, orders.end());
    auto add_tail = [&](std::uint64_t p, std::uint64_t q) {
        std::uint64_t key = 0, scale = 1;
        for (std::size_t i = tail_radix.size(); i-- > 0;) {
            const auto m = tail_radix[i];
            key += ((p % m + q % m) % m) * scale;
            p /= m;
            q /= m;
            scale *= m;
        }
        return key;
    };
    std::vector<std::uint64_t> sums;
    Residues r(orders.size());
    for (std::uint64_t u = 0; u < m0; ++u) {
        sums.clear();
        for (std::uint64_t c = 0; c < m0; ++c) {
            const auto& left = bucket[c];
            const auto& right = bucket[(u + m0 - c) % m0];
            for (auto p : left) {
                for (auto q : right) {
                    sums.push_back(add_tail(p, q));
                }
            }
        }
        std::sort(sums.begin(), sums.end());
        for (std::size_t i = 0; i < sums.size();) {
            std::size_t j = i + 1;
            while (j < sums.size() && sums[j] == sums[i]) {
                ++j;
            }
            r[0] = u;
            decode(sums[i], 1, r);
            visit(r, static_cast<std::uint64_t>(j - i));
            i = j;
        }
    }
}

} // namespace

SumProfile sum_profile(const GroupSet& a)
{
    require(a.size() <= 10'000, "sum_profile: |A| exceeds 10^4");
    SumProfile p;
    for_each_sum(a, [&](const Residues& x, std::uint64_t r) { p.counts.emplace(x, r); });
    return p;
}

EnergyValue group_energy(const GroupSet& a)
{
    require(a.size() <= 10'000, "group_energy: |A| exceeds 10^4");
    BigInt e = 0;
    std::uint64_t chunk = 0;
    for_each_sum(a, [&](const Residues&, std::uint64_t r) {
        chunk += r * r;
        if (chunk > (std::uint64_t{1} << 62)) {
            e += static_cast<unsigned long>(chunk);
            chunk = 0;
        }
    });
    e += static_cast<unsigned long>(chunk);
    return e;
}

bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

GroupSet sidon_parabola(std::uint64_t p)
{
    require(p != 2 && is_prime(p), "sidon_parabola: p must be an odd prime");
    std::vector<Residues> elems;
    for (std::uint64_t x = 0; x < p; ++x) {
        elems.push_back({x, (x * x) % p});
    }
    return GroupSet(GroupSpec({p, p}), std::move(elems));
}

bool is_sidon(const GroupSet& a)
{
    require(a.size() <= 1'000, "is_sidon: |A| exceeds 10^3");
    std::set<Residues> seen;
    const auto& elems = a.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            if (!seen.insert(a.group().add(elems[i], elems[j])).second) {
                return false;
            }
        }
    }
    return true;
}

namespace {

BigInt pow_big(std::uint64_t base, unsigned long exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Decimal to_decimal(const BigInt& x)
{
    return Decimal(x.get_str());
}

TradeoffPoint make_point(unsigned k, unsigned n, std::uint64_t p, const EnergyValue& sidon_energy)
{
    TradeoffPoint t;
    t.k = k;
    t.n = n;
    t.p = p;
    const BigInt m = BigInt(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    t.size = pow_big(p, 2 * n - k);
    t.group_order = pow_big(p, 2 * n);
    BigInt sidon_part, full_part;
    mpz_pow_ui(sidon_part.get_mpz_t(), sidon_energy.get_mpz_t(), k);
    mpz_pow_ui(full_part.get_mpz_t(), m.get_mpz_t(), 3 * (n - k));
    t.energy = sidon_part * full_part;
    t.alpha = make_ratio(2 * n - k, 2 * n);

    const Decimal log_size = log(to_decimal(t.size));
    t.delta = log(to_decimal(t.energy)) / log_size - 2;
    t.bound = Decimal(1) / (Decimal(2) - t.delta);
    const Decimal alpha = to_decimal(t.alpha.get_num()) / to_decimal(t.alpha.get_den());
    t.bound_gap = abs(alpha - t.bound);

    const BigInt lhs = t.size * t.size * t.size * t.size;
    t.cauchy_holds = lhs <= t.group_order * t.energy;
    return t;
}

void check_point_args(unsigned k, unsigned n, std::uint64_t p)
{
    require(n >= 1, "tradeoff_point: n must be positive");
    require(k <= n, "tradeoff_point: need 0 <= k <= n");
    require(p != 2 && is_prime(p), "tradeoff_point: p must be an odd prime");
}

} // namespace

TradeoffPoint tradeoff_point(unsigned k, unsigned n, std::uint64_t p)
{
    check_point_args(k, n, p);
    return make_point(k, n, p, group_energy(sidon_parabola(p)));
}

bool cauchy_bound_check(const GroupSet& a)
{
    require(a.size() <= 10'000, "cauchy_bound_check: |A| exceeds 10^4");
    const SumProfile profile = sum_profile(a);
    const BigInt size(static_cast<unsigned long>(a.size()));
    const BigInt fourth = size * size * size * size;
    const EnergyValue e = profile.energy();
    const bool sumset_form = fourth <= BigInt(static_cast<unsigned long>(profile.sumset_size())) * e;
    const bool density_form = fourth <= a.group().order() * e;
    return sumset_form && density_form;
}

std::vector<TradeoffPoint> density_curve(unsigned n, std::uint64_t p, unsigned threads)
{
    require(n >= 1 && n <= 64, "density_curve: need 1 <= n <= 64");
    require(p <= 10'000, "density_curve: need p <= 10^4");
    check_point_args(0, n, p);
    const EnergyValue sidon_energy = group_energy(sidon_parabola(p));

    std::vector<TradeoffPoint> points(n + 1);
    const unsigned workers = std::max(1u, threads);
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (unsigned k = w; k <= n; k += workers) {
                points[k] = make_point(k, n, p, sidon_energy);
            }
        }));
    }
    for (auto& j : jobs) {
        j.get();
    }
    return points;
}

std::string decimal_string(const Decimal& x, int digits)
{
    return x.str(digits, std::ios_base::fixed);
}

} // namespace addenergy
