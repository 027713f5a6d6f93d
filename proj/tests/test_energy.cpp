#include <random>

#include <gtest/gtest.h>

#include "addenergy/energy.hpp"
#include "addenergy/errors.hpp"
#include "addenergy/serialize.hpp"
#include "oracles.hpp"

using namespace addenergy;

namespace {

std::vector<std::int64_t> small(const IntSet& a)
{
    return *a.to_small();
}

IntSet random_set(std::mt19937_64& rng, std::size_t max_size, long spread)
{
    std::uniform_int_distribution<std::size_t> size(0, max_size);
    std::uniform_int_distribution<long> value(-spread, spread);
    std::vector<BigInt> v;
    const std::size_t n = size(rng);
    while (v.size() < n) {
        v.emplace_back(value(rng));
    }
    return IntSet(std::move(v));
}

} // namespace

TEST(IntSet, SortsAndDropsRepeats)
{
    const IntSet a{5, 1, 3, 1};
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a, (IntSet{1, 3, 5}));
    EXPECT_EQ(a.diameter(), 4);
    EXPECT_TRUE(a.contains(3));
    EXPECT_FALSE(a.contains(2));
    EXPECT_EQ(IntSet{}.diameter(), 0);
}

TEST(IntSet, SmallConversionRejectsHugeElements)
{
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 30);
    EXPECT_FALSE(IntSet(std::vector<BigInt>{1, huge}).to_small().has_value());
    EXPECT_TRUE((IntSet{-7, 7}).to_small().has_value());
}

TEST(EnergyOracle, Examples)
{
    EXPECT_EQ(energy_oracle(IntSet{}), 0);
    EXPECT_EQ(energy_oracle(IntSet{0, 1}), 6);
    EXPECT_EQ(energy_oracle(IntSet{0, 1, 3}), 15);
    EXPECT_EQ(energy_oracle(IntSet{0, 1, 2}), 19);
    EXPECT_EQ(oracle::quadruple_energy({0, 1, 3}), 15u);
    EXPECT_EQ(oracle::quadruple_energy({0, 1, 2}), 19u);
}

TEST(EnergyOracle, MatchesQuadrupleCountUpTo40)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const IntSet a = random_set(rng, 40, 60);
        EXPECT_EQ(energy_oracle(a), static_cast<unsigned long>(oracle::quadruple_energy(small(a)))) << a.to_string();
    }
}

TEST(EnergyOracle, BigElementsTakeTheArbitraryPrecisionPath)
{
    // {1, 10^30, 2*10^30} is a 3-term progression: energy 19.
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, 30);
    EXPECT_EQ(energy_oracle(IntSet(std::vector<BigInt>{1, BigInt(t + 1), BigInt(2 * t + 1)})), 19);
    EXPECT_EQ(energy_oracle(IntSet(std::vector<BigInt>{1, t, BigInt(t * t)})), 15);
}

TEST(DifferenceProfile, Examples)
{
    const auto p = difference_profile(IntSet{0, 1, 2});
    EXPECT_EQ(p.n, 3u);
    EXPECT_EQ(p.positive, (std::map<BigInt, std::uint64_t>{{1, 2}, {2, 1}}));
    EXPECT_TRUE(difference_profile(IntSet{42}).positive.empty());
    EXPECT_EQ(difference_profile(IntSet{42}).n, 1u);
    EXPECT_EQ(difference_profile(IntSet{1, 10, 100}).positive,
              (std::map<BigInt, std::uint64_t>{{9, 1}, {90, 1}, {99, 1}}));
}

TEST(DifferenceProfile, MirroredReads)
{
    const auto p = difference_profile(IntSet{0, 1, 2});
    EXPECT_EQ(p.d(0), 3u);
    EXPECT_EQ(p.d(1), 2u);
    EXPECT_EQ(p.d(-1), 2u);
    EXPECT_EQ(p.d(-2), 1u);
    EXPECT_EQ(p.d(5), 0u);
}

TEST(DifferenceProfile, MatchesPairEnumeration)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const IntSet a = random_set(rng, 30, 100);
        const auto p = difference_profile(a);
        const auto expected = oracle::positive_differences(small(a));
        ASSERT_EQ(p.positive.size(), expected.size());
        for (const auto& [x, c] : expected) {
            EXPECT_EQ(p.d_plus(x), c);
        }
    }
}

TEST(EnergyFromProfile, Examples)
{
    EXPECT_EQ(energy_from_profile(difference_profile(IntSet{0, 1, 2})), 19);
    EXPECT_EQ(energy_from_profile(difference_profile(IntSet{-3})), 1);
    EXPECT_EQ(energy_from_profile(difference_profile(IntSet{1, 10, 100})), 15);
}

TEST(MaxEnergy, Examples)
{
    EXPECT_EQ(max_energy(0), 0);
    EXPECT_EQ(max_energy(1), 1);
    EXPECT_EQ(max_energy(2), 6);
    EXPECT_EQ(max_energy(3), 19);
    EXPECT_EQ(max_energy(10), 670);
}

TEST(AffineImage, Examples)
{
    EXPECT_EQ(affine_image(IntSet{0, 1, 2}, 1, 0), (IntSet{0, 1, 2}));
    EXPECT_EQ(affine_image(IntSet{0, 1, 2}, -1, 2), (IntSet{0, 1, 2}));
    EXPECT_EQ(affine_image(IntSet{1, 2, 3}, 3, -3), (IntSet{0, 3, 6}));
    EXPECT_EQ(energy_oracle(IntSet{0, 3, 6}), 19);
    EXPECT_THROW(affine_image(IntSet{1, 2}, 0, 1), PreconditionError);
}

TEST(IncrementalExtend, Examples)
{
    EXPECT_EQ(incremental_energy_extend(IntSet{1, 2, 3}, 19, 10), 32);
    EXPECT_EQ(oracle::quadruple_energy({1, 2, 3, 10}), 32u);
    EXPECT_EQ(incremental_energy_extend(IntSet{1, 2, 3}, 19, 4), 44);
    EXPECT_EQ(incremental_energy_extend(IntSet{8}, 1, 9), 6);
    EXPECT_THROW(incremental_energy_extend(IntSet{1, 2, 3}, 19, 3), PreconditionError);
    EXPECT_THROW(incremental_energy_extend(IntSet{}, 0, 3), PreconditionError);
}

TEST(Normalize, Examples)
{
    EXPECT_EQ(normalize(IntSet{10, 20, 40}), (IntSet{0, 1, 3}));
    EXPECT_EQ(normalize(IntSet{0, 1, 2}), (IntSet{0, 1, 2}));
    EXPECT_EQ(normalize(IntSet{5, 6, 8}), (IntSet{0, 1, 3}));
    EXPECT_EQ(normalize(IntSet{5, 7, 8}), (IntSet{0, 1, 3}));
    EXPECT_THROW(normalize(IntSet{4}), PreconditionError);
}

// Property battery: three routes agree, bounds, congruence, affine invariance.
TEST(EnergyProperties, RandomSets)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        const IntSet a = random_set(rng, 60, 1'000'000'000L);
        const EnergyValue e = energy_oracle(a);
        ASSERT_EQ(energy_from_profile(difference_profile(a)), e);

        if (!a.empty()) {
            IntSet built{a.min().get_si()};
            EnergyValue running = 1;
            for (std::size_t i = 1; i < a.size(); ++i) {
                running = incremental_energy_extend(built, running, a[i]);
                std::vector<BigInt> v(built.begin(), built.end());
                v.push_back(a[i]);
                built = IntSet(std::move(v));
            }
            ASSERT_EQ(running, e);

            const BigInt n(static_cast<unsigned long>(a.size()));
            EXPECT_GE(e, n * n);
            EXPECT_LE(e, n * n * n);
            EXPECT_EQ(BigInt(e % 4), BigInt(n % 4));
        }

        if (a.size() >= 2) {
            long s = coef(rng);
            s = s == 0 ? 1 : s;
            const IntSet b = affine_image(a, s, coef(rng));
            EXPECT_EQ(energy_oracle(b), e);
            EXPECT_EQ(normalize(b), normalize(a));

            const auto p = difference_profile(a);
            std::uint64_t mass = 0;
            for (const auto& [x, c] : p.positive) {
                mass += c;
            }
            EXPECT_EQ(mass, a.size() * (a.size() - 1) / 2);
            EXPECT_EQ(p.positive.rbegin()->first, a.diameter());
            EXPECT_EQ(p.d_plus(a.diameter()), 1u);
        }
    }
}

TEST(EnergyProperties, MaximumOnlyForProgressions)
{
    // Over all 5-subsets of {0..9}: E = max_energy(5) iff normal form is {0..4}.
    const IntSet ap = IntSet::range(0, 4);
    std::vector<long> cur;
    auto rec = [&](auto&& self, long from) -> void {
        if (cur.size() == 5) {
            std::vector<BigInt> v(cur.begin(), cur.end());
            const IntSet a(std::move(v));
            EXPECT_EQ(energy_oracle(a) == max_energy(5), normalize(a) == ap) << a.to_string();
            return;
        }
        for (long x = from; x <= 9; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

TEST(Serialize, IntSetRoundTripPreservesPrecision)
{
    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    const IntSet a(std::vector<BigInt>{-3, 0, big});
    const auto j = to_json(a);
    EXPECT_EQ(j.dump(), "[\"-3\",\"0\",\"10000000000000000000000000000000000000000\"]");
    EXPECT_EQ(int_set_from_json(j), a);
    EXPECT_THROW(int_set_from_json(nlohmann::json::parse("[\"1\",\"1\"]")), PreconditionError);
    EXPECT_THROW(int_set_from_json(nlohmann::json::parse("[\"x\"]")), PreconditionError);
}

TEST(Serialize, ProfileJsonShape)
{
    const auto p = difference_profile(IntSet{0, 1, 2});
    const auto j = to_json(p);
    EXPECT_EQ(j.dump(), "{\"n\":3,\"positive\":{\"1\":2,\"2\":1}}");
    EXPECT_EQ(profile_from_json(j), p);
}

TEST(Serialize, ParseIntList)
{
    EXPECT_EQ(parse_int_list("0,1,2"), (IntSet{0, 1, 2}));
    EXPECT_EQ(parse_int_list(" -4 7, 3"), (IntSet{-4, 3, 7}));
    EXPECT_THROW(parse_int_list("1,a"), PreconditionError);
}
