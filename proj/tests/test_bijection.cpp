#include <map>
#include <set>

#include <gtest/gtest.h>

#include <toprand/bijection.hpp>
#include <toprand/coefficients.hpp>
#include <toprand/shuffle_algebra.hpp>

#include "oracles.hpp"

using namespace toprand;

namespace {

ShuffleTuple tuple_of(const std::vector<const Permutation*>& chosen)
{
    ShuffleTuple t;
    for (const auto* p : chosen)
        t.sigmas.push_back(*p);
    return t;
}

const std::vector<ShuffleSpec> kSpecs{
    {3, {1, 1}}, {3, {1, 1, 1}}, {4, {2, 1}}, {4, {2, 2}}, {3, {2, 1, 1}}, {4, {1, 3}}, {5, {2, 2, 1}},
};

} // namespace

TEST(Phi, SingleShuffleGivesSingletons)
{
    for (int n = 1; n <= 5; ++n)
        for (int a = 1; a <= n; ++a) {
            const ShuffleSpec spec{n, {a}};
            for (const auto& sigma : top_to_random_terms(a, n)) {
                const auto alpha = phi({{sigma}}, spec);
                ASSERT_EQ(alpha.part_count(), a);
                for (int i = 0; i < a; ++i)
                    EXPECT_EQ(alpha.parts[i], std::vector<int>{i + 1});
            }
        }
}

TEST(Phi, TwoSingleCardMoves)
{
    const ShuffleSpec spec{3, {1, 1}};
    const Permutation stay({1, 2, 3}), bury({2, 1, 3});
    for (const auto& second : top_to_random_terms(1, 3)) {
        EXPECT_EQ(phi({{stay, second}}, spec).parts, (std::vector<std::vector<int>>{{1, 2}}));
        EXPECT_EQ(phi({{bury, second}}, spec).parts, (std::vector<std::vector<int>>{{1}, {2}}));
    }
}

TEST(Phi, Hitters)
{
    const ShuffleSpec spec{4, {2, 1}};
    const ShuffleTuple t{{Permutation({2, 1, 3, 4}), Permutation({2, 3, 1, 4})}};
    // sigma_1 sends cards 1, 2 to positions 2, 1; sigma_2 sends card 1 to 3.
    EXPECT_EQ(hitters(t, spec), (std::vector<int>{2, 1, 3}));
}

TEST(Phi, ImageIsSegmentedAndProductIsTermOfBj)
{
    for (const auto& spec : kSpecs) {
        std::set<std::vector<std::vector<int>>> allowed;
        for (int j = 1; j <= spec.total(); ++j)
            for (const auto& alpha : enumerate_segmented_partitions(spec, j))
                allowed.insert(alpha.parts);
        for_each_shuffle_tuple(spec, 1'000'000, [&](const auto& chosen, const Permutation& product) {
            const auto alpha = phi(tuple_of(chosen), spec);
            EXPECT_TRUE(allowed.count(alpha.parts));
            EXPECT_TRUE(is_term_of_top_to_random(product, alpha.part_count()));
            EXPECT_LE(alpha.part_count(), spec.n);
        });
    }
}

TEST(Phi, RoundTrip)
{
    for (const auto& spec : kSpecs) {
        for_each_shuffle_tuple(spec, 1'000'000, [&](const auto& chosen, const Permutation& product) {
            const ShuffleTuple t = tuple_of(chosen);
            EXPECT_EQ(phi_inverse(phi(t, spec), product, spec), t);
        });
    }
}

TEST(PhiInverse, RoundTripFromPartitionSide)
{
    for (const auto& spec : kSpecs)
        for (int j = spec.lowest_j(); j <= spec.highest_j(); ++j)
            for (const auto& t : top_to_random_terms(j, spec.n))
                for (const auto& alpha : enumerate_segmented_partitions(spec, j)) {
                    const auto tuple = phi_inverse(alpha, t, spec);
                    EXPECT_EQ(tuple_product(tuple), t);
                    EXPECT_EQ(phi(tuple, spec), alpha);
                }
}

TEST(PhiInverse, FibreSizesMatchCoefficient)
{
    // Tuples grouped by (part count, product): every fibre over a term of B_j has |Q_j| members.
    const ShuffleSpec spec{4, {2, 2}};
    std::map<std::pair<int, Permutation>, int> fibres;
    for_each_shuffle_tuple(spec, 1'000'000, [&](const auto& chosen, const Permutation& product) {
        ++fibres[{phi(tuple_of(chosen), spec).part_count(), product}];
    });
    for (int j = spec.lowest_j(); j <= spec.highest_j(); ++j)
        for (const auto& t : top_to_random_terms(j, spec.n)) {
            auto it = fibres.find({j, t});
            ASSERT_NE(it, fibres.end());
            EXPECT_EQ(BigInt(it->second), q_cardinality(spec, j));
        }
    std::size_t expected_keys = 0;
    for (int j = spec.lowest_j(); j <= spec.highest_j(); ++j)
        expected_keys += falling_factorial(spec.n, j).convert_to<std::size_t>();
    EXPECT_EQ(fibres.size(), expected_keys);
}

TEST(Phi, RejectsMalformedTuples)
{
    const ShuffleSpec spec{3, {1, 1}};
    const Permutation id = Permutation::identity(3);
    EXPECT_THROW(phi({{id}}, spec), InvalidArgument);                          // wrong length
    EXPECT_THROW(phi({{id, Permutation({3, 1, 2})}}, spec), InvalidArgument); // not in B_1
    EXPECT_THROW(phi({{id, Permutation::identity(4)}}, spec), InvalidArgument);
}

TEST(PhiInverse, RejectsBadInput)
{
    const ShuffleSpec spec{4, {1, 1, 1}};
    const SegmentedPartition two{{{1}, {2, 3}}};
    // t must be a term of B_2.
    EXPECT_THROW(phi_inverse(two, Permutation({4, 3, 2, 1}), spec), InvalidArgument);
    EXPECT_NO_THROW(phi_inverse(two, Permutation({3, 1, 2, 4}), spec));
    // Wrong element count.
    EXPECT_THROW(phi_inverse(SegmentedPartition{{{1}, {2}}}, Permutation::identity(4), spec), InvalidArgument);
    // Part count above n.
    const ShuffleSpec wide{2, {1, 1, 1}};
    EXPECT_THROW(phi_inverse(SegmentedPartition{{{1}, {2}, {3}}}, Permutation::identity(2), wide),
                 InvalidArgument);
    // Segment collision.
    const ShuffleSpec pair{3, {2}};
    EXPECT_THROW(phi_inverse(SegmentedPartition{{{1, 2}}}, Permutation::identity(3), pair), InvalidArgument);
}
