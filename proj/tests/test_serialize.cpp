#include <random>

#include <gtest/gtest.h>

#include <toprand/serialize.hpp>

using namespace toprand;

TEST(Serialize, PermutationRoundTrip)
{
    for (const auto& p : all_permutations(4))
        EXPECT_EQ(parse_permutation(Json::parse(serialize(p).dump())), p);
    EXPECT_EQ(serialize(Permutation({2, 1, 3})).dump(), "[2,1,3]");
}

TEST(Serialize, InjectionRoundTrip)
{
    const Injection inj{2, {3, 1}};
    const auto back = parse_injection(serialize(inj));
    EXPECT_EQ(back.a, 2);
    EXPECT_EQ(back.targets, inj.targets);
    EXPECT_THROW(parse_injection(Json::parse(R"({"a":3,"targets":[1]})")), InvalidArgument);
}

TEST(Serialize, AlgebraElementRoundTrip)
{
    const auto x = multiply(top_to_random(2, 4), top_to_random(3, 4));
    const std::string wire = serialize(x).dump();
    EXPECT_EQ(parse_algebra_element(Json::parse(wire)), x);
    AlgebraElement big(2);
    big.add(Permutation::identity(2), ipow(10, 40));
    EXPECT_EQ(parse_algebra_element(serialize(big)), big);
    EXPECT_NE(serialize(big).dump().find("10000000000000000000000000000000000000000"), std::string::npos);
}

TEST(Serialize, PartitionAndTupleRoundTrip)
{
    const SegmentedPartition alpha{{{1, 3}, {2}}};
    EXPECT_EQ(serialize(alpha).dump(), "[[1,3],[2]]");
    EXPECT_EQ(parse_partition(serialize(alpha)), alpha);
    const ShuffleTuple t{{Permutation({2, 1, 3}), Permutation::identity(3)}};
    EXPECT_EQ(parse_tuple(Json::parse(serialize(t).dump())), t);
}

TEST(Serialize, GroupAndGPermutationRoundTrip)
{
    const auto s3 = FiniteGroup::symmetric3();
    EXPECT_EQ(parse_group(Json::parse(serialize(s3).dump())), s3);
    const GPermutation s({{2, 5}, {1, 0}, {3, 2}});
    EXPECT_EQ(parse_gpermutation(serialize(s)), s);
    EXPECT_EQ(serialize(GPermutation({{1, 1}})).dump(), R"([{"face":1,"card":1}])");
    const auto h = hat_top_to_random(2, 3, s3);
    EXPECT_EQ(parse_galgebra_element(Json::parse(serialize(h).dump())), h);
}

TEST(Serialize, RationalAndCoefficients)
{
    const Rational r(7, 12);
    EXPECT_EQ(serialize(r).dump(), R"({"num":"7","den":"12"})");
    EXPECT_EQ(parse_rational(serialize(r)), r);
    const auto coeffs = expansion({5, {2, 3, 1}});
    EXPECT_EQ(parse_coefficients(Json::parse(serialize(coeffs).dump())), coeffs);
    std::map<int, BigInt> ordered{{2, 1}, {10, 3}};
    EXPECT_EQ(serialize(ordered).dump(), R"({"2":"1","10":"3"})");
}

TEST(Serialize, RejectsBadInput)
{
    EXPECT_THROW(parse_permutation(Json::parse("[1,1]")), InvalidArgument);
    EXPECT_THROW(parse_permutation(Json::parse(R"({"a":1})")), InvalidArgument);
    EXPECT_THROW(parse_permutation(Json::parse(R"(["x"])")), InvalidArgument);
    EXPECT_THROW(parse_rational(Json::parse(R"({"num":"1","den":"0"})")), InvalidArgument);
    EXPECT_THROW(parse_rational(Json::parse(R"({"num":1,"den":"2"})")), InvalidArgument);
    EXPECT_THROW(parse_algebra_element(Json::parse(R"({"n":2,"terms":[{"deck":[1,2],"coeff":"1e3"}]})")),
                 InvalidArgument);
    EXPECT_THROW(parse_algebra_element(Json::parse(R"({"n":2,"terms":[{"deck":[1,2,3],"coeff":"1"}]})")),
                 InvalidArgument);
    EXPECT_THROW(parse_group(Json::parse(R"({"order":2,"cayley":[[0,1],[1,1]]})")), InvalidArgument);
    EXPECT_THROW(parse_coefficients(Json::parse("[1]")), InvalidArgument);
    EXPECT_THROW(parse_coefficients(Json::parse(R"({"x":"1"})")), InvalidArgument);
}
