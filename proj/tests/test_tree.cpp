#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include <macdonald/macdonald_tree.hpp>

#include "oracles.hpp"

using namespace macdonald;

namespace {

// Odd partitions of n from the chain-count oracle.
std::set<partition> odd_by_oracle(int n)
{
    std::set<partition> out;
    for (const auto& p : oracle::all_partitions(n))
        if (oracle::syt_count(p) % 2 == 1)
            out.insert(p);
    return out;
}

} // namespace

TEST(RankedTree, BasicShape)
{
    ranked_tree<int> t(3, 7, mark::hook);
    const auto a = t.add_child(0, 8);
    const auto b = t.add_child(0, std::nullopt, mark::hook | mark::one_dimensional);
    t.add_child(a, 9);
    EXPECT_EQ(t.size(), 4U);
    EXPECT_EQ(t.root_rank(), 3);
    EXPECT_EQ(t.max_rank(), 5);
    EXPECT_EQ(t[b].rank, 4);
    EXPECT_EQ(t.count_at_rank(4), 2U);
    EXPECT_EQ(t.count_at_rank(4, mark::hook), 1U);
    EXPECT_EQ(t.edge_count(), 3U);
    EXPECT_EQ(t.subtree_at(a).size(), 2U);
    EXPECT_FALSE(t.without_payloads()[0].payload);
    EXPECT_THROW(t.add_child(99), error);
}

TEST(RankedTree, IsomorphismIgnoresChildOrderAndOffset)
{
    ranked_tree<int> a(0), b(10);
    const auto a1 = a.add_child(0);
    a.add_child(0);
    a.add_child(a1);
    b.add_child(0);
    const auto b2 = b.add_child(0, std::nullopt, mark::hook);
    b.add_child(b2);
    EXPECT_TRUE(tree_isomorphic(a, b));
    EXPECT_FALSE(tree_isomorphic(a, b, true));

    ranked_tree<int> path(0);
    path.add_child(path.add_child(path.add_child(0)));
    EXPECT_FALSE(tree_isomorphic(a, path));
}

TEST(Dot, EdgeColours)
{
    EXPECT_STREQ(edge_color(mark::hook | mark::one_dimensional, mark::hook | mark::one_dimensional, dot_color_all), "red");
    EXPECT_STREQ(edge_color(mark::hook, mark::hook | mark::one_dimensional, dot_color_all), "green");
    EXPECT_STREQ(edge_color({}, mark::hook, dot_color_all), "blue");
    EXPECT_STREQ(edge_color(mark::hook, mark::hook, dot_plain), "blue");

    const auto dot = export_dot(subtree(partition(), 4));
    EXPECT_NE(dot.find("digraph macdonald"), std::string::npos);
    EXPECT_NE(dot.find("[3,1]"), std::string::npos);
    EXPECT_NE(dot.find("color=red"), std::string::npos);
    EXPECT_NE(dot.find("color=green"), std::string::npos);
    // Every node up to rank 4 is a hook.
    EXPECT_EQ(dot.find("color=blue"), std::string::npos);
    EXPECT_NE(export_dot(subtree(partition(), 5)).find("color=blue"), std::string::npos);
}

TEST(Parent, Examples)
{
    EXPECT_EQ(parent({3, 2}), (partition{3, 1}));
    EXPECT_EQ(parent({1}), partition());
    EXPECT_EQ(parent({2, 1, 1}), (partition{1, 1, 1}));
    try {
        parent({});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_argument);
    }
    try {
        parent({2, 2});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_odd);
    }
}

TEST(Children, Examples)
{
    EXPECT_EQ(children({}), (std::vector<partition>{{1}}));
    EXPECT_EQ(children({3, 2}), (std::vector<partition>{{4, 2}, {3, 3}}));
    EXPECT_EQ(children({2, 1, 1}), (std::vector<partition>{{2, 2, 1}}));
    EXPECT_EQ(children({2, 2, 1}), (std::vector<partition>{{2, 2, 2}, {2, 2, 1, 1}}));
    EXPECT_THROW(children({2, 1}), error);
}

TEST(Children, ParentInverse)
{
    for (int n = 0; n <= 16; ++n)
        for (const auto& lambda : enumerate_odd(n))
            for (const auto& c : children(lambda))
                ASSERT_EQ(parent(c), lambda) << c;
}

TEST(EnumerateOdd, SmallRanks)
{
    EXPECT_EQ(enumerate_odd(0), (std::vector<partition>{partition()}));
    EXPECT_EQ(enumerate_odd(1), (std::vector<partition>{{1}}));
    EXPECT_EQ(enumerate_odd(4).size(), 4U);
    EXPECT_THROW(enumerate_odd(-1), error);
}

TEST(EnumerateOdd, MatchesOracleSet)
{
    for (int n = 0; n <= 22; ++n) {
        const auto fast = enumerate_odd(n);
        const std::set<partition> as_set(fast.begin(), fast.end());
        ASSERT_EQ(as_set.size(), fast.size()) << "duplicates at " << n;
        ASSERT_EQ(as_set, odd_by_oracle(n)) << n;
    }
}

TEST(EnumerateOdd, CountsToSixty)
{
    EXPECT_EQ(enumerate_odd(45).size(), 1024U);
    EXPECT_EQ(enumerate_odd(40).size(), 256U);
    for (int n = 0; n <= 60; ++n)
        ASSERT_EQ(enumerate_odd(n).size(), count_odd(static_cast<std::uint64_t>(n))) << n;
}

TEST(EnumerateOdd, Deterministic) { EXPECT_EQ(enumerate_odd(37), enumerate_odd(37)); }

TEST(UniqueParent, OracleCheckToTwenty)
{
    for (int n = 1; n <= 20; ++n)
        for (const auto& lambda : odd_by_oracle(n)) {
            int odd_below = 0;
            for (const auto& q : oracle::lower_covers(lambda.parts_vector()))
                odd_below += oracle::syt_count(q) % 2 == 1 ? 1 : 0;
            ASSERT_EQ(odd_below, 1) << lambda;
        }
}

TEST(Subtree, TreeUpToRankSeven)
{
    const auto t = subtree({}, 7);
    std::map<int, std::size_t> per_rank;
    for (const auto& n : t.nodes())
        ++per_rank[n.rank];
    for (int r = 0; r <= 7; ++r)
        EXPECT_EQ(per_rank[r], count_odd(static_cast<std::uint64_t>(r))) << r;
    EXPECT_EQ(t.count_at_rank(7, mark::hook), 4U);
    EXPECT_EQ(t.count_at_rank(7, mark::one_dimensional), 2U);
    EXPECT_EQ(t.count_at_rank(15), 0U);
    EXPECT_THROW(subtree({2, 1}, 2), error);
}

TEST(Subtree, TopRankCounts)
{
    const auto t = subtree({}, 15);
    EXPECT_EQ(t.count_at_rank(15), 64U);
    EXPECT_EQ(t.count_at_rank(15, mark::hook), 8U);
    EXPECT_EQ(t.count_at_rank(15, mark::one_dimensional), 2U);
}

TEST(SelfSimilarity, Examples)
{
    const auto m = self_similarity_map({4}, 1);
    EXPECT_EQ(m.size(), 2U);
    EXPECT_EQ(self_similarity_map({}, 3).size(), subtree({}, 7).size());
    EXPECT_THROW(self_similarity_map({3, 2}, 1), error);   // 5 is odd
    EXPECT_THROW(self_similarity_map({4}, 7), error);      // v out of range
    EXPECT_NO_THROW(self_similarity_map({3, 1}, 2));
    EXPECT_THROW(self_similarity_map({2, 2}, 1), error);   // even
}

TEST(SelfSimilarity, SampledPairs)
{
    std::mt19937 rng(7);
    int done = 0;
    while (done < 30) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 10)(rng);
        const auto odd = enumerate_odd(n);
        const auto& lambda = odd[std::uniform_int_distribution<std::size_t>(0, odd.size() - 1)(rng)];
        const int v = std::uniform_int_distribution<int>(1, v2(static_cast<std::uint64_t>(n)))(rng);
        const auto m = self_similarity_map(lambda, v);
        ASSERT_EQ(m.size(), subtree({}, (1 << v) - 1).size());
        ++done;
    }
}

TEST(Rays, SmallK)
{
    for (int k = 1; k <= 3; ++k) {
        const auto r = verify_rays(k);
        EXPECT_TRUE(r.ok) << k;
        EXPECT_EQ(r.roots, count_odd(std::uint64_t{1} << k));
        EXPECT_EQ(r.extinct, r.roots - 2);
    }
    EXPECT_THROW(verify_rays(6), error);
}

TEST(Rays, FourteenOfSixteenExtinctAtK4)
{
    const auto r = verify_rays(4);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.roots, 16U);
    EXPECT_EQ(r.extinct, 14U);
}

TEST(RecursiveTree, MatchesRealTree)
{
    EXPECT_TRUE(tree_isomorphic(recursive_tree_base(), subtree({}, 3), true));
    for (int k = 1; k <= 4; ++k) {
        const auto built = build_recursive_tree(k);
        const auto real = subtree({}, (1 << (k + 1)) - 1);
        EXPECT_EQ(built.size(), real.size());
        EXPECT_TRUE(tree_isomorphic(built, real, true)) << k;
    }
    EXPECT_THROW(build_recursive_tree(0), error);
    EXPECT_THROW(build_recursive_tree(7), error);
}

TEST(EnumerateOdd, SameOrderAsReconstruct)
{
    for (int n = 2; n <= 40; ++n) {
        const int p = std::bit_floor(static_cast<unsigned>(n));
        std::vector<partition> expected;
        for (const auto& c : enumerate_odd(n - p))
            for (int slot = 0; slot < p; ++slot) {
                core_quotient cq{p, c, std::vector<partition>(static_cast<std::size_t>(p))};
                cq.quotient[static_cast<std::size_t>(slot)] = partition{1};
                expected.push_back(reconstruct(cq));
            }
        ASSERT_EQ(enumerate_odd(n), expected) << n;
    }
}
