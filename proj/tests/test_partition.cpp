#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <macdonald/partition.hpp>

#include "oracles.hpp"

using namespace macdonald;

namespace {

std::multiset<int> as_multiset(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::set<cell> as_set(const rim_hook& r) { return {r.cells().begin(), r.cells().end()}; }

} // namespace

TEST(Partition, RejectsInvalidParts)
{
    EXPECT_THROW(partition({2, 3}), error);
    EXPECT_THROW(partition({2, 0}), error);
    EXPECT_NO_THROW(partition({3, 3, 1}));
    EXPECT_EQ(partition().size(), 0);
    EXPECT_TRUE(partition().empty());
}

TEST(Partition, TextForm)
{
    EXPECT_EQ(to_string(partition{3, 2, 1}), "[3,2,1]");
    EXPECT_EQ(to_string(partition()), "[]");
    EXPECT_EQ(parse_partition("[3, 2,1]"), (partition{3, 2, 1}));
    EXPECT_EQ(parse_partition(" [] "), partition());
    EXPECT_THROW(parse_partition("[1,2]"), error);
    EXPECT_THROW(parse_partition("3,2"), error);
    EXPECT_THROW(parse_partition("[3,]"), error);
    EXPECT_THROW(parse_partition("[a]"), error);
}

TEST(Partition, ConjugateAndColumns)
{
    const partition p{4, 2, 1};
    EXPECT_EQ(p.conjugate(), (partition{3, 2, 1, 1}));
    EXPECT_EQ(p.column_length(2), 2);
    EXPECT_EQ(p.column_length(5), 0);
    EXPECT_TRUE(p.contains({2, 2}));
    EXPECT_FALSE(p.contains({2, 3}));
}

TEST(HookLength, Examples)
{
    EXPECT_EQ(hook_length({2, 1}, {1, 1}), 3);
    EXPECT_EQ(hook_length({1}, {1, 1}), 1);
    EXPECT_EQ(hook_length({3, 2}, {1, 1}), 4);
    EXPECT_THROW(hook_length({2, 1}, {2, 2}), error);
    try {
        hook_length({1}, {1, 2});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::cell_not_in_diagram);
    }
}

TEST(HookMultiset, Examples)
{
    EXPECT_EQ(hook_multiset({2, 2}), (std::vector<int>{3, 2, 2, 1}));
    EXPECT_TRUE(hook_multiset({}).empty());
    EXPECT_EQ(hook_multiset({2, 1}), (std::vector<int>{3, 1, 1}));
}

TEST(HookMultiset, MatchesCellScan)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : oracle::all_partitions(n))
            ASSERT_EQ(as_multiset(hook_multiset(p)), oracle::hooks_by_scan(p)) << p;
}

TEST(Covers, Examples)
{
    EXPECT_EQ(removable_cells({2, 2}), (std::vector<cell>{{2, 2}}));
    EXPECT_EQ(addable_cells({}), (std::vector<cell>{{1, 1}}));
    EXPECT_EQ(removable_cells({3, 1}), (std::vector<cell>{{1, 3}, {2, 1}}));
    EXPECT_EQ(down_set({2, 1}), (std::vector<partition>{{1, 1}, {2}}));
    EXPECT_EQ(up_set({}), (std::vector<partition>{{1}}));
    EXPECT_EQ(down_set({5}), (std::vector<partition>{{4}}));
    EXPECT_EQ(up_set({2, 1}), (std::vector<partition>{{3, 1}, {2, 2}, {2, 1, 1}}));
}

TEST(Covers, DownAndUpAreInverse)
{
    for (int n = 0; n <= 12; ++n) {
        for (const auto& lambda : oracle::all_partitions(n)) {
            for (const auto& mu : down_set(lambda)) {
                auto up = up_set(mu);
                ASSERT_NE(std::ranges::find(up, lambda), up.end()) << lambda << " " << mu;
            }
            for (const auto& nu : up_set(lambda)) {
                auto down = down_set(nu);
                ASSERT_NE(std::ranges::find(down, lambda), down.end()) << lambda << " " << nu;
            }
        }
    }
}

TEST(Covers, MatchOracleLowerCovers)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : oracle::all_partitions(n)) {
            const auto down = down_set(lambda);
            std::set<partition> ours(down.begin(), down.end());
            std::set<partition> ref;
            for (auto& q : oracle::lower_covers(lambda.parts_vector()))
                ref.insert(partition(q));
            ASSERT_EQ(ours, ref) << lambda;
        }
}

TEST(Covers, OneDifferential)
{
    for (int n = 0; n <= 15; ++n)
        for (const auto& lambda : partitions_of(n))
            ASSERT_EQ(down_set(lambda).size() + 1, up_set(lambda).size()) << lambda;
}

TEST(IsHook, Examples)
{
    EXPECT_TRUE(is_hook({4, 1, 1}));
    EXPECT_FALSE(is_hook({2, 2}));
    EXPECT_TRUE(is_hook({1}));
    EXPECT_FALSE(is_hook({}));
}

TEST(RimHooks, Examples)
{
    const auto two = rim_hooks_of_length({2, 2}, 2);
    ASSERT_EQ(two.size(), 2U);
    EXPECT_EQ(as_set(two[0]), (std::set<cell>{{1, 2}, {2, 2}}));
    EXPECT_EQ(as_set(two[1]), (std::set<cell>{{2, 1}, {2, 2}}));

    const auto four = rim_hooks_of_length({3, 2}, 4);
    ASSERT_EQ(four.size(), 1U);
    EXPECT_EQ(four[0].cells(), (std::vector<cell>{{2, 1}, {2, 2}, {1, 2}, {1, 3}}));
    EXPECT_EQ(four[0].foot(), (cell{2, 1}));
    EXPECT_EQ(four[0].hand(), (cell{1, 3}));

    EXPECT_TRUE(rim_hooks_of_length({1}, 2).empty());
    EXPECT_THROW(rim_hooks_of_length({1}, 0), error);
}

TEST(RimHooks, MatchBorderStripSearch)
{
    for (int n = 1; n <= 11; ++n)
        for (const auto& lambda : oracle::all_partitions(n))
            for (int h = 1; h <= n; ++h) {
                std::set<std::set<cell>> ours;
                for (const auto& r : rim_hooks_of_length(lambda, h)) {
                    ours.insert(as_set(r));
                    ASSERT_EQ(r.size(), static_cast<std::size_t>(h));
                }
                const auto ref = oracle::border_strips(lambda, h);
                ASSERT_EQ(ours, std::set<std::set<cell>>(ref.begin(), ref.end())) << lambda << " h=" << h;
            }
}

TEST(RimHooks, CountEqualsHookMultiplicity)
{
    for (int n = 0; n <= 15; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const auto hooks = hook_multiset(lambda);
            for (int h = 1; h <= n; ++h)
                ASSERT_EQ(rim_hooks_of_length(lambda, h).size(),
                          static_cast<std::size_t>(std::ranges::count(hooks, h)))
                    << lambda << " h=" << h;
        }
}

TEST(RimHooks, HandFootAndAdjacency)
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int h = 1; h <= n; ++h)
                for (const auto& r : rim_hooks_of_length(lambda, h)) {
                    EXPECT_FALSE(r.contains(r.hand().north()));
                    EXPECT_FALSE(r.contains(r.hand().east()));
                    EXPECT_FALSE(r.contains(r.foot().west()));
                    EXPECT_FALSE(r.contains(r.foot().south()));
                    for (std::size_t i = 1; i < r.size(); ++i) {
                        const cell a = r.cells()[i - 1], b = r.cells()[i];
                        EXPECT_TRUE(b == a.east() || b == a.north());
                    }
                    // Removing it leaves a partition.
                    EXPECT_NO_THROW(remove_rim_hook(lambda, r));
                }
}

TEST(PartitionsOf, Examples)
{
    EXPECT_EQ(partitions_of(0), (std::vector<partition>{partition()}));
    EXPECT_EQ(partitions_of(4), (std::vector<partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    EXPECT_EQ(partitions_of(5).size(), 7U);
    EXPECT_THROW(partitions_of(61), error);
    EXPECT_THROW(partitions_of(10, 9), error);
}

TEST(PartitionsOf, CountsMatchPentagonalRecurrence)
{
    const auto p = oracle::partition_numbers(30);
    for (int n = 0; n <= 30; ++n) {
        const auto all = partitions_of(n);
        ASSERT_EQ(all.size(), p[static_cast<std::size_t>(n)]) << n;
        ASSERT_TRUE(std::ranges::is_sorted(all, std::greater<>())) << n;
    }
    EXPECT_EQ(partitions_of(12), oracle::all_partitions(12));
}
