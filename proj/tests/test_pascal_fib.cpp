#include <gtest/gtest.h>

#include <macdonald/fibonacci_poset.hpp>
#include <macdonald/hooks_pascal.hpp>
#include <macdonald/parity.hpp>

#include "oracles.hpp"

using namespace macdonald;

TEST(Pascal, ToHook)
{
    EXPECT_EQ(to_hook({0, 0}), (partition{1}));
    EXPECT_EQ(to_hook({2, 3}), (partition{3, 1, 1, 1}));
    EXPECT_THROW(to_hook({-1, 0}), error);
    EXPECT_TRUE(is_odd_point({1, 2}));  // C(3,1) = 3
    EXPECT_FALSE(is_odd_point({2, 2})); // C(4,2) = 6
}

TEST(Pascal, OddGraphRowSizes)
{
    const auto t = odd_pascal_graph(40);
    for (int n = 0; n <= 40; ++n) {
        std::size_t odd = 0;
        for (auto c : oracle::binomial_row(n))
            odd += c % 2;
        ASSERT_EQ(t.count_at_rank(n), odd) << n;
        ASSERT_EQ(t.count_at_rank(n, mark::one_dimensional), n == 0 ? 1U : 2U);
    }
    EXPECT_EQ(odd_pascal_graph(0).size(), 1U);
    EXPECT_THROW(odd_pascal_graph(-1), error);
}

TEST(Pascal, HooksSubgraph)
{
    const auto h1 = hooks_subgraph(1);
    ASSERT_EQ(h1.size(), 2U);
    EXPECT_TRUE(h1[0].payload->empty());
    EXPECT_EQ(*h1[1].payload, (partition{1}));
    const auto h20 = hooks_subgraph(20);
    for (const auto& n : h20.nodes())
        EXPECT_TRUE(n.payload->empty() || is_hook(*n.payload));
}

TEST(Pascal, EmbeddingHolds)
{
    for (int n = 1; n <= 33; ++n)
        EXPECT_TRUE(verify_pascal_embedding(n)) << n;
    EXPECT_THROW(verify_pascal_embedding(0), error);
    EXPECT_NE(export_dot(odd_pascal_graph(4)).find("(1,0)"), std::string::npos);
}

TEST(Pascal, HookDimensionIsBinomial)
{
    for (int n = 0; n <= 20; ++n) {
        const auto row = oracle::binomial_row(n);
        for (int m = 0; m <= n; ++m)
            ASSERT_EQ(f_exact(to_hook({m, n - m})), row[static_cast<std::size_t>(m)]);
    }
}

TEST(FibWord, Basics)
{
    const fib_word w("212");
    EXPECT_EQ(w.rank(), 5);
    EXPECT_EQ(w.prepend('1').str(), "1212");
    EXPECT_THROW(fib_word("13"), error);
    EXPECT_EQ(to_string(fib_word()), "");
}

TEST(Fibonacci, RankSizesAndLabels)
{
    const auto z = build_fib(1, 4);
    const std::vector<std::size_t> sizes{1, 1, 2, 3, 5};
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(z.rank_size(n), sizes[static_cast<std::size_t>(n)]);
    EXPECT_EQ(z.label(0, 0), "0");
    EXPECT_EQ(z.label(1, 0), "1");
    std::set<std::string> rank3;
    for (std::size_t i = 0; i < z.rank_size(3); ++i) {
        rank3.insert(z.label(3, i));
        EXPECT_EQ(z.word(3, i)->rank(), 3);
    }
    EXPECT_EQ(rank3, (std::set<std::string>{"21", "12", "111"}));
    EXPECT_FALSE(build_fib(2, 3).word(2, 0));
    EXPECT_THROW(build_fib(0, 3), error);
    EXPECT_THROW(build_fib(1, 41), error);
    EXPECT_THROW(build_fib(3, 30, 1000), error);
    EXPECT_THROW(z.at_rank(5), error);
}

TEST(Fibonacci, DifferentialAndChains)
{
    for (int r = 1; r <= 3; ++r) {
        const auto p = build_fib(r, 10);
        EXPECT_TRUE(is_r_differential(p)) << r;
        EXPECT_TRUE(chains_consistent(p)) << r;
    }
    // Chains to the top of Z(1) at rank n sum-of-squares to n!.
    const auto z = build_fib(1, 10);
    for (int n = 0; n <= 10; ++n) {
        boost::multiprecision::cpp_int total = 0;
        for (std::size_t i = 0; i < z.rank_size(n); ++i)
            total += boost::multiprecision::cpp_int(z.chains(n, i)) * z.chains(n, i);
        EXPECT_EQ(total, factorial(n)) << n;
    }
}

TEST(Fibonacci, OddCounts)
{
    const auto z = build_fib(1, 20);
    EXPECT_EQ(count_odd_fib(z, 9), 16U);
    for (int n = 0; n <= 20; ++n)
        EXPECT_EQ(count_odd_fib(z, n), std::size_t{1} << (n / 2)) << n;
    try {
        count_odd_fib(z, 21);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::rank_out_of_range);
    }
}

TEST(Fibonacci, OddSubgraphs)
{
    const auto z1 = build_fib(1, 14);
    const auto t1 = odd_subgraph(z1);
    ASSERT_TRUE(std::holds_alternative<odd_tree>(t1));
    for (const auto& n : std::get<odd_tree>(t1).nodes())
        if (n.rank < 14) {
            EXPECT_EQ(n.children.size(), n.rank % 2 == 0 ? 1U : 2U);
        }
    EXPECT_NE(export_dot(z1, std::get<odd_tree>(t1)).find("digraph fibonacci"), std::string::npos);

    const auto t2 = odd_subgraph(build_fib(2, 8));
    ASSERT_TRUE(std::holds_alternative<odd_tree>(t2));
    for (const auto& n : std::get<odd_tree>(t2).nodes())
        if (n.rank < 8) {
            EXPECT_EQ(n.children.size(), 2U);
        }

    const auto t3 = odd_subgraph(build_fib(3, 6));
    ASSERT_TRUE(std::holds_alternative<odd_subgraph_violation>(t3));
    EXPECT_NE(std::get<odd_subgraph_violation>(t3).odd_parents, 1U);
}
