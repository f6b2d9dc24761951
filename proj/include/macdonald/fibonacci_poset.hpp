#pragma once

// Fibonacci r-differential posets built by reflection extension. Rank n+1
// consists of one reflected copy of each rank n-1 element x, covering
// exactly the rank n elements that cover x, followed by r fresh elements
// over each rank n element. r = 1 gives the Young-Fibonacci lattice Z(1),
// whose elements are labelled by words in {1, 2}: the reflection of x is
// 2x and the fresh element over y is 1y.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "ranked_tree.hpp"

namespace macdonald {

/// A word over {1, 2}; its rank is the digit sum.
class fib_word {
public:
    fib_word() = default;
    explicit fib_word(std::string digits)
        : digits_(std::move(digits))
    {
        for (char ch : digits_)
            if (ch != '1' && ch != '2')
                throw error(errc::invalid_argument, "fib_word digits must be 1 or 2");
    }

    const std::string& str() const noexcept { return digits_; }
    int rank() const noexcept
    {
        int r = 0;
        for (char ch : digits_)
            r += ch - '0';
        return r;
    }

    fib_word prepend(char digit) const { return fib_word(std::string(1, digit) + digits_); }

    friend bool operator==(const fib_word&, const fib_word&) = default;
    friend auto operator<=>(const fib_word&, const fib_word&) = default;

private:
    std::string digits_;
};

inline std::string to_string(const fib_word& w) { return w.str(); }

class diff_poset {
public:
    struct level {
        std::vector<std::uint32_t> down_offsets{0};
        std::vector<std::uint32_t> down; // indices into the previous level
        std::vector<std::uint32_t> up_offsets{0};
        std::vector<std::uint32_t> up; // indices into the next level
        std::vector<std::uint64_t> chains;
        std::vector<fib_word> words; // r == 1 only

        std::size_t size() const noexcept { return chains.size(); }
    };

    int r() const noexcept { return r_; }
    int max_rank() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    const level& at_rank(int n) const
    {
        if (n < 0 || n > max_rank())
            throw error(errc::rank_out_of_range, "rank " + std::to_string(n) + " not built");
        return levels_[static_cast<std::size_t>(n)];
    }
    std::size_t rank_size(int n) const { return at_rank(n).size(); }

    std::span<const std::uint32_t> down(int n, std::size_t i) const
    {
        const auto& l = at_rank(n);
        return {l.down.data() + l.down_offsets[i], l.down_offsets[i + 1] - l.down_offsets[i]};
    }

    /// Empty at the top rank, whose covers are not built.
    std::span<const std::uint32_t> up(int n, std::size_t i) const
    {
        const auto& l = at_rank(n);
        if (n == max_rank())
            return {};
        return {l.up.data() + l.up_offsets[i], l.up_offsets[i + 1] - l.up_offsets[i]};
    }

    /// Saturated chains from the bottom to (n, i), modulo 2^64. Exact when
    /// chains_exact(); the parity is exact regardless.
    std::uint64_t chains(int n, std::size_t i) const { return at_rank(n).chains.at(i); }
    bool chains_exact() const noexcept { return chains_exact_; }

    std::optional<fib_word> word(int n, std::size_t i) const
    {
        const auto& l = at_rank(n);
        if (l.words.empty())
            return std::nullopt;
        return l.words.at(i);
    }

    std::string label(int n, std::size_t i) const
    {
        if (auto w = word(n, i))
            return w->str().empty() ? std::string("0") : w->str();
        return std::to_string(n) + ":" + std::to_string(i);
    }

private:
    friend diff_poset build_fib(int r, int max_rank, std::size_t element_limit);

    int r_ = 1;
    bool chains_exact_ = true;
    std::vector<level> levels_;
};

inline constexpr int default_fib_rank_limit = 40;
inline constexpr std::size_t default_fib_element_limit = 8'000'000;

inline diff_poset build_fib(int r, int max_rank, std::size_t element_limit = default_fib_element_limit)
{
    if (r < 1)
        throw error(errc::invalid_argument, "r must be positive");
    if (max_rank < 0 || max_rank > default_fib_rank_limit)
        throw error(errc::limit_exceeded, "max_rank must lie in [0, " + std::to_string(default_fib_rank_limit) + "]");

    diff_poset p;
    p.r_ = r;
    const bool words = r == 1;

    diff_poset::level bottom;
    bottom.down_offsets.push_back(0);
    bottom.chains.push_back(1);
    if (words)
        bottom.words.emplace_back();
    p.levels_.push_back(std::move(bottom));

    std::size_t total = 1;
    for (int n = 0; n < max_rank; ++n) {
        auto& cur = p.levels_[static_cast<std::size_t>(n)];
        const std::size_t prev_size = n > 0 ? p.levels_[static_cast<std::size_t>(n - 1)].size() : 0;
        const std::size_t next_size = prev_size + static_cast<std::size_t>(r) * cur.size();
        total += next_size;
        if (total > element_limit)
            throw error(errc::limit_exceeded, "poset would exceed " + std::to_string(element_limit) + " elements");

        diff_poset::level next;
        next.chains.reserve(next_size);

        // Reflected copies of rank n - 1.
        if (n > 0) {
            const auto& prev = p.levels_[static_cast<std::size_t>(n - 1)];
            for (std::size_t x = 0; x < prev.size(); ++x) {
                std::uint64_t f = 0;
                for (auto k = prev.up_offsets[x]; k < prev.up_offsets[x + 1]; ++k) {
                    const auto y = prev.up[k];
                    next.down.push_back(y);
                    if (__builtin_add_overflow(f, cur.chains[y], &f))
                        p.chains_exact_ = false;
                }
                next.down_offsets.push_back(static_cast<std::uint32_t>(next.down.size()));
                next.chains.push_back(f);
                if (words)
                    next.words.push_back(prev.words[x].prepend('2'));
            }
        }
        // r fresh elements over each rank n element.
        for (std::size_t y = 0; y < cur.size(); ++y) {
            for (int j = 0; j < r; ++j) {
                next.down.push_back(static_cast<std::uint32_t>(y));
                next.down_offsets.push_back(static_cast<std::uint32_t>(next.down.size()));
                next.chains.push_back(cur.chains[y]);
                if (words)
                    next.words.push_back(cur.words[y].prepend('1'));
            }
        }

        // Up lists of rank n, from the down lists just built.
        std::vector<std::uint32_t> degree(cur.size(), 0);
        for (auto y : next.down)
            ++degree[y];
        cur.up_offsets.assign(cur.size() + 1, 0);
        for (std::size_t y = 0; y < cur.size(); ++y)
            cur.up_offsets[y + 1] = cur.up_offsets[y] + degree[y];
        cur.up.assign(next.down.size(), 0);
        std::vector<std::uint32_t> fill(cur.up_offsets.begin(), cur.up_offsets.end() - 1);
        for (std::size_t x = 0; x < next.size(); ++x)
            for (auto k = next.down_offsets[x]; k < next.down_offsets[x + 1]; ++k)
                cur.up[fill[next.down[k]]++] = static_cast<std::uint32_t>(x);

        p.levels_.push_back(std::move(next));
    }
    return p;
}

/// Checks up-degree = down-degree + r at every rank below the top.
inline bool is_r_differential(const diff_poset& p)
{
    for (int n = 0; n < p.max_rank(); ++n)
        for (std::size_t i = 0; i < p.rank_size(n); ++i)
            if (p.up(n, i).size() != p.down(n, i).size() + static_cast<std::size_t>(p.r()))
                return false;
    return true;
}

/// Checks that each chain count is the sum over the elements it covers.
inline bool chains_consistent(const diff_poset& p)
{
    if (p.chains(0, 0) != 1)
        return false;
    for (int n = 1; n <= p.max_rank(); ++n)
        for (std::size_t i = 0; i < p.rank_size(n); ++i) {
            std::uint64_t f = 0;
            for (auto y : p.down(n, i))
                f += p.chains(n - 1, y);
            if (f != p.chains(n, i))
                return false;
        }
    return true;
}

struct poset_element {
    int rank = 0;
    std::size_t index = 0;
    friend bool operator==(const poset_element&, const poset_element&) = default;
};

struct odd_subgraph_violation {
    poset_element element;
    std::string label;
    std::size_t odd_parents = 0;
};

using odd_tree = ranked_tree<poset_element>;
using odd_subgraph_result = std::variant<odd_tree, odd_subgraph_violation>;

inline bool is_odd(const diff_poset& p, int n, std::size_t i) { return (p.chains(n, i) & 1U) != 0; }

/// The subgraph induced on elements with an odd number of chains, as a tree
/// when every odd element above the bottom has exactly one odd lower cover.
/// Otherwise reports the lowest offending element.
inline odd_subgraph_result odd_subgraph(const diff_poset& p)
{
    for (int n = 1; n <= p.max_rank(); ++n) {
        for (std::size_t i = 0; i < p.rank_size(n); ++i) {
            if (!is_odd(p, n, i))
                continue;
            std::size_t odd_parents = 0;
            for (auto y : p.down(n, i))
                odd_parents += is_odd(p, n - 1, y) ? 1 : 0;
            if (odd_parents != 1)
                return odd_subgraph_violation{{n, i}, p.label(n, i), odd_parents};
        }
    }
    odd_tree t(0, poset_element{0, 0});
    for (std::size_t id = 0; id < t.size(); ++id) {
        const auto e = *t[id].payload;
        for (auto x : p.up(e.rank, e.index))
            if (is_odd(p, e.rank + 1, x))
                t.add_child(id, poset_element{e.rank + 1, x});
    }
    return t;
}

inline std::size_t count_odd_fib(const diff_poset& p, int n)
{
    if (n < 0 || n > p.max_rank())
        throw error(errc::rank_out_of_range, "rank " + std::to_string(n) + " outside [0, "
                                                 + std::to_string(p.max_rank()) + "]");
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.rank_size(n); ++i)
        count += is_odd(p, n, i) ? 1 : 0;
    return count;
}

inline std::string export_dot(const diff_poset& p, const odd_tree& t)
{
    return export_dot(t, dot_plain, [&](const poset_element& e) { return p.label(e.rank, e.index); }, "fibonacci");
}

} // namespace macdonald
