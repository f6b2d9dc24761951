#pragma once

// The Macdonald tree: the subgraph of Young's graph induced by the
// partitions with an odd number of standard tableaux.
//
// Navigation (parent, children) scans covers and tests parity directly.
// The structural theorems about the tree are checked against that, never
// used to compute it. Enumeration of a whole rank is output-sensitive: an
// odd partition of n, 2^k <= n < 2^(k+1), is an odd partition of n - 2^k
// with a single 2^k-rim hook added, in any of 2^k runner positions.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core_quotient.hpp"
#include "error.hpp"
#include "parity.hpp"
#include "partition.hpp"
#include "ranked_tree.hpp"

namespace macdonald {

using macdonald_tree = ranked_tree<partition>;

inline mark_set partition_marks(const partition& p)
{
    mark_set m;
    if (p.empty() || is_hook(p))
        m.set(mark::hook);
    if (is_one_dimensional(p))
        m.set(mark::one_dimensional);
    return m;
}

namespace detail {
inline void require_odd(const partition& p)
{
    if (!is_odd(p))
        throw error(errc::not_odd, to_string(p) + " is not odd");
}
} // namespace detail

/// The unique odd partition covered by an odd, nonempty lambda.
inline partition parent(const partition& lambda)
{
    if (lambda.empty())
        throw error(errc::invalid_argument, "the empty partition has no parent");
    detail::require_odd(lambda);
    std::vector<partition> odd;
    for (auto& mu : down_set(lambda))
        if (is_odd(mu))
            odd.push_back(std::move(mu));
    if (odd.size() != 1)
        throw error(errc::theorem_violation,
                    to_string(lambda) + " has " + std::to_string(odd.size()) + " odd partitions below it");
    return std::move(odd.front());
}

/// Odd partitions covering an odd lambda, in up_set order.
inline std::vector<partition> children(const partition& lambda)
{
    detail::require_odd(lambda);
    std::vector<partition> odd;
    for (auto& mu : up_set(lambda))
        if (is_odd(mu))
            odd.push_back(std::move(mu));
    return odd;
}

/// All odd partitions of n: for each odd core of size n - 2^k (in the order
/// produced recursively), the 2^k partitions whose 2^k-quotient is (1) in
/// slot 0, 1, ..., 2^k - 1.
///
/// Putting (1) in slot j moves the highest bead of runner j down one level,
/// so each output costs one pass over the core's beta set.
inline std::vector<partition> enumerate_odd(int n)
{
    if (n < 0)
        throw error(errc::invalid_argument, "n must be nonnegative");
    if (n == 0)
        return {partition()};
    if (n == 1)
        return {partition{1}};
    const int p = std::bit_floor(static_cast<unsigned>(n));
    const auto cores = enumerate_odd(n - p);

    std::vector<partition> out;
    out.reserve(cores.size() * static_cast<std::size_t>(p));
    std::vector<int> top(static_cast<std::size_t>(p));
    std::vector<int> parts;
    for (const partition& c : cores) {
        // One extra row of p beads puts a bead on every runner.
        const int t = detail::padded_length(c.length(), p) + p;
        const auto beta = detail::beta_set(c, t); // strictly decreasing
        for (auto it = beta.rbegin(); it != beta.rend(); ++it)
            top[static_cast<std::size_t>(*it % p)] = *it;
        for (int slot = 0; slot < p; ++slot) {
            const int from = top[static_cast<std::size_t>(slot)];
            const int to = from + p;
            // beta with `from` replaced by `to`, kept decreasing.
            parts.clear();
            int i = 0;
            auto emit = [&](int b) {
                ++i;
                parts.push_back(b - (t - i));
            };
            bool placed = false;
            for (int b : beta) {
                if (b == from)
                    continue;
                if (!placed && to > b) {
                    emit(to);
                    placed = true;
                }
                emit(b);
            }
            if (!placed)
                emit(to);
            out.push_back(partition::trimmed(parts));
        }
    }
    return out;
}

/// lambda^{+[0,k]}: odd partitions containing lambda with rank in
/// [|lambda|, |lambda| + k], built breadth first.
inline macdonald_tree subtree(const partition& lambda, int k)
{
    if (k < 0)
        throw error(errc::invalid_argument, "depth must be nonnegative");
    detail::require_odd(lambda);
    macdonald_tree t(lambda.size(), lambda, partition_marks(lambda));
    const int top = lambda.size() + k;
    for (std::size_t id = 0; id < t.size(); ++id) {
        if (t[id].rank >= top)
            continue;
        for (auto& child : children(*t[id].payload)) {
            const auto marks = partition_marks(child);
            t.add_child(id, std::move(child), marks);
        }
    }
    return t;
}

using node_mapping = std::vector<std::pair<partition, partition>>;

/// The 2^v-coring map from lambda^{+[0,2^v-1]} onto the root window
/// of the same depth, checked to be a rank-shifting tree isomorphism.
/// Requires 2^v | |lambda| (any v for the empty partition).
inline node_mapping self_similarity_map(const partition& lambda, int v)
{
    if (v < 1 || v > 6)
        throw error(errc::precondition_violation, "v must lie in [1, 6]");
    detail::require_odd(lambda);
    if (!lambda.empty() && v2(static_cast<std::uint64_t>(lambda.size())) < v)
        throw error(errc::precondition_violation, "2^v must divide |lambda|");

    const int p = 1 << v;
    const auto source = subtree(lambda, p - 1);
    const auto target = subtree(partition(), p - 1);

    auto fail = [&](const std::string& why) {
        throw error(errc::theorem_violation,
                    "core_" + std::to_string(p) + " on " + to_string(lambda) + " is not an isomorphism: " + why);
    };

    node_mapping mapping;
    mapping.reserve(source.size());
    std::unordered_map<partition, partition> image;
    for (const auto& n : source.nodes()) {
        partition img = core(*n.payload, p);
        if (img.size() != n.rank - lambda.size())
            fail("rank not preserved at " + to_string(*n.payload));
        image.emplace(*n.payload, img);
        mapping.emplace_back(*n.payload, std::move(img));
    }

    std::set<partition> hit;
    for (const auto& [from, to] : mapping)
        hit.insert(to);
    std::set<partition> expected;
    for (const auto& n : target.nodes())
        expected.insert(*n.payload);
    if (hit.size() != mapping.size())
        fail("not injective");
    if (hit != expected)
        fail("not onto the root window");

    std::set<std::pair<partition, partition>> target_edges;
    for (const auto& n : target.nodes())
        for (auto child : n.children)
            target_edges.emplace(*n.payload, *target[child].payload);
    std::size_t mapped_edges = 0;
    for (const auto& n : source.nodes()) {
        for (auto child : n.children) {
            if (!target_edges.contains({image.at(*n.payload), image.at(*source[child].payload)}))
                fail("edge " + to_string(*n.payload) + " -> " + to_string(*source[child].payload) + " not preserved");
            ++mapped_edges;
        }
    }
    if (mapped_edges != target_edges.size())
        fail("edge counts differ");
    return mapping;
}

struct ray_report {
    int k = 0;
    std::size_t roots = 0;   // odd partitions of 2^k examined
    std::size_t extinct = 0; // those with no child-bearing node at rank 2^(k+1) - 1
    std::vector<partition> survivors;
    bool ok = false; // survivors are exactly the row and the column
};

inline constexpr int default_ray_limit = 5;

/// Checks that below every odd partition of 2^k other than the row and the
/// column, no node at rank 2^(k+1) - 1 has children.
inline ray_report verify_rays(int k, int limit = default_ray_limit)
{
    if (k < 1)
        throw error(errc::invalid_argument, "k must be positive");
    if (k > limit)
        throw error(errc::limit_exceeded, "k=" + std::to_string(k) + " exceeds limit " + std::to_string(limit));
    const int n = 1 << k;
    ray_report report;
    report.k = k;
    for (const partition& lambda : enumerate_odd(n)) {
        ++report.roots;
        const auto t = subtree(lambda, n - 1);
        bool alive = false;
        for (auto id : t.nodes_at_rank(2 * n - 1))
            if (!children(*t[id].payload).empty()) {
                alive = true;
                break;
            }
        if (alive)
            report.survivors.push_back(lambda);
        else
            ++report.extinct;
    }
    std::set<partition> got(report.survivors.begin(), report.survivors.end());
    report.ok = got == std::set<partition>{partition::row(n), partition::column(n)};
    return report;
}

/// T_2 = the tree up to rank 3, from direct enumeration, payloads dropped.
inline macdonald_tree recursive_tree_base() { return subtree(partition(), 3).without_payloads(); }

inline constexpr int default_recursive_limit = 6;

namespace detail {

/// T_{j+1} from T_j: every hook at the last rank 2^j - 1 gets two branches,
/// each an edge followed by a copy of T_j. The first branch under each
/// one-dimensional leaf carries the hook marks of T_j and one of its two
/// one-dimensional chains; every other branch marks only its root as a hook.
inline macdonald_tree extend_recursive_tree(const macdonald_tree& t, int j)
{
    const int leaf_rank = (1 << j) - 1;
    macdonald_tree out = t;

    std::vector<bool> on_chain(t.size(), false);
    for (std::size_t id = 0; id < t.size(); ++id) {
        if (t[id].rank == leaf_rank && t[id].marks.has(mark::one_dimensional)) {
            for (std::optional<std::size_t> a = id; a; a = t[*a].parent)
                on_chain[*a] = true;
            break;
        }
    }

    auto graft = [&](std::size_t at, bool carries_marks) {
        std::vector<std::size_t> copy_of(t.size());
        for (std::size_t src = 0; src < t.size(); ++src) {
            mark_set m;
            if (src == 0 || (carries_marks && t[src].marks.has(mark::hook)))
                m.set(mark::hook);
            if (carries_marks && on_chain[src])
                m.set(mark::one_dimensional);
            const std::size_t parent = src == 0 ? at : copy_of[*t[src].parent];
            copy_of[src] = out.add_child(parent, std::nullopt, m);
        }
    };

    for (std::size_t id = 0; id < t.size(); ++id) {
        if (t[id].rank != leaf_rank || !t[id].marks.has(mark::hook))
            continue;
        const bool one_dim = t[id].marks.has(mark::one_dimensional);
        graft(id, one_dim);
        graft(id, false);
    }
    return out;
}

} // namespace detail

/// T_{k+1} built purely from the recursion, starting at T_2. Payload-free;
/// marks determined up to an automorphism.
inline macdonald_tree build_recursive_tree(int k, int limit = default_recursive_limit)
{
    if (k < 1)
        throw error(errc::invalid_argument, "k must be positive");
    if (k > limit)
        throw error(errc::limit_exceeded, "k=" + std::to_string(k) + " exceeds limit " + std::to_string(limit));
    macdonald_tree t = recursive_tree_base();
    for (int j = 2; j <= k; ++j)
        t = detail::extend_recursive_tree(t, j);
    return t;
}

inline std::string export_dot(const macdonald_tree& t, unsigned rules = dot_color_all)
{
    return export_dot(t, rules, [](const partition& p) { return to_string(p); }, "macdonald");
}

} // namespace macdonald
