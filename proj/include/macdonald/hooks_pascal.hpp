#pragma once

// Hooks and Pascal's triangle. (n1, n2) -> (n1 + 1, 1^n2) embeds the
// product order on pairs into Young's lattice with a rank shift of one,
// and f of the image is binom(n1 + n2, n1). Restricted to odd entries both
// sides are trees (the Sierpinski pattern).

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "macdonald_tree.hpp"
#include "parity.hpp"
#include "partition.hpp"
#include "ranked_tree.hpp"

namespace macdonald {

struct grid_point {
    int n1 = 0;
    int n2 = 0;

    int rank() const noexcept { return n1 + n2; }
    friend auto operator<=>(const grid_point&, const grid_point&) = default;
};

inline std::string to_string(const grid_point& g)
{
    return "(" + std::to_string(g.n1) + "," + std::to_string(g.n2) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const grid_point& g) { return os << to_string(g); }

inline partition to_hook(const grid_point& g)
{
    if (g.n1 < 0 || g.n2 < 0)
        throw error(errc::invalid_argument, "grid coordinates must be nonnegative");
    std::vector<int> parts{g.n1 + 1};
    parts.insert(parts.end(), static_cast<std::size_t>(g.n2), 1);
    return partition(std::move(parts));
}

inline bool is_odd_point(const grid_point& g)
{
    return binomial_is_odd(static_cast<std::uint64_t>(g.rank()), static_cast<std::uint64_t>(g.n1));
}

using pascal_tree = ranked_tree<grid_point>;

/// Points of Pascal's triangle with odd binomial and rank <= max_rank,
/// with the covering edges between them, rooted at (0, 0).
inline pascal_tree odd_pascal_graph(int max_rank)
{
    if (max_rank < 0)
        throw error(errc::invalid_argument, "max_rank must be nonnegative");
    const mark_set both = mark::hook | mark::one_dimensional;
    pascal_tree t(0, grid_point{0, 0}, both);
    std::set<grid_point> seen{{0, 0}};
    for (std::size_t id = 0; id < t.size(); ++id) {
        if (t[id].rank >= max_rank)
            continue;
        const grid_point g = *t[id].payload;
        for (grid_point next : {grid_point{g.n1 + 1, g.n2}, grid_point{g.n1, g.n2 + 1}}) {
            if (!is_odd_point(next))
                continue;
            // Pascal's rule: exactly one parent of an odd entry is odd.
            if (!seen.insert(next).second)
                throw error(errc::theorem_violation, "odd point " + to_string(next) + " has two odd parents");
            mark_set m(mark::hook);
            if (next.n1 == 0 || next.n2 == 0)
                m.set(mark::one_dimensional);
            t.add_child(id, next, m);
        }
    }
    return t;
}

/// The empty partition together with the odd hooks of size <= max_size,
/// as an induced subtree of the Macdonald tree.
inline macdonald_tree hooks_subgraph(int max_size)
{
    if (max_size < 0)
        throw error(errc::invalid_argument, "max_size must be nonnegative");
    macdonald_tree t(0, partition(), partition_marks(partition()));
    for (std::size_t id = 0; id < t.size(); ++id) {
        if (t[id].rank >= max_size)
            continue;
        for (auto& child : children(*t[id].payload)) {
            if (!is_hook(child))
                continue;
            const auto m = partition_marks(child);
            t.add_child(id, std::move(child), m);
        }
    }
    return t;
}

/// Checks that to_hook carries odd_pascal_graph(max_size - 1) onto
/// hooks_subgraph(max_size) minus its empty root: nodes, ranks (shifted by
/// one) and edges.
inline bool verify_pascal_embedding(int max_size)
{
    if (max_size < 1)
        throw error(errc::invalid_argument, "max_size must be positive");
    const auto pascal = odd_pascal_graph(max_size - 1);
    const auto hooks = hooks_subgraph(max_size);

    std::set<partition> pascal_nodes;
    std::set<std::pair<partition, partition>> pascal_edges;
    for (const auto& n : pascal.nodes()) {
        const partition img = to_hook(*n.payload);
        if (img.size() != n.rank + 1)
            return false;
        pascal_nodes.insert(img);
        for (auto child : n.children)
            pascal_edges.emplace(img, to_hook(*pascal[child].payload));
    }

    std::set<partition> hook_nodes;
    std::set<std::pair<partition, partition>> hook_edges;
    for (const auto& n : hooks.nodes()) {
        if (n.payload->empty())
            continue;
        hook_nodes.insert(*n.payload);
        for (auto child : n.children)
            hook_edges.emplace(*n.payload, *hooks[child].payload);
    }
    if (pascal_nodes != hook_nodes || pascal_edges != hook_edges)
        return false;

    // The single child of the empty root is (1); compare shapes and marks too.
    if (hooks[0].children.size() != 1)
        return false;
    return tree_isomorphic(pascal, hooks.subtree_at(hooks[0].children.front()), true);
}

inline std::string export_dot(const pascal_tree& t, unsigned rules = dot_color_all)
{
    return export_dot(t, rules, [](const grid_point& g) { return to_string(g); }, "pascal");
}

} // namespace macdonald
