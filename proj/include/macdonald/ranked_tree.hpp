#pragma once

// Rooted trees whose nodes carry a rank (root rank + depth), an optional
// payload and hook / one-dimensional marks. Used for subtrees of the
// Macdonald tree, the abstract recursive construction, the odd Pascal graph
// and the odd subgraph of a differential poset.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace macdonald {

enum class mark : std::uint8_t {
    hook = 1,            // member of the hook ideal: a hook shape or the empty partition
    one_dimensional = 2, // exactly one standard tableau
};

class mark_set {
public:
    constexpr mark_set() = default;
    constexpr mark_set(mark m) : bits_(static_cast<std::uint8_t>(m)) {}

    constexpr bool has(mark m) const noexcept { return (bits_ & static_cast<std::uint8_t>(m)) != 0; }
    constexpr mark_set& set(mark m) noexcept
    {
        bits_ = static_cast<std::uint8_t>(bits_ | static_cast<std::uint8_t>(m));
        return *this;
    }
    constexpr std::uint8_t bits() const noexcept { return bits_; }

    friend constexpr mark_set operator|(mark_set a, mark b) noexcept { return a.set(b); }
    friend constexpr bool operator==(mark_set, mark_set) = default;

private:
    std::uint8_t bits_ = 0;
};

constexpr mark_set operator|(mark a, mark b) noexcept { return mark_set(a) | b; }

template <class Payload>
class ranked_tree {
public:
    using node_id = std::size_t;
    using payload_type = Payload;

    struct node {
        int rank = 0;
        std::optional<Payload> payload;
        mark_set marks;
        std::optional<node_id> parent;
        std::vector<node_id> children;
    };

    ranked_tree() = default;

    explicit ranked_tree(int root_rank, std::optional<Payload> payload = std::nullopt, mark_set marks = {})
    {
        nodes_.push_back(node{root_rank, std::move(payload), marks, std::nullopt, {}});
    }

    /// Appends a child one rank below `parent`. Ids increase with depth.
    node_id add_child(node_id parent, std::optional<Payload> payload = std::nullopt, mark_set marks = {})
    {
        if (parent >= nodes_.size())
            throw error(errc::invalid_argument, "no such parent node");
        const node_id id = nodes_.size();
        nodes_.push_back(node{nodes_[parent].rank + 1, std::move(payload), marks, parent, {}});
        nodes_[parent].children.push_back(id);
        return id;
    }

    bool empty() const noexcept { return nodes_.empty(); }
    std::size_t size() const noexcept { return nodes_.size(); }
    static constexpr node_id root() noexcept { return 0; }

    const node& operator[](node_id id) const { return nodes_.at(id); }
    node& operator[](node_id id) { return nodes_.at(id); }
    const std::vector<node>& nodes() const noexcept { return nodes_; }

    int root_rank() const { return nodes_.at(0).rank; }

    int max_rank() const
    {
        int r = root_rank();
        for (const node& n : nodes_)
            r = std::max(r, n.rank);
        return r;
    }

    std::vector<node_id> nodes_at_rank(int rank) const
    {
        std::vector<node_id> out;
        for (node_id i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].rank == rank)
                out.push_back(i);
        return out;
    }

    std::size_t count_at_rank(int rank, std::optional<mark> with = std::nullopt) const
    {
        return static_cast<std::size_t>(std::ranges::count_if(nodes_, [&](const node& n) {
            return n.rank == rank && (!with || n.marks.has(*with));
        }));
    }

    std::size_t edge_count() const noexcept { return nodes_.empty() ? 0 : nodes_.size() - 1; }

    /// Copy of the subtree hanging from `id`, ranks preserved.
    ranked_tree subtree_at(node_id id) const
    {
        ranked_tree out(nodes_.at(id).rank, nodes_[id].payload, nodes_[id].marks);
        std::vector<std::pair<node_id, node_id>> stack{{id, 0}};
        while (!stack.empty()) {
            auto [src, dst] = stack.back();
            stack.pop_back();
            for (node_id child : nodes_[src].children)
                stack.emplace_back(child, out.add_child(dst, nodes_[child].payload, nodes_[child].marks));
        }
        return out;
    }

    /// Same shape and marks with every payload dropped.
    ranked_tree without_payloads() const
    {
        ranked_tree out = *this;
        for (node& n : out.nodes_)
            n.payload.reset();
        return out;
    }

private:
    std::vector<node> nodes_;
};

namespace detail {

/// AHU canonical codes, interned in a table shared by both trees so codes
/// are comparable across trees.
template <class Payload>
int canonical_code(const ranked_tree<Payload>& t, bool with_marks, std::map<std::vector<int>, int>& table)
{
    std::vector<int> code(t.size());
    // Children always have larger ids than their parent.
    for (std::size_t i = t.size(); i-- > 0;) {
        const auto& n = t[i];
        std::vector<int> key;
        key.reserve(n.children.size() + 1);
        for (auto child : n.children)
            key.push_back(code[child]);
        std::ranges::sort(key);
        key.push_back(with_marks ? -1 - static_cast<int>(n.marks.bits()) : -1);
        auto [it, inserted] = table.try_emplace(std::move(key), static_cast<int>(table.size()));
        code[i] = it->second;
    }
    return code[0];
}

} // namespace detail

/// Rooted-tree isomorphism, ignoring payloads. Depth is preserved by any
/// rooted isomorphism, so ranks agree up to the offset between the roots.
/// With `with_marks` the isomorphism must also preserve node marks.
template <class A, class B>
bool tree_isomorphic(const ranked_tree<A>& a, const ranked_tree<B>& b, bool with_marks = false)
{
    if (a.empty() || b.empty())
        return a.empty() && b.empty();
    if (a.size() != b.size())
        return false;
    std::map<std::vector<int>, int> table;
    return detail::canonical_code(a, with_marks, table) == detail::canonical_code(b, with_marks, table);
}

enum dot_colors : unsigned {
    dot_plain = 0,
    dot_color_hooks = 1,           // green between hook-ideal nodes
    dot_color_one_dimensional = 2, // red between one-dimensional nodes
    dot_color_all = dot_color_hooks | dot_color_one_dimensional,
};

inline constexpr const char* dot_blue = "blue";
inline constexpr const char* dot_green = "green";
inline constexpr const char* dot_red = "red";

/// Edge colour under the given rules: red joins two one-dimensional nodes,
/// green joins two hook nodes, everything else is blue.
inline const char* edge_color(mark_set from, mark_set to, unsigned rules) noexcept
{
    if ((rules & dot_color_one_dimensional) && from.has(mark::one_dimensional) && to.has(mark::one_dimensional))
        return dot_red;
    if ((rules & dot_color_hooks) && from.has(mark::hook) && to.has(mark::hook))
        return dot_green;
    return dot_blue;
}

/// Graphviz digraph, one vertex per node (grouped by rank) and one edge
/// per parent-child pair. `label` renders payloads; nodes without a payload
/// are labelled by id.
template <class Payload, class Label>
void write_dot(std::ostream& os, const ranked_tree<Payload>& t, unsigned rules, Label&& label,
               const std::string& name = "tree")
{
    os << "digraph " << name << " {\n";
    os << "  rankdir=TB;\n  node [shape=plaintext, fontsize=10];\n";
    if (!t.empty()) {
        std::map<int, std::vector<std::size_t>> by_rank;
        for (std::size_t i = 0; i < t.size(); ++i)
            by_rank[t[i].rank].push_back(i);
        for (const auto& [rank, ids] : by_rank) {
            os << "  { rank=same;";
            for (auto id : ids)
                os << " n" << id << ";";
            os << " }\n";
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            os << "  n" << i << " [label=\"";
            if (t[i].payload)
                os << label(*t[i].payload);
            else
                os << i;
            os << "\"];\n";
        }
        for (std::size_t i = 0; i < t.size(); ++i)
            for (auto child : t[i].children)
                os << "  n" << i << " -> n" << child << " [color=" << edge_color(t[i].marks, t[child].marks, rules)
                   << "];\n";
    }
    os << "}\n";
}

template <class Payload, class Label>
std::string export_dot(const ranked_tree<Payload>& t, unsigned rules, Label&& label, const std::string& name = "tree")
{
    std::ostringstream os;
    write_dot(os, t, rules, std::forward<Label>(label), name);
    return os.str();
}

} // namespace macdonald
