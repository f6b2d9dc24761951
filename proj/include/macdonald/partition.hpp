#pragma once

// Young-diagram arithmetic: cells, hook lengths, covers in Young's lattice,
// rim hooks (border strips) and exhaustive generation of partitions.
//
// Cells are 1-indexed, row 1 at the top (English convention), so the
// north neighbour of (r, c) is (r - 1, c).

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace macdonald {

struct cell {
    int row = 1;
    int col = 1;

    cell north() const noexcept { return {row - 1, col}; }
    cell south() const noexcept { return {row + 1, col}; }
    cell east() const noexcept { return {row, col + 1}; }
    cell west() const noexcept { return {row, col - 1}; }

    friend auto operator<=>(const cell&, const cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const cell& c)
{
    return os << '(' << c.row << ',' << c.col << ')';
}

/// An integer partition stored as its weakly decreasing sequence of
/// positive parts. The empty sequence is the partition of 0.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw error(errc::invalid_partition, "parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw error(errc::invalid_partition, "parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    partition(std::initializer_list<int> parts)
        : partition(std::vector<int>(parts))
    {}

    /// Builds a partition from parts that may contain trailing zeros.
    static partition trimmed(std::vector<int> parts)
    {
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        return partition(std::move(parts));
    }

    /// (n)
    static partition row(int n) { return n == 0 ? partition() : partition({n}); }
    /// (1^n)
    static partition column(int n) { return partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& parts_vector() const noexcept { return parts_; }

    /// Number of cells, |lambda|.
    int size() const noexcept { return size_; }
    /// Number of nonzero parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row i (1-indexed); 0 past the last row.
    int row_length(int i) const noexcept
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Length of column j (1-indexed); 0 past the first row's end.
    int column_length(int j) const noexcept
    {
        if (j < 1)
            return 0;
        // parts_ is decreasing, so rows with part >= j form a prefix.
        auto it = std::partition_point(parts_.begin(), parts_.end(), [j](int p) { return p >= j; });
        return static_cast<int>(it - parts_.begin());
    }

    bool contains(const cell& c) const noexcept
    {
        return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
    }

    partition conjugate() const
    {
        std::vector<int> out;
        const int width = row_length(1);
        out.reserve(static_cast<std::size_t>(width));
        for (int j = 1; j <= width; ++j)
            out.push_back(column_length(j));
        return partition(std::move(out));
    }

    friend bool operator==(const partition& a, const partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const partition& a, const partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Text form `[3,2,1]`, `[]` for the empty partition.
inline std::string to_string(const partition& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ']';
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const partition& p) { return os << to_string(p); }

/// Parses the text form. Whitespace around tokens is accepted.
inline partition parse_partition(std::string_view text)
{
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw error(errc::parse_error, "expected [a,b,...]: " + std::string(text));
    text = strip(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = strip(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw error(errc::parse_error, "bad part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
        if (strip(text).empty())
            throw error(errc::parse_error, "trailing comma");
    }
    try {
        return partition(std::move(parts));
    } catch (const error& e) {
        throw error(errc::parse_error, e.what());
    }
}

inline int arm_length(const partition& p, const cell& c) { return p.row_length(c.row) - c.col; }
inline int leg_length(const partition& p, const cell& c) { return p.column_length(c.col) - c.row; }

inline int hook_length(const partition& p, const cell& c)
{
    if (!p.contains(c))
        throw error(errc::cell_not_in_diagram, "cell outside " + to_string(p));
    return arm_length(p, c) + leg_length(p, c) + 1;
}

/// One hook length per cell, sorted in decreasing order.
inline std::vector<int> hook_multiset(const partition& p)
{
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(p.size()));
    const partition conj = p.conjugate();
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.row_length(i); ++j)
            hooks.push_back(p.row_length(i) - j + conj.row_length(j) - i + 1);
    std::ranges::sort(hooks, std::greater<>());
    return hooks;
}

/// Corners of the diagram, by ascending row.
inline std::vector<cell> removable_cells(const partition& p)
{
    std::vector<cell> out;
    for (int i = 1; i <= p.length(); ++i)
        if (p.row_length(i) > p.row_length(i + 1))
            out.push_back({i, p.row_length(i)});
    return out;
}

/// Outer corners, by ascending row. The last one always opens a new row.
inline std::vector<cell> addable_cells(const partition& p)
{
    std::vector<cell> out;
    for (int i = 1; i <= p.length() + 1; ++i)
        if (i == 1 || p.row_length(i - 1) > p.row_length(i))
            out.push_back({i, p.row_length(i) + 1});
    return out;
}

inline partition remove_cell(const partition& p, const cell& c)
{
    std::vector<int> parts = p.parts_vector();
    auto& part = parts.at(static_cast<std::size_t>(c.row - 1));
    if (part != c.col || p.row_length(c.row + 1) >= c.col)
        throw error(errc::invalid_argument, "cell is not removable");
    --part;
    return partition::trimmed(std::move(parts));
}

inline partition add_cell(const partition& p, const cell& c)
{
    std::vector<int> parts = p.parts_vector();
    if (c.row == p.length() + 1 && c.col == 1) {
        parts.push_back(1);
    } else if (c.row <= p.length() && p.row_length(c.row) + 1 == c.col
               && (c.row == 1 || p.row_length(c.row - 1) >= c.col)) {
        ++parts[static_cast<std::size_t>(c.row - 1)];
    } else {
        throw error(errc::invalid_argument, "cell is not addable");
    }
    return partition(std::move(parts));
}

/// Partitions covered by p in Young's lattice, ordered by the row of the
/// removed cell.
inline std::vector<partition> down_set(const partition& p)
{
    std::vector<partition> out;
    for (const cell& c : removable_cells(p))
        out.push_back(remove_cell(p, c));
    return out;
}

/// Partitions covering p in Young's lattice, ordered by the row of the
/// added cell.
inline std::vector<partition> up_set(const partition& p)
{
    std::vector<partition> out;
    for (const cell& c : addable_cells(p))
        out.push_back(add_cell(p, c));
    return out;
}

/// True for shapes (a+1, 1^b). The empty partition is not a hook.
inline bool is_hook(const partition& p) noexcept
{
    return !p.empty() && p.row_length(2) <= 1;
}

/// Single row, single column, or empty: exactly the shapes with one
/// standard tableau.
inline bool is_one_dimensional(const partition& p) noexcept
{
    return p.length() <= 1 || p.row_length(1) == 1;
}

/// A removable border strip, stored foot (south-west end) to hand
/// (north-east end).
class rim_hook {
public:
    rim_hook() = default;
    explicit rim_hook(std::vector<cell> cells)
        : cells_(std::move(cells))
    {}

    const std::vector<cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const cell& foot() const { return cells_.front(); }
    const cell& hand() const { return cells_.back(); }

    bool contains(const cell& c) const noexcept
    {
        return std::ranges::find(cells_, c) != cells_.end();
    }

    friend bool operator==(const rim_hook&, const rim_hook&) = default;

private:
    std::vector<cell> cells_;
};

/// The rim hook cut out by the hook of cell c: the border cells from the
/// bottom of c's column to the end of c's row.
inline rim_hook rim_of_cell(const partition& p, const cell& c)
{
    const int h = hook_length(p, c);
    std::vector<cell> cells;
    cells.reserve(static_cast<std::size_t>(h));
    cell cur{p.column_length(c.col), c.col};
    for (int i = 0; i < h; ++i) {
        cells.push_back(cur);
        cur = p.contains(cur.east()) ? cur.east() : cur.north();
    }
    return rim_hook(std::move(cells));
}

/// All removable border strips with h cells, ordered by the row (then
/// column) of the cell whose hook they correspond to.
inline std::vector<rim_hook> rim_hooks_of_length(const partition& p, int h)
{
    if (h < 1)
        throw error(errc::invalid_argument, "rim hook length must be positive");
    std::vector<rim_hook> out;
    for (int i = 1; i <= p.length(); ++i) {
        const int row = p.row_length(i);
        for (int j = 1; j <= row; ++j) {
            const cell c{i, j};
            if (arm_length(p, c) + leg_length(p, c) + 1 == h)
                out.push_back(rim_of_cell(p, c));
        }
    }
    return out;
}

inline partition remove_rim_hook(const partition& p, const rim_hook& r)
{
    std::vector<int> parts = p.parts_vector();
    for (const cell& c : r.cells()) {
        if (!p.contains(c))
            throw error(errc::cell_not_in_diagram, "rim hook cell outside diagram");
        --parts[static_cast<std::size_t>(c.row - 1)];
    }
    return partition::trimmed(std::move(parts));
}

inline constexpr int default_partition_limit = 60;

namespace detail {
template <class F>
void for_each_partition_rec(std::vector<int>& prefix, int remaining, int max_part, F& f)
{
    if (remaining == 0) {
        f(partition(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        for_each_partition_rec(prefix, remaining - part, part, f);
        prefix.pop_back();
    }
}
} // namespace detail

/// Visits every partition of n in reverse-lexicographic order.
template <class F>
void for_each_partition(int n, F&& f, int limit = default_partition_limit)
{
    if (n < 0)
        throw error(errc::invalid_argument, "n must be nonnegative");
    if (n > limit)
        throw error(errc::limit_exceeded, "n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    std::vector<int> prefix;
    detail::for_each_partition_rec(prefix, n, n, f);
}

inline std::vector<partition> partitions_of(int n, int limit = default_partition_limit)
{
    std::vector<partition> out;
    for_each_partition(n, [&](partition p) { out.push_back(std::move(p)); }, limit);
    return out;
}

} // namespace macdonald

template <>
struct std::hash<macdonald::partition> {
    std::size_t operator()(const macdonald::partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int part : p.parts()) {
            h ^= static_cast<std::size_t>(part);
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};
