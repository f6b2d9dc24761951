#pragma once

// p-cores and p-quotients on the James-Kerber abacus.
//
// Beta-set convention: for a partition with `len` parts take t = the
// smallest multiple of p with t >= len, and beta_i = lambda_i + t - i for
// 1 <= i <= t. Runner j holds the beta numbers congruent to j mod p, and
// quotient component j is read off runner j. Because t is always a multiple
// of p, padding with more beads never relabels the runners, so the
// component order is global.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace macdonald {

struct core_quotient {
    int p = 2;
    partition core;
    std::vector<partition> quotient; // exactly p components

    friend bool operator==(const core_quotient&, const core_quotient&) = default;
};

namespace detail {

inline std::vector<int> beta_set(const partition& lambda, int t)
{
    std::vector<int> beta(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i)
        beta[static_cast<std::size_t>(i - 1)] = lambda.row_length(i) + t - i;
    return beta;
}

inline int padded_length(int len, int p) { return (len + p - 1) / p * p; }

/// Partition whose beta set (of size beta.size()) is `beta`.
inline partition from_beta_set(std::vector<int> beta)
{
    std::ranges::sort(beta, std::greater<>());
    const int t = static_cast<int>(beta.size());
    std::vector<int> parts;
    parts.reserve(beta.size());
    for (int i = 1; i <= t; ++i)
        parts.push_back(beta[static_cast<std::size_t>(i - 1)] - (t - i));
    return partition::trimmed(std::move(parts));
}

/// Partition encoded by descending bead positions on one runner.
inline partition from_runner(const std::vector<int>& positions)
{
    const int b = static_cast<int>(positions.size());
    std::vector<int> parts;
    parts.reserve(positions.size());
    for (int i = 1; i <= b; ++i)
        parts.push_back(positions[static_cast<std::size_t>(i - 1)] - (b - i));
    return partition::trimmed(std::move(parts));
}

inline void check_modulus(int p)
{
    if (p < 2)
        throw error(errc::invalid_argument, "modulus p must be at least 2");
}

} // namespace detail

inline core_quotient decompose(const partition& lambda, int p)
{
    detail::check_modulus(p);
    const int t = detail::padded_length(lambda.length(), p);
    std::vector<std::vector<int>> runners(static_cast<std::size_t>(p));
    for (int b : detail::beta_set(lambda, t))
        runners[static_cast<std::size_t>(b % p)].push_back(b / p); // descending

    core_quotient out;
    out.p = p;
    out.quotient.reserve(static_cast<std::size_t>(p));
    std::vector<int> core_beta;
    core_beta.reserve(static_cast<std::size_t>(t));
    for (int j = 0; j < p; ++j) {
        const auto& runner = runners[static_cast<std::size_t>(j)];
        out.quotient.push_back(detail::from_runner(runner));
        for (int q = 0; q < static_cast<int>(runner.size()); ++q)
            core_beta.push_back(j + p * q);
    }
    out.core = detail::from_beta_set(std::move(core_beta));
    return out;
}

inline partition core(const partition& lambda, int p) { return decompose(lambda, p).core; }

inline std::vector<partition> quotient(const partition& lambda, int p) { return decompose(lambda, p).quotient; }

inline bool is_core(const partition& lambda, int p)
{
    const auto q = quotient(lambda, p);
    return std::ranges::all_of(q, [](const partition& m) { return m.empty(); });
}

/// Inverse of decompose: the unique partition with the given p-core and
/// p-quotient.
inline partition reconstruct(const core_quotient& cq)
{
    const int p = cq.p;
    detail::check_modulus(p);
    if (static_cast<int>(cq.quotient.size()) != p)
        throw error(errc::invalid_argument, "quotient must have exactly p components");
    if (!is_core(cq.core, p))
        throw error(errc::core_not_a_p_core, to_string(cq.core) + " is not a " + std::to_string(p) + "-core");

    const int t0 = detail::padded_length(cq.core.length(), p);
    std::vector<int> beads(static_cast<std::size_t>(p), 0);
    for (int b : detail::beta_set(cq.core, t0))
        ++beads[static_cast<std::size_t>(b % p)];

    // Each runner needs at least as many beads as its component has parts.
    int extra = 0;
    for (int j = 0; j < p; ++j)
        extra = std::max(extra, cq.quotient[static_cast<std::size_t>(j)].length() - beads[static_cast<std::size_t>(j)]);

    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(t0 + extra * p));
    for (int j = 0; j < p; ++j) {
        const partition& mu = cq.quotient[static_cast<std::size_t>(j)];
        const int b = beads[static_cast<std::size_t>(j)] + extra;
        for (int i = 1; i <= b; ++i)
            beta.push_back(j + p * (mu.row_length(i) + b - i));
    }
    return detail::from_beta_set(std::move(beta));
}

/// The 2^k-rim hook of lambda if there is exactly one, nullopt if there is
/// none. Several is an error: odd partitions never have more than one.
inline std::optional<rim_hook> unique_pk_hook(const partition& lambda, int k)
{
    if (k < 0 || k > 30)
        throw error(errc::invalid_argument, "k out of range");
    auto hooks = rim_hooks_of_length(lambda, 1 << k);
    if (hooks.empty())
        return std::nullopt;
    if (hooks.size() > 1)
        throw error(errc::multiple_hooks, to_string(lambda) + " has " + std::to_string(hooks.size())
                                              + " rim hooks of length " + std::to_string(1 << k));
    return std::move(hooks.front());
}

} // namespace macdonald
