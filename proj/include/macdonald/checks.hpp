#pragma once

// Property suites behind `macdonald check`. Each theorem is checked by
// exhaustive search up to a size limit against an independent computation
// (exact f values, parity scans of cover sets, explicit enumeration).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "core_quotient.hpp"
#include "cover_class.hpp"
#include "fibonacci_poset.hpp"
#include "hooks_pascal.hpp"
#include "macdonald_tree.hpp"
#include "parity.hpp"
#include "partition.hpp"

namespace macdonald::checks {

struct theorem_result {
    std::string name;
    std::size_t checked = 0;
    bool passed = true;
    std::string counterexample; // first failure, empty when passed
};

struct suite_report {
    std::string suite;
    int limit = 0;
    std::vector<theorem_result> results;

    bool passed() const
    {
        for (const auto& r : results)
            if (!r.passed)
                return false;
        return true;
    }
};

namespace detail {

/// Runs `body` on a fresh result; body returns false with a message to
/// record the first counterexample and stop.
class recorder {
public:
    explicit recorder(std::string name) { result_.name = std::move(name); }

    /// Returns false once a failure was recorded.
    bool check(bool ok, const std::function<std::string()>& describe)
    {
        if (!result_.passed)
            return false;
        ++result_.checked;
        if (!ok) {
            result_.passed = false;
            result_.counterexample = describe();
        }
        return ok;
    }

    void fail(std::string why)
    {
        if (result_.passed) {
            result_.passed = false;
            result_.counterexample = std::move(why);
        }
    }

    bool ok() const { return result_.passed; }
    theorem_result take() { return std::move(result_); }

private:
    theorem_result result_;
};

template <class F>
theorem_result run(std::string name, F&& body)
{
    recorder rec(std::move(name));
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.fail(std::string("exception: ") + e.what());
    }
    return rec.take();
}

inline int top_power(int n) { return std::bit_floor(static_cast<unsigned>(n)); }
inline int log2_floor(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }

/// 2^k-core, with the 1-core of anything being empty.
inline partition core_pow2(const partition& p, int h) { return h == 1 ? partition() : core(p, h); }

inline std::vector<partition> odd_partitions_by_filter(int n)
{
    std::vector<partition> out;
    for_each_partition(n, [&](partition p) {
        if (is_odd(p))
            out.push_back(std::move(p));
    });
    return out;
}

inline std::multiset<int> divisible_hooks(const partition& p, int m)
{
    std::multiset<int> out;
    for (int h : hook_multiset(p))
        if (h % m == 0)
            out.insert(h);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------- parity

inline theorem_result check_v2_against_exact(int limit)
{
    return detail::run("v2_f equals v2 of exact f (all partitions)", [&](detail::recorder& rec) {
        for (int n = 0; n <= limit; ++n)
            for (const auto& p : partitions_of(n))
                if (!rec.check(v2_f(p) == v2(f_exact(p)), [&] { return to_string(p); }))
                    return;
    });
}

inline theorem_result check_legendre(int limit)
{
    return detail::run("Legendre: v2(n!) = n - nu(n)", [&](detail::recorder& rec) {
        for (int n = 1; n <= limit; ++n)
            if (!rec.check(v2(factorial(n)) == n - nu(static_cast<std::uint64_t>(n)),
                           [&] { return "n=" + std::to_string(n); }))
                return;
    });
}

inline theorem_result check_macdonald_count(int limit)
{
    return detail::run("Macdonald count: #odd partitions of n = 2^alpha(n)", [&](detail::recorder& rec) {
        for (int n = 0; n <= limit; ++n) {
            const auto count = detail::odd_partitions_by_filter(n).size();
            if (!rec.check(count == count_odd(static_cast<std::uint64_t>(n)), [&] {
                    return "n=" + std::to_string(n) + " filter=" + std::to_string(count);
                }))
                return;
        }
    });
}

/// lambda odd <=> 2-core has at most one cell, a, 2 m0, 2 m1 have disjoint
/// binary supports, and both 2-quotient components are odd.
inline theorem_result check_two_quotient_criterion(int limit)
{
    return detail::run("oddness via 2-core and 2-quotient", [&](detail::recorder& rec) {
        for (int n = 0; n <= limit; ++n) {
            for (const auto& p : partitions_of(n)) {
                const auto cq = decompose(p, 2);
                const auto a = static_cast<std::uint64_t>(cq.core.size());
                const auto m0 = static_cast<std::uint64_t>(cq.quotient[0].size()) * 2;
                const auto m1 = static_cast<std::uint64_t>(cq.quotient[1].size()) * 2;
                const bool disjoint = (a & m0) == 0 && (a & m1) == 0 && (m0 & m1) == 0;
                const bool criterion = a <= 1 && disjoint && f_exact(cq.quotient[0]) % 2 == 1
                                       && f_exact(cq.quotient[1]) % 2 == 1;
                if (!rec.check(criterion == (f_exact(p) % 2 == 1), [&] { return to_string(p); }))
                    return;
            }
        }
    });
}

/// lambda odd <=> exactly one 2^k-rim hook and an odd 2^k-core, and each
/// odd mu of n - 2^k is the 2^k-core of exactly 2^k odd partitions of n.
inline std::vector<theorem_result> check_unique_hook_lemma(int limit)
{
    std::vector<theorem_result> out;
    out.push_back(detail::run("odd <=> unique 2^k-rim hook with odd 2^k-core", [&](detail::recorder& rec) {
        for (int n = 1; n <= limit; ++n) {
            const int h = detail::top_power(n);
            for (const auto& p : partitions_of(n)) {
                const auto hooks = rim_hooks_of_length(p, h);
                const bool rhs = hooks.size() == 1 && is_odd(detail::core_pow2(p, h));
                if (!rec.check(is_odd(p) == rhs, [&] { return to_string(p); }))
                    return;
            }
        }
    }));
    out.push_back(detail::run("2^k odd partitions over each odd 2^k-core", [&](detail::recorder& rec) {
        for (int n = 1; n <= limit; ++n) {
            const int h = detail::top_power(n);
            std::map<partition, std::size_t> fiber;
            for (const auto& mu : detail::odd_partitions_by_filter(n - h))
                fiber[mu] = 0;
            for (const auto& p : detail::odd_partitions_by_filter(n)) {
                auto it = fiber.find(detail::core_pow2(p, h));
                if (!rec.check(it != fiber.end(), [&] { return "core of " + to_string(p) + " not odd"; }))
                    return;
                ++it->second;
            }
            for (const auto& [mu, count] : fiber)
                if (!rec.check(count == static_cast<std::size_t>(h), [&] {
                        return "n=" + std::to_string(n) + " core " + to_string(mu) + " fiber " + std::to_string(count);
                    }))
                    return;
        }
    }));
    return out;
}

inline std::vector<theorem_result> check_core_quotient(int limit)
{
    std::vector<theorem_result> out;
    const int moduli[] = {2, 3, 4, 5, 8};
    out.push_back(detail::run("reconstruct(decompose(lambda, p)) = lambda", [&](detail::recorder& rec) {
        for (int n = 0; n <= limit; ++n)
            for (const auto& p : partitions_of(n))
                for (int m : moduli) {
                    const auto cq = decompose(p, m);
                    int weight = 0;
                    for (const auto& q : cq.quotient)
                        weight += q.size();
                    const bool ok = reconstruct(cq) == p && is_core(cq.core, m)
                                    && p.size() == cq.core.size() + m * weight;
                    if (!rec.check(ok, [&] { return to_string(p) + " p=" + std::to_string(m); }))
                        return;
                }
    }));
    out.push_back(detail::run("hooks divisible by p are p times quotient hooks", [&](detail::recorder& rec) {
        for (int n = 0; n <= limit; ++n)
            for (const auto& p : partitions_of(n))
                for (int m : moduli) {
                    std::multiset<int> scaled;
                    for (const auto& q : quotient(p, m))
                        for (int h : hook_multiset(q))
                            scaled.insert(m * h);
                    if (!rec.check(scaled == detail::divisible_hooks(p, m),
                                   [&] { return to_string(p) + " p=" + std::to_string(m); }))
                        return;
                }
    }));
    return out;
}

/// For odd lambda: the 2-core of its 2^k-core is its 2-core, and the
/// 2-quotient of its 2^k-core is the componentwise 2^(k-1)-core of its
/// 2-quotient.
inline theorem_result check_iterated_cores(int limit)
{
    return detail::run("2-core and 2-quotient of the 2^k-core", [&](detail::recorder& rec) {
        for (int n = 2; n <= limit; ++n) {
            const int k = detail::log2_floor(n);
            const int h = 1 << k;
            for (const auto& p : detail::odd_partitions_by_filter(n)) {
                const auto outer = decompose(p, 2);
                const auto inner = decompose(core(p, h), 2);
                bool ok = inner.core == outer.core;
                for (int i = 0; i < 2 && ok; ++i) {
                    const auto& q = outer.quotient[static_cast<std::size_t>(i)];
                    const auto expect = k >= 2 ? core(q, h / 2) : partition();
                    ok = inner.quotient[static_cast<std::size_t>(i)] == expect;
                }
                if (!rec.check(ok, [&] { return to_string(p); }))
                    return;
            }
        }
    });
}

inline suite_report parity_suite(int limit)
{
    suite_report r{"parity", limit, {}};
    r.results.push_back(check_v2_against_exact(std::min(limit, default_exact_limit)));
    r.results.push_back(check_legendre(default_exact_limit));
    r.results.push_back(check_macdonald_count(limit));
    r.results.push_back(check_two_quotient_criterion(std::min(limit, default_exact_limit)));
    for (auto& t : check_unique_hook_lemma(limit))
        r.results.push_back(std::move(t));
    for (auto& t : check_core_quotient(std::min(limit, 14)))
        r.results.push_back(std::move(t));
    r.results.push_back(check_iterated_cores(limit));
    return r;
}

// ------------------------------------------------------------------ tree

/// Every odd partition of 1..limit, by rank, via the fast enumeration.
inline std::vector<std::vector<partition>> odd_by_rank(int limit)
{
    std::vector<std::vector<partition>> out;
    for (int n = 0; n <= limit; ++n)
        out.push_back(enumerate_odd(n));
    return out;
}

inline theorem_result check_unique_parent(int limit)
{
    return detail::run("unique odd partition below every odd lambda", [&](detail::recorder& rec) {
        for (int n = 1; n <= limit; ++n)
            for (const auto& p : enumerate_odd(n)) {
                std::size_t odd = 0;
                for (const auto& mu : down_set(p))
                    odd += is_odd(mu) ? 1 : 0;
                if (!rec.check(odd == 1, [&] { return to_string(p) + " has " + std::to_string(odd); }))
                    return;
            }
    });
}

/// Predicted number of odd covers of an odd partition of n.
inline std::size_t predicted_children(const partition& p)
{
    const int n = p.size();
    if (n % 2 == 0)
        return 1;
    const int v = v2(static_cast<std::uint64_t>(n + 1));
    return is_hook(core(p, 1 << v)) ? 2 : 0;
}

inline theorem_result check_children_count(int limit)
{
    return detail::run("odd covers above: 1 for even n, 2 or 0 by hook 2^v-core", [&](detail::recorder& rec) {
        for (int n = 0; n <= limit; ++n)
            for (const auto& p : enumerate_odd(n)) {
                std::size_t odd = 0;
                for (const auto& mu : up_set(p))
                    odd += is_odd(mu) ? 1 : 0;
                if (!rec.check(odd == predicted_children(p), [&] { return to_string(p); }))
                    return;
            }
    });
}

inline std::vector<theorem_result> check_enumeration(int filter_limit, int count_limit)
{
    std::vector<theorem_result> out;
    out.push_back(detail::run("enumerate_odd equals exhaustive filter", [&](detail::recorder& rec) {
        for (int n = 0; n <= filter_limit; ++n) {
            const auto fast = enumerate_odd(n);
            const std::set<partition> a(fast.begin(), fast.end());
            const auto slow = detail::odd_partitions_by_filter(n);
            const std::set<partition> b(slow.begin(), slow.end());
            if (!rec.check(a == b && a.size() == fast.size(), [&] { return "n=" + std::to_string(n); }))
                return;
        }
    }));
    out.push_back(detail::run("|enumerate_odd(n)| = 2^alpha(n)", [&](detail::recorder& rec) {
        for (int n = 0; n <= count_limit; ++n)
            if (!rec.check(enumerate_odd(n).size() == count_odd(static_cast<std::uint64_t>(n)),
                           [&] { return "n=" + std::to_string(n); }))
                return;
    }));
    return out;
}

/// For 2^k - 1 < n < 2^(k+1) - 1, odd lambda has as many odd covers above
/// as its 2^k-core.
inline theorem_result check_counting_by_core(int limit)
{
    return detail::run("odd covers above lambda and above its 2^k-core agree", [&](detail::recorder& rec) {
        for (int n = 1; n <= limit; ++n) {
            const int k = detail::log2_floor(n + 1);
            if (n == (1 << (k + 1)) - 1 || n <= (1 << k) - 1)
                continue;
            for (const auto& p : enumerate_odd(n)) {
                const auto c = core(p, 1 << k);
                if (!rec.check(children(p).size() == children(c).size(), [&] { return to_string(p); }))
                    return;
            }
        }
    });
}

/// For odd lambda with 2^k < n < 2^(k+1), mu -> core_{2^k}(mu) is injective
/// on the odd partitions below lambda.
inline theorem_result check_coring_injective(int limit)
{
    return detail::run("2^k-coring is injective on odd covers below", [&](detail::recorder& rec) {
        for (int n = 3; n <= limit; ++n) {
            const int h = detail::top_power(n);
            if (h == n)
                continue;
            for (const auto& p : enumerate_odd(n)) {
                std::set<partition> images;
                std::size_t odd = 0;
                for (const auto& mu : down_set(p))
                    if (is_odd(mu)) {
                        ++odd;
                        images.insert(core(mu, h));
                    }
                if (!rec.check(images.size() == odd, [&] { return to_string(p); }))
                    return;
            }
        }
    });
}

/// Every odd cover pair in range matches exactly one variant and the
/// 2^k-cores differ by exactly the returned cell c'.
inline theorem_result check_cover_classification(int limit)
{
    return detail::run("cover classification and core relation", [&](detail::recorder& rec) {
        for (int n = 3; n <= limit; ++n) {
            const int k = detail::log2_floor(n - 1);
            const int h = 1 << k;
            if (n - 1 < h || n >= 2 * h)
                continue;
            for (const auto& lambda : enumerate_odd(n))
                for (const auto& mu : down_set(lambda)) {
                    if (!is_odd(mu))
                        continue;
                    const auto cls = classify_cover(lambda, mu, k);
                    const auto cl = core(lambda, h);
                    const auto cm = core(mu, h);
                    const auto corners = removable_cells(cl);
                    const bool ok = std::ranges::find(corners, cls.c_prime) != corners.end()
                                    && remove_cell(cl, cls.c_prime) == cm;
                    if (!rec.check(ok, [&] {
                            return to_string(lambda) + " > " + to_string(mu) + " variant " + to_char(cls.variant);
                        }))
                        return;
                }
        }
    });
}

inline suite_report tree_suite(int limit)
{
    suite_report r{"tree", limit, {}};
    r.results.push_back(check_unique_parent(limit));
    r.results.push_back(check_children_count(limit));
    for (auto& t : check_enumeration(std::min(limit, 24), limit + 15))
        r.results.push_back(std::move(t));
    r.results.push_back(check_counting_by_core(limit));
    r.results.push_back(check_coring_injective(limit + 1));
    r.results.push_back(check_cover_classification(limit + 1));
    return r;
}

// ----------------------------------------------------- fractal, rays, recursion

inline theorem_result check_self_similarity(int limit)
{
    return detail::run("2^v-coring is a tree isomorphism onto the root window", [&](detail::recorder& rec) {
        for (int n = 2; n <= limit; n += 2)
            for (int v = 1; v <= v2(static_cast<std::uint64_t>(n)); ++v)
                for (const auto& p : enumerate_odd(n)) {
                    bool ok = true;
                    std::string why;
                    try {
                        const auto m = self_similarity_map(p, v);
                        ok = m.size() == subtree(partition(), (1 << v) - 1).size();
                    } catch (const error& e) {
                        ok = false;
                        why = e.what();
                    }
                    if (!rec.check(ok, [&] { return to_string(p) + " v=" + std::to_string(v) + " " + why; }))
                        return;
                }
    });
}

inline suite_report fractal_suite(int limit)
{
    return {"fractal", limit, {check_self_similarity(limit)}};
}

inline suite_report rays_suite(int limit)
{
    suite_report r{"rays", limit, {}};
    r.results.push_back(detail::run("only the row and the column survive past 2^(k+1) - 1", [&](detail::recorder& rec) {
        for (int k = 1; k <= limit; ++k) {
            const auto report = verify_rays(k, std::max(limit, default_ray_limit));
            if (!rec.check(report.ok && report.extinct + 2 == report.roots,
                           [&] { return "k=" + std::to_string(k); }))
                return;
        }
    }));
    return r;
}

/// Rank 2^k - 1 of T_k: 2^(k choose 2) nodes, 2^(k-1) hooks, 2 one-dimensional.
inline theorem_result check_top_rank_counts(int limit)
{
    return detail::run("top rank of T_k: 2^C(k,2) nodes, 2^(k-1) hooks, 2 one-dimensional",
                       [&](detail::recorder& rec) {
                           for (int k = 2; k <= limit; ++k) {
                               const int top = (1 << k) - 1;
                               const auto t = subtree(partition(), top);
                               const bool ok = t.count_at_rank(top) == (std::size_t{1} << (k * (k - 1) / 2))
                                               && t.count_at_rank(top, mark::hook) == (std::size_t{1} << (k - 1))
                                               && t.count_at_rank(top, mark::one_dimensional) == 2;
                               if (!rec.check(ok, [&] { return "k=" + std::to_string(k); }))
                                   return;
                           }
                       });
}

inline suite_report recursive_suite(int limit)
{
    suite_report r{"recursive", limit, {}};
    r.results.push_back(detail::run("recursive T_{k+1} isomorphic to the tree up to 2^(k+1) - 1",
                                    [&](detail::recorder& rec) {
                                        for (int k = 1; k <= limit; ++k) {
                                            const auto built = build_recursive_tree(k, std::max(limit, default_recursive_limit));
                                            const auto real = subtree(partition(), (1 << (k + 1)) - 1);
                                            if (!rec.check(tree_isomorphic(built, real),
                                                           [&] { return "k=" + std::to_string(k); }))
                                                return;
                                        }
                                    }));
    r.results.push_back(detail::run("recursive marks match hooks and one-dimensional shapes",
                                    [&](detail::recorder& rec) {
                                        for (int k = 1; k <= limit; ++k) {
                                            const auto built = build_recursive_tree(k, std::max(limit, default_recursive_limit));
                                            const auto real = subtree(partition(), (1 << (k + 1)) - 1);
                                            if (!rec.check(tree_isomorphic(built, real, true),
                                                           [&] { return "k=" + std::to_string(k); }))
                                                return;
                                        }
                                    }));
    r.results.push_back(check_top_rank_counts(limit + 1));
    return r;
}

// ---------------------------------------------------------------- pascal

inline suite_report pascal_suite(int limit)
{
    suite_report r{"pascal", limit, {}};
    r.results.push_back(detail::run("to_hook: odd Pascal graph onto odd hooks", [&](detail::recorder& rec) {
        for (int n = 1; n <= limit; ++n)
            if (!rec.check(verify_pascal_embedding(n), [&] { return "N=" + std::to_string(n); }))
                return;
    }));
    r.results.push_back(detail::run("f of a hook is a binomial coefficient", [&](detail::recorder& rec) {
        // Pascal's rule, independent of the hook-length formula.
        std::vector<std::vector<big_int>> pascal{{1}};
        for (int n = 1; n <= 20; ++n) {
            std::vector<big_int> row(static_cast<std::size_t>(n + 1), 1);
            for (int m = 1; m < n; ++m)
                row[static_cast<std::size_t>(m)] = pascal.back()[static_cast<std::size_t>(m - 1)]
                                                   + pascal.back()[static_cast<std::size_t>(m)];
            pascal.push_back(std::move(row));
        }
        for (int n = 0; n <= 20; ++n)
            for (int m = 0; m <= n; ++m)
                if (!rec.check(f_exact(to_hook({m, n - m})) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)],
                               [&] { return "(" + std::to_string(m) + "," + std::to_string(n - m) + ")"; }))
                    return;
    }));
    r.results.push_back(detail::run("row n of the odd Pascal graph has 2^nu(n) points", [&](detail::recorder& rec) {
        const auto t = odd_pascal_graph(64);
        for (int n = 0; n <= 64; ++n)
            if (!rec.check(t.count_at_rank(n) == (std::size_t{1} << nu(static_cast<std::uint64_t>(n))),
                           [&] { return "n=" + std::to_string(n); }))
                return;
    }));
    return r;
}

// ------------------------------------------------------------------- fib

inline std::vector<theorem_result> check_fibonacci(int limit)
{
    std::vector<theorem_result> out;
    out.push_back(detail::run("r-differential for r = 1, 2, 3", [&](detail::recorder& rec) {
        for (int r = 1; r <= 3; ++r) {
            const auto p = build_fib(r, std::min(limit, 12));
            if (!rec.check(is_r_differential(p) && chains_consistent(p), [&] { return "r=" + std::to_string(r); }))
                return;
        }
    }));
    const auto z1 = build_fib(1, std::max(limit, 2));
    out.push_back(detail::run("Z(1) rank sizes are Fibonacci numbers", [&](detail::recorder& rec) {
        std::uint64_t a = 1, b = 1;
        for (int n = 0; n <= z1.max_rank(); ++n) {
            if (!rec.check(z1.rank_size(n) == a, [&] { return "rank " + std::to_string(n); }))
                return;
            const auto c = a + b;
            a = b;
            b = c;
        }
    }));
    out.push_back(detail::run("Z(1): 2^floor(n/2) odd elements at rank n", [&](detail::recorder& rec) {
        for (int n = 0; n <= z1.max_rank(); ++n)
            if (!rec.check(count_odd_fib(z1, n) == (std::size_t{1} << (n / 2)), [&] { return "rank " + std::to_string(n); }))
                return;
    }));
    out.push_back(detail::run("Z(1) odd tree: 1 branch at even rank, 2 at odd rank", [&](detail::recorder& rec) {
        const auto res = odd_subgraph(z1);
        if (!rec.check(std::holds_alternative<odd_tree>(res), [] { return std::string("not a tree"); }))
            return;
        const auto& t = std::get<odd_tree>(res);
        for (const auto& n : t.nodes()) {
            if (n.rank >= z1.max_rank())
                continue;
            const std::size_t want = n.rank % 2 == 0 ? 1 : 2;
            if (!rec.check(n.children.size() == want, [&] { return z1.label(n.payload->rank, n.payload->index); }))
                return;
        }
    }));
    out.push_back(detail::run("Z(2) odd subgraph is a tree with 2 branches everywhere", [&](detail::recorder& rec) {
        const auto z2 = build_fib(2, std::min(limit, 8));
        const auto res = odd_subgraph(z2);
        if (!rec.check(std::holds_alternative<odd_tree>(res), [] { return std::string("not a tree"); }))
            return;
        for (const auto& n : std::get<odd_tree>(res).nodes())
            if (n.rank < z2.max_rank() && !rec.check(n.children.size() == 2, [&] {
                    return z2.label(n.payload->rank, n.payload->index);
                }))
                return;
    }));
    out.push_back(detail::run("Z(3) odd subgraph is not a tree", [&](detail::recorder& rec) {
        const auto res = odd_subgraph(build_fib(3, std::min(limit, 6)));
        rec.check(std::holds_alternative<odd_subgraph_violation>(res), [] { return std::string("tree found"); });
    }));
    return out;
}

inline suite_report fib_suite(int limit) { return {"fib", limit, check_fibonacci(limit)}; }

// --------------------------------------------------------------- driver

struct suite_info {
    const char* name;
    int default_limit;
    suite_report (*run)(int);
};

inline const std::vector<suite_info>& suites()
{
    static const std::vector<suite_info> all{
        {"parity", 20, parity_suite},   {"tree", 30, tree_suite},
        {"fractal", 16, fractal_suite}, {"rays", 4, rays_suite},
        {"recursive", 4, recursive_suite}, {"pascal", 33, pascal_suite},
        {"fib", 14, fib_suite},
    };
    return all;
}

inline std::string format(const suite_report& r)
{
    std::ostringstream os;
    os << "suite " << r.suite << " (limit " << r.limit << "): " << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& t : r.results) {
        os << "  [" << (t.passed ? "ok  " : "FAIL") << "] " << t.name << " (" << t.checked << " checked)";
        if (!t.passed)
            os << "\n         counterexample: " << t.counterexample;
        os << '\n';
    }
    return os.str();
}

} // namespace macdonald::checks
