#pragma once

// 2-adic arithmetic of f_lambda, the number of standard Young tableaux.
//
// v2_f walks the 2-quotient recursion and never forms f_lambda; f_exact
// evaluates the hook-length formula in arbitrary precision and is kept as
// the independent reference.

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "core_quotient.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace macdonald {

using big_int = boost::multiprecision::cpp_int;

/// Binary digit sum.
constexpr int nu(std::uint64_t n) noexcept { return std::popcount(n); }

/// alpha(n) = a_1 + 2 a_2 + 3 a_3 + ... for n = sum a_i 2^i.
constexpr int alpha(std::uint64_t n) noexcept
{
    int total = 0;
    for (int i = 1; i < 64; ++i)
        if ((n >> i) & 1U)
            total += i;
    return total;
}

/// 2-adic valuation; v2(0) is undefined.
inline int v2(std::uint64_t n)
{
    if (n == 0)
        throw error(errc::invalid_argument, "v2(0) is undefined");
    return std::countr_zero(n);
}

inline int v2(const big_int& n)
{
    if (n == 0)
        throw error(errc::invalid_argument, "v2(0) is undefined");
    return static_cast<int>(boost::multiprecision::lsb(n));
}

/// 2-adic valuation of f_lambda.
inline int v2_f(const partition& lambda)
{
    if (lambda.size() <= 1)
        return 0;

    thread_local std::unordered_map<partition, int> memo;
    if (auto it = memo.find(lambda); it != memo.end())
        return it->second;

    const core_quotient cq = decompose(lambda, 2);
    const auto n = static_cast<std::uint64_t>(lambda.size());
    const auto a = static_cast<std::uint64_t>(cq.core.size());
    const auto m0 = static_cast<std::uint64_t>(cq.quotient[0].size());
    const auto m1 = static_cast<std::uint64_t>(cq.quotient[1].size());

    // Both bracketed terms are nonnegative; the second is the number of
    // carries when a, 2 m0 and 2 m1 are added in binary.
    const int value = (static_cast<int>(a) - nu(a)) + (nu(a) + nu(2 * m0) + nu(2 * m1) - nu(n))
                      + v2_f(cq.quotient[0]) + v2_f(cq.quotient[1]);
    memo.emplace(lambda, value);
    return value;
}

inline bool is_odd(const partition& lambda) { return v2_f(lambda) == 0; }

inline constexpr int default_exact_limit = 40;

inline big_int factorial(int n)
{
    big_int out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

/// f_lambda = n! / (product of hook lengths), exactly.
inline big_int f_exact(const partition& lambda, int limit = default_exact_limit)
{
    if (lambda.size() > limit)
        throw error(errc::limit_exceeded, "|lambda|=" + std::to_string(lambda.size()) + " exceeds limit "
                                              + std::to_string(limit));
    big_int hooks = 1;
    for (int h : hook_multiset(lambda))
        hooks *= h;
    big_int num = factorial(lambda.size());
    if (num % hooks != 0)
        throw error(errc::theorem_violation, "hook product does not divide n!");
    return num / hooks;
}

/// binom(n, m) is odd iff m and n - m have no common binary digit.
inline bool binomial_is_odd(std::uint64_t n, std::uint64_t m)
{
    if (m > n)
        throw error(errc::invalid_argument, "binomial_is_odd requires m <= n");
    return (m & (n - m)) == 0;
}

/// Number of odd partitions of n, 2^alpha(n).
inline std::uint64_t count_odd(std::uint64_t n)
{
    const int e = alpha(n);
    if (e >= 64)
        throw error(errc::limit_exceeded, "2^alpha(n) does not fit in 64 bits");
    return std::uint64_t{1} << e;
}

} // namespace macdonald
