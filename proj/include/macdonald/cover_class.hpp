#pragma once

// Classification of an odd cover mu < lambda relative to the unique 2^k-rim
// hooks r of lambda and s of mu, when 2^k <= |mu| and |lambda| < 2^(k+1).
//
//   A  c has no neighbour in r; r = s and c' = c
//   B  c = hand(r) = east of hand(s); c' = west of foot(r) = foot(s)
//   C  c = foot(r) = south of foot(s); c' = north of hand(r) = hand(s)
//   D  north and west of c both lie in r and s; c' = north-west of c
//
// c is the cell of lambda not in mu and c' the cell of the 2^k-core of
// lambda not in the 2^k-core of mu.

#include <array>
#include <string>

#include "core_quotient.hpp"
#include "error.hpp"
#include "parity.hpp"
#include "partition.hpp"

namespace macdonald {

enum class cover_variant { A, B, C, D };

inline char to_char(cover_variant v) noexcept { return static_cast<char>('A' + static_cast<int>(v)); }

struct cover_class {
    cover_variant variant = cover_variant::A;
    cell c;
    cell c_prime;

    friend bool operator==(const cover_class&, const cover_class&) = default;
};

inline cover_class classify_cover(const partition& lambda, const partition& mu, int k)
{
    auto fail = [&](const std::string& why) {
        throw error(errc::precondition_violation,
                    "classify_cover(" + to_string(lambda) + ", " + to_string(mu) + ", " + std::to_string(k) + "): " + why);
    };
    if (k < 1 || k > 30)
        fail("k out of range");
    const int h = 1 << k;
    if (mu.size() < h || lambda.size() >= 2 * h)
        fail("sizes outside [2^k, 2^(k+1))");
    if (mu.size() + 1 != lambda.size())
        fail("mu is not covered by lambda");

    cell c{};
    bool found = false;
    for (const cell& corner : removable_cells(lambda)) {
        if (remove_cell(lambda, corner) == mu) {
            c = corner;
            found = true;
            break;
        }
    }
    if (!found)
        fail("mu is not covered by lambda");
    if (!is_odd(lambda) || !is_odd(mu))
        fail("both partitions must be odd");

    const auto r = unique_pk_hook(lambda, k);
    const auto s = unique_pk_hook(mu, k);
    if (!r || !s)
        throw error(errc::theorem_violation, "odd partition without a 2^k-rim hook");

    const bool has_neighbour = r->contains(c.north()) || r->contains(c.south()) || r->contains(c.east())
                               || r->contains(c.west());

    std::array<bool, 4> holds{};
    std::array<cell, 4> image{};

    holds[0] = !has_neighbour && *r == *s;
    image[0] = c;

    holds[1] = c == r->hand() && c == s->hand().east() && r->foot().west() == s->foot();
    image[1] = r->foot().west();

    holds[2] = c == r->foot() && c == s->foot().south() && r->hand().north() == s->hand();
    image[2] = r->hand().north();

    holds[3] = r->contains(c.north()) && r->contains(c.west()) && s->contains(c.north()) && s->contains(c.west());
    image[3] = c.north().west();

    int matches = 0;
    cover_class out;
    for (int i = 0; i < 4; ++i) {
        if (holds[static_cast<std::size_t>(i)]) {
            ++matches;
            out = {static_cast<cover_variant>(i), c, image[static_cast<std::size_t>(i)]};
        }
    }
    if (matches != 1)
        throw error(errc::theorem_violation, "cover " + to_string(lambda) + " > " + to_string(mu) + " matches "
                                                 + std::to_string(matches) + " variants");
    return out;
}

} // namespace macdonald
