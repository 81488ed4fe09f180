#pragma once

#include <cstdint>

#include "morley/errors.hpp"

namespace morley {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Fixed-width bounds: residues are u64, products of two residues u128. p^k must
// stay below 2^63 so that sums of two canonical values never wrap.
inline constexpr u64 prime_limit_pow3 = u64{1} << 21; // p < 2^21  =>  p^3 < 2^63
inline constexpr u64 prime_limit_pow4 = u64{1} << 15; // p < 2^15  =>  p^4 < 2^60

// Raw helpers. Operands must be canonical (a, b < m) and m < 2^63.
constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + (m - b);
}

constexpr u64 neg_mod(u64 a, u64 m) {
    return a == 0 ? 0 : m - a;
}

constexpr u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    u64 b = base % m;
    while (exp != 0) {
        if (exp & 1)
            r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return r;
}

/// Multiplicative inverse of a mod m by the extended euclidean algorithm.
/// Throws not_invertible when gcd(a, m) != 1.
u64 inv_mod_u64(u64 a, u64 m);

} // namespace morley
