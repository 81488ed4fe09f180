#pragma once

#include <functional>
#include <vector>

#include "morley/ints.hpp"

namespace morley {

/// Deterministic primality by trial division. Exact for every u64 it is
/// actually asked about here (all callers stay below the arithmetic caps).
bool is_prime(u64 n) noexcept;

/// A validated prime p > 3 — the hypothesis shared by every congruence in
/// this library. Constructing one from 2, 3 or a composite throws.
class OddPrime {
public:
    explicit OddPrime(u64 p);
    u64 value() const noexcept { return p_; }
    friend bool operator==(OddPrime, OddPrime) = default;
    friend auto operator<=>(OddPrime, OddPrime) = default;

private:
    u64 p_;
};

/// Inclusive bounds; iteration yields exactly the primes in [max(lo,5), hi].
struct PrimeRange {
    u64 lo;
    u64 hi;
    PrimeRange(u64 lo_, u64 hi_);
};

/// Segmented sieve over the range; memory is O(segment), not O(hi).
/// Throws std::range_error when hi exceeds the fixed-width cap (p < 2^21).
void for_each_prime(const PrimeRange& range, const std::function<void(OddPrime)>& fn);

std::vector<OddPrime> primes_in_range(const PrimeRange& range);

} // namespace morley
