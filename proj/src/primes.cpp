#include "morley/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace morley {

bool is_prime(u64 n) noexcept {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    if (n % 3 == 0)
        return n == 3;
    for (u64 f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0)
            return false;
    }
    return true;
}

OddPrime::OddPrime(u64 p) : p_(p) {
    if (!is_prime(p))
        throw std::domain_error(std::to_string(p) +
                                " is not prime (hypothesis: p is prime and p>3)");
    if (p <= 3)
        throw std::domain_error(std::to_string(p) +
                                " is excluded (hypothesis: p is prime and p>3)");
}

PrimeRange::PrimeRange(u64 lo_, u64 hi_) : lo(lo_), hi(hi_) {
    if (lo > hi)
        throw std::invalid_argument("prime range bounds out of order: lo=" +
                                    std::to_string(lo) + " > hi=" + std::to_string(hi));
}

namespace {

u64 integer_sqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::vector<u64> simple_sieve(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2)
        return primes;
    std::vector<char> composite(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i)
            composite[j] = 1;
    }
    return primes;
}

} // namespace

void for_each_prime(const PrimeRange& range, const std::function<void(OddPrime)>& fn) {
    if (range.hi >= prime_limit_pow3)
        throw std::range_error("prime range hi=" + std::to_string(range.hi) +
                               " exceeds the fixed-width cap (p < 2^21)");
    u64 lo = std::max<u64>(range.lo, 5);
    u64 hi = range.hi;
    if (lo > hi)
        return;

    const std::vector<u64> base = simple_sieve(integer_sqrt(hi));
    constexpr u64 segment = u64{1} << 16;
    std::vector<char> composite;
    for (u64 start = lo; start <= hi; start += segment) {
        u64 end = std::min(hi, start + segment - 1);
        composite.assign(end - start + 1, 0);
        for (u64 q : base) {
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 x = first; x <= end; x += q)
                composite[x - start] = 1;
        }
        for (u64 x = start; x <= end; ++x) {
            if (!composite[x - start])
                fn(OddPrime(x));
        }
    }
}

std::vector<OddPrime> primes_in_range(const PrimeRange& range) {
    std::vector<OddPrime> out;
    for_each_prime(range, [&](OddPrime p) { out.push_back(p); });
    return out;
}

} // namespace morley
