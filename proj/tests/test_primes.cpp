#include "doctest.h"

#include <stdexcept>

#include "morley/primes.hpp"

using namespace morley;

TEST_CASE("is_prime on small and worked values") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(343)); // 7^3
    CHECK_FALSE(is_prime(2097151)); // 2^21 - 1
    CHECK(is_prime(9973));
}

TEST_CASE("OddPrime enforces the hypothesis p prime, p > 3") {
    CHECK(OddPrime(5).value() == 5);
    CHECK(OddPrime(50021).value() == 50021);
    CHECK_THROWS_AS(OddPrime(2), std::domain_error);
    CHECK_THROWS_AS(OddPrime(3), std::domain_error);
    CHECK_THROWS_AS(OddPrime(9), std::domain_error);
    try {
        OddPrime(9);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("9 is not prime") != std::string::npos);
        CHECK(std::string(e.what()).find("p>3") != std::string::npos);
    }
    try {
        OddPrime(3);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("p>3") != std::string::npos);
    }
}

TEST_CASE("PrimeRange validates its bounds") {
    CHECK_THROWS_AS(PrimeRange(10, 9), std::invalid_argument);
    PrimeRange r(9, 9);
    CHECK(r.lo == 9);
}

TEST_CASE("primes_in_range worked examples") {
    auto ps = primes_in_range(PrimeRange(5, 20));
    REQUIRE(ps.size() == 6);
    const u64 want[] = {5, 7, 11, 13, 17, 19};
    for (int i = 0; i < 6; ++i)
        CHECK(ps[i].value() == want[i]);

    CHECK(primes_in_range(PrimeRange(24, 28)).empty());

    auto one = primes_in_range(PrimeRange(9973, 9973));
    REQUIRE(one.size() == 1);
    CHECK(one[0].value() == 9973);

    // 2 and 3 never appear even when the range covers them
    auto low = primes_in_range(PrimeRange(0, 10));
    REQUIRE(low.size() == 2);
    CHECK(low[0].value() == 5);
    CHECK(low[1].value() == 7);
}

TEST_CASE("primes_in_range rejects ranges past the arithmetic cap") {
    CHECK_THROWS_AS(primes_in_range(PrimeRange(5, u64{1} << 21)), std::range_error);
    CHECK_THROWS_AS(primes_in_range(PrimeRange(5, (u64{1} << 21) + 100)), std::range_error);
    // just inside the cap is fine
    CHECK_NOTHROW(primes_in_range(PrimeRange((u64{1} << 21) - 200, (u64{1} << 21) - 1)));
}

TEST_CASE("sieve cross-oracle against trial division up to 10^4") {
    auto ps = primes_in_range(PrimeRange(5, 10000));
    std::size_t idx = 0;
    u64 count_by_trial = 0;
    for (u64 n = 5; n <= 10000; ++n) {
        if (!is_prime(n))
            continue;
        ++count_by_trial;
        REQUIRE(idx < ps.size());
        CHECK(ps[idx].value() == n);
        ++idx;
    }
    CHECK(idx == ps.size());
    // 1229 primes below 10^4, of which 1227 exceed 3
    CHECK(count_by_trial == 1227);
    CHECK(ps.size() == 1227);
}

TEST_CASE("segmented sieve is ascending and duplicate-free across segment seams") {
    // Range straddling several 2^16-wide segments.
    auto ps = primes_in_range(PrimeRange(60000, 400000));
    for (std::size_t i = 1; i < ps.size(); ++i)
        CHECK(ps[i - 1].value() < ps[i].value());
    for (const auto& p : ps)
        CHECK(is_prime(p.value()));
}
