#include "doctest.h"

#include "morley/granville.hpp"
#include "oracle.hpp"

using namespace morley;

TEST_CASE("fermat quotient of 2: worked values and Wieferich primes") {
    CHECK(fermat_quotient_2(OddPrime(5)).q.value() == 3);  // (16-1)/5
    CHECK(fermat_quotient_2(OddPrime(7)).q.value() == 9);  // (64-1)/7
    CHECK(fermat_quotient_2(OddPrime(5)).q.modulus().value() == 25);
    // The two known Wieferich primes: 2^(p-1) = 1 mod p^2, so q = 0 mod p.
    CHECK(fermat_quotient_2(OddPrime(1093)).q.reduce_to(1).value() == 0);
    CHECK(fermat_quotient_2(OddPrime(3511)).q.reduce_to(1).value() == 0);
    CHECK(fermat_quotient_2(OddPrime(5)).q.reduce_to(1).value() != 0);
}

TEST_CASE("defining invariant 1 + p·q = 2^(p-1) mod p^3, primes <= 10^4") {
    for_each_prime(PrimeRange(5, 10000), [&](OddPrime p) {
        Modulus m3(p, 3);
        u64 q = fermat_quotient_2(p).q.value();
        Residue lhs = m3.make(1 + p.value() * q); // q < p², so p·q < p³
        REQUIRE(lhs == pow_mod(m3.make(2), p.value() - 1));
    });
}

TEST_CASE("q(x): worked values") {
    CHECK(q_x(OddPrime(11), 1).value() == 0);
    CHECK(q_x(OddPrime(5), 2).value() == 6);  // (32-1-1)/5
    CHECK(q_x(OddPrime(7), 2).value() == 18); // (128-2)/7
    // q = q(2)/2
    Modulus m25(OddPrime(5), 2);
    CHECK(q_x(OddPrime(5), 2) * mod_inverse(m25.make(2)) == fermat_quotient_2(OddPrime(5)).q);
    // x = 0 wraps through -1: (0 - (-1)^p - 1)/p = 0
    CHECK(q_x(OddPrime(13), 0).value() == 0);
}

TEST_CASE("q = q(2)/2 for every prime <= 10^4") {
    for_each_prime(PrimeRange(5, 10000), [&](OddPrime p) {
        Modulus m2(p, 2);
        Residue two_q = m2.make(2) * fermat_quotient_2(p).q;
        REQUIRE(two_q == q_x(p, 2));
    });
}

TEST_CASE("g(x) and G(x): worked values") {
    CHECK(g_x(OddPrime(5), 0).value() == 0);
    CHECK(G_x(OddPrime(5), 0).value() == 0);
    CHECK(g_x(OddPrime(11), 1) == full_harmonic(OddPrime(11))); // = 0 by Wolstenholme
    CHECK(g_x(OddPrime(11), 1).value() == 0);
    CHECK(G_x(OddPrime(7), 2).value() == 3);
    CHECK(G_x(OddPrime(5), 2).value() == 1);
}

TEST_CASE("g(p-1) equals the alternating harmonic sum mod p^2, primes <= 2000") {
    // The representative p-1 for -1 keeps the identity exact at mod p^2:
    // (p-1)^i = (-1)^i (1 - ip) mod p^2 and the (-1)^i·p terms cancel in pairs.
    for_each_prime(PrimeRange(5, 2000), [&](OddPrime p) {
        HarmonicCache c(p, {false, true});
        REQUIRE(g_x(c, p.value() - 1) == alternating_harmonic(c));
    });
}

TEST_CASE("granville triple carries the three precisions") {
    HarmonicCache c(OddPrime(7), {true, true});
    GranvilleTriple t = granville_triple(c, 2);
    CHECK(t.qx.modulus().value() == 49);
    CHECK(t.gx.modulus().value() == 49);
    CHECK(t.Gx.modulus().value() == 7);
    CHECK(t.qx.value() == 18);
    CHECK(t.Gx.value() == 3);
}

TEST_CASE("granville identity: trivial x, worked primes, all x on small primes") {
    // x = 1: bracket = q(1) + g(0) = 0 and G(1) = sum 1/i^2 = 0 mod p
    for (u64 pv : {5ull, 7ull, 11ull, 13ull, 101ull}) {
        OddPrime p{pv};
        HarmonicCache c(p, {true, true});
        CheckResult r1 = granville_identity_check(c, 1);
        CHECK(r1.holds);
        CHECK(r1.lhs.value() == 0);
        CHECK(r1.rhs.value() == 0);
        for (u64 x = 0; x < pv; ++x)
            REQUIRE(granville_identity_check(c, x).holds);
    }
    CHECK(granville_identity_check(OddPrime(5), 2).holds);
    CHECK(granville_identity_check(OddPrime(7), 3).holds);
}

TEST_CASE("check outcome is independent of the representative x vs x + p") {
    for (u64 pv : {5ull, 13ull, 29ull}) {
        OddPrime p{pv};
        HarmonicCache c(p, {true, true});
        for (u64 x = 0; x < pv; ++x) {
            CheckResult a = granville_identity_check(c, x);
            CheckResult b = granville_identity_check(c, x + pv);
            CHECK(a.holds == b.holds);
            CHECK(a.lhs == b.lhs);
            CHECK(a.rhs == b.rhs);
        }
    }
}

TEST_CASE("skula: q^2 = -G(2) mod p") {
    CheckResult r5 = skula_check(OddPrime(5));
    CHECK(r5.holds);
    CHECK(r5.lhs.value() == 4); // q=3, q²=9=4
    CHECK(r5.rhs.value() == 4); // -G(2) = -1 = 4
    CheckResult r7 = skula_check(OddPrime(7));
    CHECK(r7.holds);
    CHECK(r7.lhs.value() == 4);
    CHECK(skula_check(OddPrime(11)).holds);
}

TEST_CASE("the 2q = -g(-1) + q^2·p chain holds mod p^2, primes <= 2000") {
    for_each_prime(PrimeRange(5, 2000), [&](OddPrime p) {
        const u64 pv = p.value();
        Modulus m2(p, 2);
        HarmonicCache c(p, {false, true});
        u64 q2 = fermat_quotient_2(p).q.value();
        u64 qp = q2 % pv;
        Residue lhs = m2.make(mul_mod(2, q2, m2.value()));
        Residue rhs = -g_x(c, pv - 1) + m2.make(pv * mul_mod(qp, qp, pv));
        REQUIRE(lhs == rhs);
    });
}
