#include "morley/binomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace morley {

Residue binom_p_i_expansion(const HarmonicCache& c, u64 i) {
    const u64 p = c.p();
    if (i < 1 || i > p - 1)
        throw std::range_error("binom_p_i_expansion: i=" + std::to_string(i) +
                               " outside 1..p-1 (p=" + std::to_string(p) + ")");
    Modulus m3(c.prime(), 3);
    const u64 m = m3.value();
    auto inv2 = c.table2();
    // p·inv(j) mod p³ only needs inv(j) mod p²: p·(inv + c·p²) ≡ p·inv.
    u64 r = p * inv2[i]; // < p·p² = p³, exact
    for (u64 j = 1; j < i; ++j)
        r = mul_mod(r, sub_mod(1, p * inv2[j], m), m);
    if ((i & 1) == 0) // (-1)^(i-1)
        r = neg_mod(r, m);
    return Residue(r, m3);
}

Residue binom_p_i_expansion(OddPrime p, u64 i) {
    return binom_p_i_expansion(HarmonicCache(p, {false, true}), i);
}

Residue binom_pminus1_product(OddPrime p, u64 i, int power) {
    const u64 pv = p.value();
    if (i > pv - 1)
        throw std::range_error("binom_pminus1_product: i=" + std::to_string(i) +
                               " outside 0..p-1");
    Modulus mod(p, power);
    const u64 m = mod.value();
    u64 num = 1, den = 1;
    for (u64 j = 1; j <= i; ++j) {
        num = mul_mod(num, pv - j, m);
        den = mul_mod(den, j, m);
    }
    return Residue(mul_mod(num, inv_mod_u64(den, m), m), mod);
}

Residue central_binom_mod_p3(OddPrime p) {
    return binom_pminus1_product(p, (p.value() - 1) / 2, 3);
}

namespace {

// C(n, k) mod p for single base-p digits n, k < p.
u64 digit_binom(u64 n, u64 k, u64 p) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    u64 num = 1, den = 1;
    for (u64 t = 1; t <= k; ++t) {
        num = mul_mod(num, (n - k + t) % p, p);
        den = mul_mod(den, t, p);
    }
    return mul_mod(num, inv_mod_u64(den, p), p);
}

} // namespace

Residue lucas_binom(u64 top, u64 bottom, OddPrime p) {
    const u64 pv = p.value();
    u64 r = 1;
    while ((top != 0 || bottom != 0) && r != 0) {
        r = mul_mod(r, digit_binom(top % pv, bottom % pv, pv), pv);
        top /= pv;
        bottom /= pv;
    }
    return Residue(r, Modulus(p, 1));
}

Residue binom_mod_p_exact(u64 top, u64 bottom, OddPrime p) {
    const u64 pv = p.value();
    Modulus m1(p, 1);
    if (bottom > top)
        return Residue(0, m1);
    u64 k = std::min(bottom, top - bottom);
    i64 val = 0; // net power of p in C(top, bottom); never negative at the end
    u64 num = 1, den = 1;
    for (u64 t = 1; t <= k; ++t) {
        u64 a = top - k + t;
        while (a % pv == 0) {
            a /= pv;
            ++val;
        }
        u64 b = t;
        while (b % pv == 0) {
            b /= pv;
            --val;
        }
        num = mul_mod(num, a % pv, pv);
        den = mul_mod(den, b % pv, pv);
    }
    if (val > 0)
        return Residue(0, m1);
    return Residue(mul_mod(num, inv_mod_u64(den, pv), pv), m1);
}

Residue binom_mod_p_exact(const BinomQuery& q) {
    if (q.modulus.power() != 1)
        throw std::invalid_argument("binom_mod_p_exact answers mod p only");
    return binom_mod_p_exact(q.top, q.bottom, OddPrime(q.modulus.prime()));
}

Residue rh_expansion(const HarmonicCache& c) {
    const u64 p = c.p();
    Modulus m3(c.prime(), 3);
    const u64 m = m3.value();
    const u64 h2 = harmonic_half(c).value(); // mod p²
    const u64 hp = h2 % p;
    u64 r = sub_mod(1, p * h2 % m, m);
    u64 sq = mul_mod(mul_mod(hp, hp, p), inv_mod_u64(2, p), p);
    return Residue(add_mod(r, p * p * sq, m), m3);
}

Residue lh_expansion(const HarmonicCache& c) {
    const u64 p = c.p();
    Modulus m3(c.prime(), 3);
    const u64 m = m3.value();
    const u64 h2 = harmonic_half(c).value();
    const u64 hp = h2 % p;
    const u64 s = signed_double_sum(c).value();
    u64 inner = mul_mod(mul_mod(hp, hp, p), inv_mod_u64(4, p), p);
    inner = add_mod(inner, s, p);
    u64 r = sub_mod(1, p * h2 % m, m);
    return Residue(add_mod(r, p * p * inner, m), m3);
}

Residue rh_expansion(OddPrime p) { return rh_expansion(HarmonicCache(p, {false, true})); }

Residue lh_expansion(OddPrime p) { return lh_expansion(HarmonicCache(p, {true, true})); }

} // namespace morley
