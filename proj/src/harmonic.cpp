#include "morley/harmonic.hpp"

#include <stdexcept>
#include <string>

namespace morley {

HarmonicCache::HarmonicCache(OddPrime p, Tables which) : p_(p) {
    const u64 n = p.value() - 1;
    if (which.mod_p)
        inv_p_ = inverse_table(n, p.value());
    if (which.mod_p_squared)
        inv_p2_ = inverse_table(n, p.value() * p.value());
}

std::span<const u64> HarmonicCache::table1() const {
    if (inv_p_.empty())
        throw std::logic_error("harmonic cache was built without the mod-p table");
    return inv_p_;
}

std::span<const u64> HarmonicCache::table2() const {
    if (inv_p2_.empty())
        throw std::logic_error("harmonic cache was built without the mod-p^2 table");
    return inv_p2_;
}

Residue harmonic_half(const HarmonicCache& c) {
    const u64 p = c.p();
    const u64 m2 = p * p;
    auto inv2 = c.table2();
    u64 acc = 0;
    for (u64 i = 1; i <= (p - 1) / 2; ++i)
        acc = add_mod(acc, inv2[i], m2);
    return Residue(acc, Modulus(c.prime(), 2));
}

Residue alternating_harmonic(const HarmonicCache& c) {
    const u64 p = c.p();
    const u64 m2 = p * p;
    auto inv2 = c.table2();
    u64 acc = 0;
    for (u64 i = 1; i < p; ++i) {
        acc = (i & 1) ? sub_mod(acc, inv2[i], m2) : add_mod(acc, inv2[i], m2);
    }
    return Residue(acc, Modulus(c.prime(), 2));
}

Residue full_harmonic(const HarmonicCache& c) {
    const u64 p = c.p();
    const u64 m2 = p * p;
    auto inv2 = c.table2();
    u64 acc = 0;
    for (u64 i = 1; i < p; ++i)
        acc = add_mod(acc, inv2[i], m2);
    return Residue(acc, Modulus(c.prime(), 2));
}

Residue inverse_square_sum_half(const HarmonicCache& c) {
    const u64 p = c.p();
    auto inv1 = c.table1();
    u64 acc = 0;
    for (u64 i = 1; i <= (p - 1) / 2; ++i)
        acc = add_mod(acc, mul_mod(inv1[i], inv1[i], p), p);
    return Residue(acc, Modulus(c.prime(), 1));
}

Residue parity_double_sum(const HarmonicCache& c, const ParityFilter& f) {
    const u64 p = c.p();
    auto inv1 = c.table1();
    // One pass; pre[b] holds the sum of 1/k over k < n with k ≡ b (mod 2).
    // Under j<i the running index n plays i and partners come from pre; under
    // i<j it plays j. Both cases read the partner's parity class only.
    u64 pre[2] = {0, 0};
    u64 acc = 0;
    const bool n_is_i = f.relation == PairOrder::j_less_than_i;
    const Parity n_parity = n_is_i ? f.parity_i : f.parity_j;
    const Parity partner_parity = n_is_i ? f.parity_j : f.parity_i;
    for (u64 n = 1; n < p; ++n) {
        if (parity_matches(n_parity, n)) {
            u64 partners = 0;
            if (partner_parity != Parity::even)
                partners = pre[1];
            if (partner_parity != Parity::odd)
                partners = add_mod(partners, pre[0], p);
            acc = add_mod(acc, mul_mod(inv1[n], partners, p), p);
        }
        pre[n & 1] = add_mod(pre[n & 1], inv1[n], p);
    }
    return Residue(acc, Modulus(c.prime(), 1));
}

Residue signed_double_sum(const HarmonicCache& c) {
    const u64 p = c.p();
    auto inv1 = c.table1();
    u64 pre = 0; // sum of 1/j over j < i
    u64 acc = 0;
    for (u64 i = 1; i < p; ++i) {
        u64 term = mul_mod(inv1[i], pre, p);
        acc = (i & 1) ? sub_mod(acc, term, p) : add_mod(acc, term, p);
        pre = add_mod(pre, inv1[i], p);
    }
    return Residue(acc, Modulus(c.prime(), 1));
}

Residue triangular_half_double_sum(const HarmonicCache& c) {
    const u64 p = c.p();
    auto inv1 = c.table1();
    u64 pre = 0;
    u64 acc = 0;
    for (u64 i = 1; i <= (p - 1) / 2; ++i) {
        acc = add_mod(acc, mul_mod(inv1[i], pre, p), p);
        pre = add_mod(pre, inv1[i], p);
    }
    return Residue(acc, Modulus(c.prime(), 1));
}

Residue naive_double_sum_oracle(OddPrime p, const ParityFilter& f, bool sign_on_i) {
    const u64 pv = p.value();
    if (pv > 2000)
        throw std::range_error("naive_double_sum_oracle: p=" + std::to_string(pv) +
                               " exceeds the p <= 2000 guard for O(p^2) enumeration");
    // Fermat inverses: independent of both the extended-gcd path and the
    // prefix-product tables the fast kernels use.
    std::vector<u64> inv(pv);
    for (u64 i = 1; i < pv; ++i)
        inv[i] = pow_mod_u64(i, pv - 2, pv);
    u64 acc = 0;
    for (u64 i = 1; i < pv; ++i) {
        if (!parity_matches(f.parity_i, i))
            continue;
        for (u64 j = 1; j < pv; ++j) {
            if (!parity_matches(f.parity_j, j))
                continue;
            if (f.relation == PairOrder::j_less_than_i ? !(j < i) : !(i < j))
                continue;
            u64 term = mul_mod(inv[i], inv[j], pv);
            if (sign_on_i && (i & 1))
                acc = sub_mod(acc, term, pv);
            else
                acc = add_mod(acc, term, pv);
        }
    }
    return Residue(acc, Modulus(p, 1));
}

namespace {

HarmonicCache one_shot_p(OddPrime p) { return HarmonicCache(p, {true, false}); }
HarmonicCache one_shot_p2(OddPrime p) { return HarmonicCache(p, {false, true}); }

} // namespace

Residue harmonic_half(OddPrime p) { return harmonic_half(one_shot_p2(p)); }
Residue alternating_harmonic(OddPrime p) { return alternating_harmonic(one_shot_p2(p)); }
Residue full_harmonic(OddPrime p) { return full_harmonic(one_shot_p2(p)); }
Residue inverse_square_sum_half(OddPrime p) { return inverse_square_sum_half(one_shot_p(p)); }
Residue parity_double_sum(OddPrime p, const ParityFilter& f) {
    return parity_double_sum(one_shot_p(p), f);
}
Residue signed_double_sum(OddPrime p) { return signed_double_sum(one_shot_p(p)); }
Residue triangular_half_double_sum(OddPrime p) {
    return triangular_half_double_sum(one_shot_p(p));
}

} // namespace morley
