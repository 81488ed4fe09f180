#pragma once

#include "morley/harmonic.hpp"
#include "morley/modular.hpp"

namespace morley {

/// (-1)^((p-1)/2): +1 when p ≡ 1 (mod 4), -1 when p ≡ 3 (mod 4).
inline int morley_sign(OddPrime p) {
    return p.value() % 4 == 1 ? +1 : -1;
}

/// A binomial coefficient question: C(top, bottom) under a modulus.
struct BinomQuery {
    u64 top;
    u64 bottom;
    Modulus modulus;
};

// Three independent routes to binomial coefficients. None of them calls
// another; their pairwise agreement is the correctness backbone.

/// Route 1 — product expansion of C(p,i) mod p³:
///   C(p,i) = (-1)^(i-1) · (p/i) · (1 - p/1)(1 - p/2)···(1 - p/(i-1)),
/// every p/j taken as p·inv(j) mod p³. Exact, nothing truncated. O(i).
/// Requires 1 <= i <= p-1 and a cache with the mod-p² table.
Residue binom_p_i_expansion(const HarmonicCache& c, u64 i);
Residue binom_p_i_expansion(OddPrime p, u64 i);

/// Route 2 — direct factorial product: C(p-1, i) = ∏_{j=1..i} (p-j)/j, every
/// factor a unit mod p^power. O(i) multiplications plus one inversion.
Residue binom_pminus1_product(OddPrime p, u64 i, int power = 3);

/// C(p-1, (p-1)/2) mod p³ via route 2.
Residue central_binom_mod_p3(OddPrime p);

/// Route 3 — Lucas: C(top, bottom) mod p as the product of base-p digit
/// binomials; a digit pair with bottom-digit > top-digit gives 0.
Residue lucas_binom(u64 top, u64 bottom, OddPrime p);

/// Exact C(top, bottom) mod p by one multiplicative pass with the power of p
/// tracked separately (positive net valuation gives 0). O(min(bottom,
/// top-bottom)); independent of the digit route, used as its cross-check.
Residue binom_mod_p_exact(u64 top, u64 bottom, OddPrime p);
Residue binom_mod_p_exact(const BinomQuery& q);

// The two sides Morley's congruence reduces to, as exact mod-p³ values.
// H is the half harmonic sum; precision per term: H mod p² under one factor
// of p, H mod p under p².

/// 1 - p·H + (p²/2)·H²            (the central-binomial side)
Residue rh_expansion(const HarmonicCache& c);
Residue rh_expansion(OddPrime p);

/// 1 - p·H + p²·(H²/4 + S), S the signed double sum   (the 4^(p-1) side)
Residue lh_expansion(const HarmonicCache& c);
Residue lh_expansion(OddPrime p);

} // namespace morley
