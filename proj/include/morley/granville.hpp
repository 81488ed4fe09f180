#pragma once

#include "morley/checks.hpp"
#include "morley/harmonic.hpp"
#include "morley/modular.hpp"

namespace morley {

/// q = (2^(p-1) - 1)/p, carried mod p²: enough precision for every use here,
/// pinned by the invariant 1 + p·q ≡ 2^(p-1) (mod p³).
struct FermatQuotient {
    OddPrime p;
    Residue q; // mod p²
};

FermatQuotient fermat_quotient_2(OddPrime p);

/// q(x) = (x^p - (x-1)^p - 1)/p mod p². x is canonicalized to 0..p-1 first;
/// the intermediate powers run mod p³ so the quotient is exact mod p².
/// Divisibility is guaranteed by Fermat's little theorem, so not_divisible
/// here means an arithmetic bug.
Residue q_x(OddPrime p, u64 x);

/// g(x) = Σ_{i=1..p-1} x^i/i mod p², O(p). Needs the mod-p² table.
Residue g_x(const HarmonicCache& c, u64 x);
Residue g_x(OddPrime p, u64 x);

/// G(x) = Σ_{i=1..p-1} x^i/i² mod p, O(p). Needs the mod-p table.
Residue G_x(const HarmonicCache& c, u64 x);
Residue G_x(OddPrime p, u64 x);

struct GranvilleTriple {
    Residue qx; // mod p²
    Residue gx; // mod p²
    Residue Gx; // mod p
};

GranvilleTriple granville_triple(const HarmonicCache& c, u64 x);

/// -G(x) ≡ (1/p)(q(x) + g(1-x)) (mod p). lhs = -G(x), rhs = the divided
/// bracket. A bracket p does not divide would refute the identity; it is
/// reported as a failed check with a diagnostic note, never thrown.
CheckResult granville_identity_check(const HarmonicCache& c, u64 x);
CheckResult granville_identity_check(OddPrime p, u64 x);

/// q² ≡ -G(2) (mod p).
CheckResult skula_check(const HarmonicCache& c);
CheckResult skula_check(OddPrime p);

} // namespace morley
