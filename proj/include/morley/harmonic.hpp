#pragma once

#include <span>
#include <vector>

#include "morley/modular.hpp"

namespace morley {

enum class Parity : u8 { odd, even, any };
enum class PairOrder : u8 { j_less_than_i, i_less_than_j };

/// Index-pair filter for the double sums: indices run over 0 < i, j < p with
/// the stated parities and a strict order relation between them.
struct ParityFilter {
    Parity parity_i = Parity::any;
    Parity parity_j = Parity::any;
    PairOrder relation = PairOrder::j_less_than_i;

    friend bool operator==(const ParityFilter&, const ParityFilter&) = default;
};

constexpr Parity flipped(Parity p) {
    switch (p) {
    case Parity::odd: return Parity::even;
    case Parity::even: return Parity::odd;
    default: return Parity::any;
    }
}

constexpr PairOrder reversed(PairOrder o) {
    return o == PairOrder::j_less_than_i ? PairOrder::i_less_than_j
                                         : PairOrder::j_less_than_i;
}

/// The substitution (i, j) -> (p-i, p-j): p is odd, so both parities flip,
/// and the order relation reverses. Under it, 1/((p-i)(p-j)) = 1/(ij) mod p,
/// so a filtered double sum equals the sum over the reflected filter.
constexpr ParityFilter reflected(const ParityFilter& f) {
    return ParityFilter{flipped(f.parity_i), flipped(f.parity_j), reversed(f.relation)};
}

constexpr bool parity_matches(Parity want, u64 v) {
    switch (want) {
    case Parity::odd: return (v & 1) == 1;
    case Parity::even: return (v & 1) == 0;
    default: return true;
    }
}

/// Per-prime inverse tables shared across checks. Immutable after
/// construction; which tables exist is decided up front by the caller.
class HarmonicCache {
public:
    struct Tables {
        bool mod_p;
        bool mod_p_squared;
    };

    explicit HarmonicCache(OddPrime p, Tables which = Tables{true, false});

    OddPrime prime() const noexcept { return p_; }
    u64 p() const noexcept { return p_.value(); }

    bool has_mod_p() const noexcept { return !inv_p_.empty(); }
    bool has_mod_p_squared() const noexcept { return !inv_p2_.empty(); }

    /// inv1(i)·i ≡ 1 (mod p), inv2(i)·i ≡ 1 (mod p²), for 1 <= i < p.
    u64 inv1(u64 i) const { return table1()[i]; }
    u64 inv2(u64 i) const { return table2()[i]; }

    std::span<const u64> table1() const;
    std::span<const u64> table2() const;

private:
    OddPrime p_;
    std::vector<u64> inv_p_;
    std::vector<u64> inv_p2_;
};

// Single sums. Each has a convenience overload that builds a one-shot cache.

/// Sum of 1/i for 1 <= i <= (p-1)/2, mod p².
Residue harmonic_half(const HarmonicCache& c);
Residue harmonic_half(OddPrime p);

/// Sum of (-1)^i / i for 1 <= i <= p-1, mod p².
Residue alternating_harmonic(const HarmonicCache& c);
Residue alternating_harmonic(OddPrime p);

/// Sum of 1/i for 1 <= i <= p-1, mod p². Wolstenholme: 0 for every p > 3.
Residue full_harmonic(const HarmonicCache& c);
Residue full_harmonic(OddPrime p);

/// Sum of 1/i² for 1 <= i <= (p-1)/2, mod p.
Residue inverse_square_sum_half(const HarmonicCache& c);
Residue inverse_square_sum_half(OddPrime p);

// Double sums, all mod p, all one O(p) pass over parity-segregated prefix
// sums of 1/i. Empty index sets give 0.

Residue parity_double_sum(const HarmonicCache& c, const ParityFilter& f);
Residue parity_double_sum(OddPrime p, const ParityFilter& f);

/// Sum over 0 < j < i < p of (-1)^i / (ij), mod p.
Residue signed_double_sum(const HarmonicCache& c);
Residue signed_double_sum(OddPrime p);

/// Sum over 1 <= j < i <= (p-1)/2 of 1/(ij), mod p.
Residue triangular_half_double_sum(const HarmonicCache& c);
Residue triangular_half_double_sum(OddPrime p);

/// Brute-force two-loop enumeration of a filtered double sum, mod p. The
/// sign, when requested, is (-1)^i — attached to index i regardless of the
/// order relation. Inverses come from Fermat exponentiation so the oracle
/// shares no code path with the prefix-sum kernels. Guarded to p <= 2000.
Residue naive_double_sum_oracle(OddPrime p, const ParityFilter& f, bool sign_on_i);

} // namespace morley
