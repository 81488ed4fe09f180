#pragma once

#include <vector>

#include "morley/ints.hpp"
#include "morley/primes.hpp"

namespace morley {

class Residue;

/// A prime power p^k, k in 1..4. k <= 3 is the public contract; k = 4 exists
/// for the one operation that peeks past the theorem (the Morley residual)
/// and carries a tighter cap.
class Modulus {
public:
    Modulus(OddPrime p, int power);

    u64 prime() const noexcept { return p_; }
    int power() const noexcept { return k_; }
    u64 value() const noexcept { return m_; }

    /// Canonicalize an arbitrary nonnegative integer.
    Residue make(u64 v) const;
    /// Canonicalize a signed integer, folding negatives immediately.
    Residue make_signed(i64 v) const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    u64 p_;
    u64 m_;
    int k_;
};

/// A canonical residue: 0 <= value < p^k, with its modulus attached. Mixing
/// residues of different moduli throws modulus_mismatch instead of coercing.
class Residue {
public:
    Residue(u64 value, const Modulus& mod);

    u64 value() const noexcept { return v_; }
    const Modulus& modulus() const noexcept { return mod_; }

    /// Map mod p^k -> mod p^j for j <= k.
    Residue reduce_to(int power) const;

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a);
    friend bool operator==(const Residue&, const Residue&) = default;

private:
    u64 v_;
    Modulus mod_;
};

/// Inverse of a unit; throws not_invertible when p divides the value.
Residue mod_inverse(const Residue& a);

/// base^exp by square-and-multiply; exp = 0 gives 1.
Residue pow_mod(const Residue& base, u64 exp);

/// (value / p) as a residue mod p^(k-1); requires k >= 2 and p | value,
/// otherwise throws not_divisible.
Residue exact_div_by_p(const Residue& a);

/// Inverses of 1..n mod p^k in O(n) multiplications plus one inversion
/// (prefix-product trick, all k). result[i-1] = inverse of i.
/// Throws std::range_error when n >= p.
std::vector<Residue> batch_inverses(u64 n, const Modulus& mod);

/// Kernel behind batch_inverses and the harmonic tables: t[i] = inv(i) mod m
/// for 1 <= i <= n, t[0] = 0. Preconditions as above (n < p).
std::vector<u64> inverse_table(u64 n, u64 m);

} // namespace morley
