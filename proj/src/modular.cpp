#include "morley/modular.hpp"

#include <stdexcept>
#include <string>

namespace morley {

u64 inv_mod_u64(u64 a, u64 m) {
    // Iterative extended euclid. m < 2^63 keeps the Bezout coefficients in i64.
    i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tr = old_r - q * r;
        old_r = r;
        r = tr;
        i64 ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    if (old_r != 1)
        throw not_invertible("not invertible: gcd(" + std::to_string(a) + ", " +
                             std::to_string(m) + ") != 1 (a multiple of p where a unit "
                             "was required)");
    return old_s >= 0 ? static_cast<u64>(old_s) : static_cast<u64>(old_s + static_cast<i64>(m));
}

Modulus::Modulus(OddPrime p, int power) : p_(p.value()), m_(1), k_(power) {
    if (power < 1 || power > 4)
        throw std::invalid_argument("modulus power must be in 1..4, got " +
                                    std::to_string(power));
    if (power <= 3 && p_ >= prime_limit_pow3)
        throw std::range_error("p=" + std::to_string(p_) +
                               " exceeds the fixed-width cap: p < 2^21 is required for "
                               "moduli p^k, k <= 3");
    if (power == 4 && p_ >= prime_limit_pow4)
        throw std::range_error("p=" + std::to_string(p_) +
                               " exceeds the fixed-width cap: p < 2^15 is required for "
                               "the mod p^4 residual");
    for (int i = 0; i < power; ++i)
        m_ *= p_;
}

Residue Modulus::make(u64 v) const {
    return Residue(v % m_, *this);
}

Residue Modulus::make_signed(i64 v) const {
    i64 m = static_cast<i64>(m_);
    i64 r = v % m;
    if (r < 0)
        r += m;
    return Residue(static_cast<u64>(r), *this);
}

Residue::Residue(u64 value, const Modulus& mod) : v_(value), mod_(mod) {
    if (v_ >= mod_.value())
        throw std::invalid_argument("residue value " + std::to_string(v_) +
                                    " is not canonical under modulus " +
                                    std::to_string(mod_.value()));
}

Residue Residue::reduce_to(int power) const {
    if (power < 1 || power > mod_.power())
        throw std::invalid_argument("reduce_to: target power " + std::to_string(power) +
                                    " not in 1..k (k=" + std::to_string(mod_.power()) + ")");
    if (power == mod_.power())
        return *this;
    Modulus target(OddPrime(mod_.prime()), power);
    return Residue(v_ % target.value(), target);
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus()))
        throw modulus_mismatch("arithmetic between residues of different moduli (" +
                               std::to_string(a.modulus().value()) + " vs " +
                               std::to_string(b.modulus().value()) +
                               "); reduce explicitly first");
}

} // namespace

Residue operator+(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(add_mod(a.v_, b.v_, a.mod_.value()), a.mod_);
}

Residue operator-(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(sub_mod(a.v_, b.v_, a.mod_.value()), a.mod_);
}

Residue operator*(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(mul_mod(a.v_, b.v_, a.mod_.value()), a.mod_);
}

Residue operator-(const Residue& a) {
    return Residue(neg_mod(a.v_, a.mod_.value()), a.mod_);
}

Residue mod_inverse(const Residue& a) {
    return Residue(inv_mod_u64(a.value(), a.modulus().value()), a.modulus());
}

Residue pow_mod(const Residue& base, u64 exp) {
    return Residue(pow_mod_u64(base.value(), exp, base.modulus().value()), base.modulus());
}

Residue exact_div_by_p(const Residue& a) {
    const Modulus& m = a.modulus();
    if (m.power() < 2)
        throw std::invalid_argument("exact_div_by_p needs a modulus p^k with k >= 2");
    if (a.value() % m.prime() != 0)
        throw not_divisible("exact division failed: " + std::to_string(m.prime()) +
                            " does not divide " + std::to_string(a.value()) +
                            " (mod p^" + std::to_string(m.power()) + ")");
    Modulus down(OddPrime(m.prime()), m.power() - 1);
    return Residue(a.value() / m.prime(), down);
}

std::vector<u64> inverse_table(u64 n, u64 m) {
    std::vector<u64> t(n + 1);
    t[0] = 1; // prefix sentinel, reset to 0 at the end
    for (u64 i = 1; i <= n; ++i)
        t[i] = mul_mod(t[i - 1], i, m); // t[i] = i! mod m
    u64 inv = inv_mod_u64(t[n], m);
    for (u64 i = n; i >= 1; --i) {
        u64 v = mul_mod(inv, t[i - 1], m); // (i!)^-1 · (i-1)! = inv(i)
        inv = mul_mod(inv, i, m);          // ((i-1)!)^-1
        t[i] = v;
    }
    t[0] = 0;
    return t;
}

std::vector<Residue> batch_inverses(u64 n, const Modulus& mod) {
    if (n >= mod.prime())
        throw std::range_error("batch_inverses: n=" + std::to_string(n) + " >= p=" +
                               std::to_string(mod.prime()) +
                               "; multiples of p are not units");
    std::vector<u64> t = inverse_table(n, mod.value());
    std::vector<Residue> out;
    out.reserve(n);
    for (u64 i = 1; i <= n; ++i)
        out.emplace_back(t[i], mod);
    return out;
}

} // namespace morley
