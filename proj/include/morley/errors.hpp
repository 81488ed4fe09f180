#pragma once

#include <stdexcept>
#include <string>

namespace morley {

/// A multiple of p showed up where a unit mod p^k was required.
class not_invertible : public std::domain_error {
public:
    explicit not_invertible(const std::string& what) : std::domain_error(what) {}
};

/// Exact division by p was requested on a value p does not divide.
class not_divisible : public std::domain_error {
public:
    explicit not_divisible(const std::string& what) : std::domain_error(what) {}
};

/// Arithmetic tried to combine residues living under different moduli.
class modulus_mismatch : public std::logic_error {
public:
    explicit modulus_mismatch(const std::string& what) : std::logic_error(what) {}
};

} // namespace morley
