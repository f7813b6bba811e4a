#pragma once

#include "zmz/arith.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zmz {

/// Moduli at positions i and j share the factor g > 1, so the comaximality
/// hypothesis of the CRT fails.
class NonCoprimeModuli : public std::domain_error {
public:
    NonCoprimeModuli(std::size_t i, std::size_t j, Int g)
        : std::domain_error("moduli at positions " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not coprime (gcd " + g.str() + ")"),
          index_i(i),
          index_j(j),
          common(std::move(g)) {}

    std::size_t index_i;
    std::size_t index_j;
    Int common;
};

/// Two residues (or a residue and a factorization) refer to different rings.
class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(Int lhs, Int rhs)
        : std::invalid_argument("modulus mismatch: " + lhs.str() + " vs " + rhs.str()) {}
};

/// An operand of a Boolean-algebra operation is not idempotent.
class NotIdempotent : public std::domain_error {
public:
    NotIdempotent(const Int& value, const Int& modulus)
        : std::domain_error(value.str() + " is not idempotent mod " + modulus.str()) {}
};

/// f^2 - f is not nilpotent, so f has no idempotent lift.
class NotLiftable : public std::domain_error {
public:
    NotLiftable(const Int& value, const Int& modulus)
        : std::domain_error(value.str() + " mod " + modulus.str() +
                            " is not idempotent modulo the nilradical") {}
};

/// Enumerating 2^n idempotents would exceed the configured cap on n.
class TooManyFactors : public std::invalid_argument {
public:
    TooManyFactors(std::size_t n, std::size_t cap)
        : std::invalid_argument("modulus has " + std::to_string(n) +
                                " distinct primes; enumeration capped at " +
                                std::to_string(cap)),
          omega(n),
          limit(cap) {}

    std::size_t omega;
    std::size_t limit;
};

}  // namespace zmz
