#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace zmz {

/// Arbitrary-precision integer. Nonnegative values play the role of
/// "naturals"; contracts below state where negatives are accepted.
using Int = boost::multiprecision::cpp_int;

/// One prime-power entry p^c of a factorization.
struct PrimePower {
    Int prime;
    unsigned exponent = 1;

    /// p^c as an integer.
    Int value() const;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization m = p1^c1 * ... * pn^cn, primes strictly increasing,
/// every exponent >= 1. m = 1 carries an empty factor list.
struct Factorization {
    Int m = 1;
    std::vector<PrimePower> factors;

    /// Number of distinct prime divisors (n above; 0 for m = 1).
    std::size_t omega() const { return factors.size(); }

    /// max c_i (0 for m = 1). For Z/mZ this is the nilpotency degree of the
    /// Jacobson radical: the least N with (p1...pn)^N ≡ 0 (mod m).
    unsigned max_exponent() const;

    /// Product of the distinct primes (1 for m = 1). Generates the
    /// nilradical of Z/mZ.
    Int radical() const;

    bool operator==(const Factorization&) const = default;
};

/// Bezout data: g = gcd(a, b) >= 0 with a*x + b*y = g.
struct ExtendedGcd {
    Int g;
    Int x;
    Int y;
};

/// Factor m >= 1 into primes. Trial division over primes below 10^6, then
/// Pollard rho (Brent variant) on what remains. Throws std::invalid_argument
/// for m < 1; factor(1) has an empty factor list.
Factorization factor(const Int& m);

/// Extended Euclid on arbitrary integers (either sign). extended_gcd(0, 0)
/// returns (0, 0, 0).
ExtendedGcd extended_gcd(const Int& a, const Int& b);

/// Primality test. Deterministic below 2^64 (fixed Miller-Rabin witness
/// set); above that, 40 random Miller-Rabin rounds, so composites slip
/// through with probability < 4^-40.
bool is_prime(const Int& n);

/// base^exp mod m, result in [0, m). Requires m >= 1 and exp >= 0; base may
/// be any integer and is reduced first.
Int mod_pow(const Int& base, const Int& exp, const Int& m);

/// Canonical representative of v modulo m, in [0, m). Requires m >= 1.
Int mod_floor(const Int& v, const Int& m);

/// ceil(log2(m)) for m >= 1 (0 for m = 1).
unsigned ceil_log2(const Int& m);

}  // namespace zmz
