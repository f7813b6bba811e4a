#pragma once

#include "zmz/arith.hpp"
#include "zmz/crt.hpp"
#include "zmz/residue.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace zmz {

/// Default bound on the number of distinct primes before enumeration
/// (2^n members) is refused.
inline constexpr std::size_t kDefaultEnumerationCap = 30;

/// Every idempotent of Z/mZ. The basis holds the primitive idempotents
/// h_1..h_n (one per prime power, h_k ≡ 1 mod p_k^c_k and ≡ 0 mod the
/// others); members lists all 2^n subset sums of the basis, sorted.
struct IdempotentSet {
    Int modulus;
    CrtBasis basis;
    std::vector<Int> members;

    /// Binary search over the sorted member list.
    bool contains(const Int& e) const;
};

/// The primitive idempotents of Z/mZ alone; no 2^n enumeration, so no cap.
CrtBasis primitive_idempotents(const Factorization& f);

/// Enumerate all 2^n idempotents of Z/mZ. Throws TooManyFactors when the
/// modulus has more than `cap` distinct primes.
IdempotentSet enumerate_idempotents(const Factorization& f,
                                    std::size_t cap = kDefaultEnumerationCap);

/// True iff r*r ≡ r (mod m).
bool is_idempotent(const Residue& r);

// Boolean algebra on I(Z/mZ). Operands must be idempotent (NotIdempotent
// otherwise) and share a modulus (ModulusMismatch otherwise); each result
// is again idempotent.
Residue meet(const Residue& a, const Residue& b);     // f ∧ g = fg
Residue join(const Residue& a, const Residue& b);     // f ∨ g = f + g - fg
Residue complement(const Residue& a);                 // f^c = 1 - f

/// Addition of the ring (I(Z/mZ), ⊕, ·): f ⊕ g = f + g - 2fg. It has
/// characteristic 2: f ⊕ f = 0.
Residue xor_add(const Residue& a, const Residue& b);

/// The set of factor indices k (0-based, in f.factors order) where the
/// idempotent e reduces to 1 mod p_k^c_k. Support is a Boolean-algebra
/// isomorphism onto subsets of {0..n-1}: meet ↦ intersection, join ↦ union,
/// complement ↦ set complement.
std::set<std::size_t> support(const Residue& e, const Factorization& f);

/// Inverse of `support`: the idempotent that is 1 mod p_k^c_k exactly for
/// k in s. Also serves as the map from an epsilon vector in {0,1}^n to its
/// member (s = indices where epsilon is 1).
Residue from_support(const std::set<std::size_t>& s, const Factorization& f);

/// Generator and size of the nilradical of Z/mZ.
struct Nilradical {
    Int generator;        // p_1 * ... * p_n, the radical of m
    Int nilpotent_count;  // prod p_k^(c_k - 1) = m / generator

    bool operator==(const Nilradical&) const = default;
};

/// The nilpotents of Z/mZ are exactly the multiples of rad(m) in [0, m).
Nilradical nilradical(const Factorization& f);

}  // namespace zmz
