#pragma once

#include "zmz/arith.hpp"
#include "zmz/residue.hpp"

#include <vector>

namespace zmz {

/// One constraint x ≡ remainder (mod modulus). Remainders may be any
/// integer; they are canonicalized when solving.
struct Congruence {
    Int remainder;
    Int modulus;

    bool operator==(const Congruence&) const = default;
};

/// Simultaneous congruences with pairwise coprime moduli.
struct CongruenceSystem {
    std::vector<Congruence> constraints;
};

/// Orthogonal basis for pairwise coprime moduli m_1..m_n with product M:
///   elements[k] ≡ 1 (mod m_k),  elements[k] ≡ 0 (mod m_j) for j != k,
/// all held in [0, M). The basis elements are idempotent mod M, mutually
/// annihilating, and sum to 1 mod M.
struct CrtBasis {
    std::vector<Int> moduli;
    Int big_modulus;            // M = product of moduli
    std::vector<Int> elements;  // h_1..h_n
};

/// Compute the orthogonal basis for the given moduli (each >= 1).
/// The element for a modulus 1 entry is 0. Throws NonCoprimeModuli when two
/// moduli share a factor, std::invalid_argument on a modulus < 1.
CrtBasis crt_basis(const std::vector<Int>& moduli);

/// Solve the system: the unique x in [0, M) with x ≡ r_k (mod m_k) for all
/// k, computed as sum r_k * h_k mod M. The full solution set is x + MZ.
/// Throws std::invalid_argument on an empty system.
Residue crt_solve(const CongruenceSystem& system);

/// Project r onto Z/p^c for each prime power of f. Inverse of crt_solve on
/// canonical representatives. Throws ModulusMismatch unless f.m equals the
/// modulus of r.
std::vector<Residue> crt_split(const Residue& r, const Factorization& f);

}  // namespace zmz
