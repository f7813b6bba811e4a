#pragma once

#include "zmz/arith.hpp"
#include "zmz/residue.hpp"

namespace zmz {

/// Outcome of lifting f to an idempotent g with f - g nilpotent.
struct LiftResult {
    Residue lifted;       // the idempotent g
    Residue difference;   // f - g mod m, always nilpotent
    unsigned iterations;  // Newton steps taken (0 when f was idempotent)
};

/// True iff r is nilpotent mod m, tested factorization-free as
/// r^K ≡ 0 (mod m) with K = ceil(log2 m). Any nilpotent x satisfies
/// x^max(c_i) ≡ 0 and max(c_i) <= K, so the single power suffices.
bool is_nilpotent(const Residue& r);

/// Lift f to the unique idempotent g of Z/mZ with f - g nilpotent, by the
/// Newton step g <- 3g^2 - 2g^3 starting at f. Each step at least squares
/// the nilpotency order of the error g^2 - g, so at most
/// ceil(log2(max c_i)) + 1 steps are ever needed. Throws NotLiftable when
/// f^2 - f is not nilpotent (then no such g exists).
LiftResult lift_idempotent(const Residue& f);

/// Factorization-based reference path for the same lift: per prime p of m,
/// g ≡ 0 mod p^c when p | f, and g ≡ 1 mod p^c otherwise. Kept as an
/// independent cross-check of the Newton route. Throws NotLiftable under
/// the same condition and ModulusMismatch unless fac.m matches f.
Residue lift_idempotent_crt(const Residue& f, const Factorization& fac);

}  // namespace zmz
