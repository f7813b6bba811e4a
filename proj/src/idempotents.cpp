#include "zmz/idempotents.hpp"

#include "zmz/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace zmz {

namespace {

// 2^n members must stay addressable; beyond this the shift itself overflows.
constexpr std::size_t kHardEnumerationCeiling = 62;

void require_idempotent(const Residue& r) {
    if (!is_idempotent(r)) throw NotIdempotent(r.value(), r.modulus());
}

void require_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
}

}  // namespace

bool IdempotentSet::contains(const Int& e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

CrtBasis primitive_idempotents(const Factorization& f) {
    std::vector<Int> prime_powers;
    prime_powers.reserve(f.factors.size());
    for (const PrimePower& pp : f.factors) prime_powers.push_back(pp.value());
    return crt_basis(prime_powers);
}

IdempotentSet enumerate_idempotents(const Factorization& f, std::size_t cap) {
    const std::size_t n = f.omega();
    const std::size_t effective_cap = std::min(cap, kHardEnumerationCeiling);
    if (n > effective_cap) throw TooManyFactors(n, effective_cap);

    IdempotentSet set;
    set.modulus = f.m;
    set.basis = primitive_idempotents(f);

    // Subset sums of the basis: each mask extends the mask with its lowest
    // bit cleared, so every member costs one add and one conditional
    // subtract.
    const std::size_t count = std::size_t(1) << n;
    set.members.resize(count);
    set.members[0] = 0;
    for (std::size_t mask = 1; mask < count; ++mask) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        Int v = set.members[mask & (mask - 1)] + set.basis.elements[low];
        if (v >= f.m) v -= f.m;
        set.members[mask] = std::move(v);
    }
    std::sort(set.members.begin(), set.members.end());
    return set;
}

bool is_idempotent(const Residue& r) {
    return r.value() * r.value() % r.modulus() == r.value();
}

Residue meet(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    require_idempotent(a);
    require_idempotent(b);
    return Residue(a.value() * b.value(), a.modulus());
}

Residue join(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    require_idempotent(a);
    require_idempotent(b);
    return Residue(a.value() + b.value() - a.value() * b.value(), a.modulus());
}

Residue complement(const Residue& a) {
    require_idempotent(a);
    return Residue(1 - a.value(), a.modulus());
}

Residue xor_add(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    require_idempotent(a);
    require_idempotent(b);
    return Residue(a.value() + b.value() - 2 * a.value() * b.value(), a.modulus());
}

std::set<std::size_t> support(const Residue& e, const Factorization& f) {
    if (f.m != e.modulus()) throw ModulusMismatch(f.m, e.modulus());
    require_idempotent(e);
    std::set<std::size_t> s;
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
        // An idempotent reduces to 0 or 1 in the local ring Z/p^c.
        if (e.value() % f.factors[k].value() == 1) s.insert(k);
    }
    return s;
}

Residue from_support(const std::set<std::size_t>& s, const Factorization& f) {
    CrtBasis basis = primitive_idempotents(f);
    Int sum = 0;
    for (std::size_t k : s) {
        if (k >= basis.elements.size())
            throw std::invalid_argument("from_support: index " + std::to_string(k) +
                                        " out of range for " +
                                        std::to_string(basis.elements.size()) + " primes");
        sum += basis.elements[k];
    }
    return Residue(std::move(sum), f.m);
}

Nilradical nilradical(const Factorization& f) {
    Int rad = f.radical();
    Int count = f.m / rad;
    return {std::move(rad), std::move(count)};
}

}  // namespace zmz
