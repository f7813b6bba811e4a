#include "zmz/lifting.hpp"

#include "zmz/errors.hpp"
#include "zmz/idempotents.hpp"

#include <bit>
#include <stdexcept>

namespace zmz {

bool is_nilpotent(const Residue& r) {
    const Int& m = r.modulus();
    if (m == 1) return true;
    if (r.value() == 0) return true;
    return mod_pow(r.value(), ceil_log2(m), m) == 0;
}

LiftResult lift_idempotent(const Residue& f) {
    const Int& m = f.modulus();
    const Int& v = f.value();
    if (!is_nilpotent(Residue(v * v - v, m))) throw NotLiftable(v, m);

    // The error e = g^2 - g obeys e' = e^2 * ((2g-1)^2 - 4) per step, so its
    // order along each prime at least doubles; ceil(log2 K) + 2 steps with
    // K = ceil(log2 m) is already past the worst case.
    const unsigned nil_exponent = m == 1 ? 1 : ceil_log2(m);
    const unsigned valve = std::bit_width(nil_exponent - 1) + 2;

    Int g = v;
    unsigned iterations = 0;
    while (g * g % m != g) {
        if (iterations >= valve)
            throw std::logic_error("lift_idempotent: Newton iteration failed to settle");
        g = mod_floor(3 * g * g - 2 * g * g * g, m);
        ++iterations;
    }
    Int diff = v - g;
    return {Residue(std::move(g), m), Residue(std::move(diff), m), iterations};
}

Residue lift_idempotent_crt(const Residue& f, const Factorization& fac) {
    if (fac.m != f.modulus()) throw ModulusMismatch(fac.m, f.modulus());
    CrtBasis basis = primitive_idempotents(fac);
    Int g = 0;
    for (std::size_t k = 0; k < fac.factors.size(); ++k) {
        Int rem = f.value() % fac.factors[k].prime;
        if (rem == 1)
            g += basis.elements[k];
        else if (rem != 0)
            throw NotLiftable(f.value(), f.modulus());
    }
    return Residue(std::move(g), f.modulus());
}

}  // namespace zmz
