#include "zmz/crt.hpp"

#include "zmz/errors.hpp"

#include <stdexcept>

namespace zmz {

namespace {

void require_valid_moduli(const std::vector<Int>& moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] < 1)
            throw std::invalid_argument("crt: modulus at position " + std::to_string(i) +
                                        " must be >= 1, got " + moduli[i].str());
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            Int g = gcd(moduli[i], moduli[j]);
            if (g > 1) throw NonCoprimeModuli(i, j, std::move(g));
        }
}

}  // namespace

CrtBasis crt_basis(const std::vector<Int>& moduli) {
    require_valid_moduli(moduli);
    Int big = 1;
    for (const Int& m : moduli) big *= m;

    CrtBasis basis;
    basis.moduli = moduli;
    basis.big_modulus = big;
    basis.elements.reserve(moduli.size());
    for (const Int& m : moduli) {
        if (m == 1) {
            // Z/1Z contributes nothing; its basis element is 0.
            basis.elements.emplace_back(0);
            continue;
        }
        // h = (M/m) * inverse(M/m mod m), the element that is 1 mod m and
        // 0 mod every other modulus.
        Int cofactor = big / m;
        Int inv = mod_floor(extended_gcd(cofactor % m, m).x, m);
        basis.elements.push_back(cofactor * inv % big);
    }
    return basis;
}

Residue crt_solve(const CongruenceSystem& system) {
    if (system.constraints.empty())
        throw std::invalid_argument("crt_solve: system needs at least one constraint");
    std::vector<Int> moduli;
    moduli.reserve(system.constraints.size());
    for (const Congruence& c : system.constraints) moduli.push_back(c.modulus);

    CrtBasis basis = crt_basis(moduli);
    Int x = 0;
    for (std::size_t k = 0; k < system.constraints.size(); ++k) {
        const Congruence& c = system.constraints[k];
        x += mod_floor(c.remainder, c.modulus) * basis.elements[k];
    }
    return Residue(std::move(x), std::move(basis.big_modulus));
}

std::vector<Residue> crt_split(const Residue& r, const Factorization& f) {
    if (f.m != r.modulus()) throw ModulusMismatch(f.m, r.modulus());
    std::vector<Residue> parts;
    parts.reserve(f.factors.size());
    for (const PrimePower& pp : f.factors) parts.emplace_back(r.value(), pp.value());
    return parts;
}

}  // namespace zmz
