#pragma once

#include "zmz/arith.hpp"

#include <ostream>

namespace zmz {

/// An element of Z/mZ held by its canonical representative: 0 <= value < m.
/// Any integer (negative included) canonicalizes on construction.
class Residue {
public:
    Residue(Int value, Int modulus)
        : modulus_(std::move(modulus)), value_(mod_floor(value, modulus_)) {}

    const Int& value() const { return value_; }
    const Int& modulus() const { return modulus_; }

    bool operator==(const Residue&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
        return os << r.value_ << " (mod " << r.modulus_ << ")";
    }

private:
    Int modulus_;
    Int value_;
};

}  // namespace zmz
