#include "zmz/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zmz {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

// Primes below kTrialLimit, sieved once.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialLimit; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

// Uniform-ish integer in [lo, hi] built from 64-bit chunks. The modulo bias
// is immaterial for witness selection.
Int random_in_range(const Int& lo, const Int& hi, std::mt19937_64& rng) {
    Int span = hi - lo + 1;
    unsigned bits = msb(span) + 1;
    Int raw = 0;
    for (unsigned i = 0; i < bits; i += 64) {
        raw <<= 64;
        raw |= Int(rng());
    }
    return lo + raw % span;
}

// True when a witnesses the compositeness of odd n = d * 2^s + 1.
bool mr_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

Int abs_diff(const Int& a, const Int& b) { return a > b ? a - b : b - a; }

// Brent-cycle Pollard rho. n odd, composite, no factor below kTrialLimit.
// Returns a nontrivial divisor.
Int pollard_rho_brent(const Int& n, std::mt19937_64& rng) {
    while (true) {
        Int y = random_in_range(1, n - 1, rng);
        Int c = random_in_range(1, n - 1, rng);
        Int g = 1, r = 1, q = 1, x = 0, ys = 0;
        const long batch = 128;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = r - k;
                if (lim > batch) lim = batch;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_diff(x, y) % n;
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            // Batch gcd overshot; replay one step at a time.
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs_diff(x, ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace

Int PrimePower::value() const {
    Int v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

unsigned Factorization::max_exponent() const {
    unsigned best = 0;
    for (const auto& f : factors) best = std::max(best, f.exponent);
    return best;
}

Int Factorization::radical() const {
    Int rad = 1;
    for (const auto& f : factors) rad *= f.prime;
    return rad;
}

Factorization factor(const Int& m) {
    if (m < 1) throw std::invalid_argument("factor: m must be >= 1, got " + m.str());
    Factorization out;
    out.m = m;
    if (m == 1) return out;

    std::map<Int, unsigned> exponents;
    Int rest = m;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > rest) break;
        while (rest % p == 0) {
            ++exponents[p];
            rest /= p;
        }
        if (rest == 1) break;
    }
    if (rest > 1) {
        if (rest <= Int(kTrialLimit) * kTrialLimit) {
            // No divisor below its square root survived trial division.
            ++exponents[rest];
        } else {
            std::mt19937_64 rng{0x5eedf00dULL};
            std::vector<Int> pending{rest};
            while (!pending.empty()) {
                Int v = std::move(pending.back());
                pending.pop_back();
                if (is_prime(v)) {
                    ++exponents[v];
                    continue;
                }
                Int d = pollard_rho_brent(v, rng);
                pending.push_back(v / d);
                pending.push_back(std::move(d));
            }
        }
    }
    out.factors.reserve(exponents.size());
    for (const auto& [p, c] : exponents) out.factors.push_back({p, c});
    return out;
}

ExtendedGcd extended_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static constexpr std::uint32_t kSmall[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                               29, 31, 37, 41, 43, 47, 53, 59, 61,
                                               67, 71, 73, 79, 83, 89, 97};
    for (std::uint32_t p : kSmall) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 101 * 101) return true;

    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    if (n >> 64 == 0) {
        // Witness set proven complete below 2^64.
        for (std::uint32_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (mr_witness(n, a, d, s)) return false;
        return true;
    }
    std::mt19937_64 rng{std::random_device{}()};
    for (int round = 0; round < 40; ++round)
        if (mr_witness(n, random_in_range(2, n - 2, rng), d, s)) return false;
    return true;
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_pow: modulus must be >= 1, got " + m.str());
    if (exp < 0) throw std::invalid_argument("mod_pow: exponent must be >= 0");
    return powm(mod_floor(base, m), exp, m);
}

Int mod_floor(const Int& v, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_floor: modulus must be >= 1, got " + m.str());
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

unsigned ceil_log2(const Int& m) {
    if (m < 1) throw std::invalid_argument("ceil_log2: m must be >= 1");
    if (m == 1) return 0;
    unsigned floor_log = msb(m);
    bool exact = (m & (m - 1)) == 0;
    return floor_log + (exact ? 0u : 1u);
}

}  // namespace zmz
