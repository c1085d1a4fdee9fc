#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "period_atlas/errors.hpp"

namespace atlas {

using Int = std::int64_t;

// Canonical representative of x in [0, n). Requires n >= 1.
constexpr Int mod_reduce(Int x, Int n) {
    Int r = x % n;
    return r < 0 ? r + n : r;
}

// Inverse of u in Z_n via extended Euclid. Throws NotCoprime when gcd(u,n) != 1.
Int mod_inverse(Int u, Int n);

// An element of Z_n stored as its canonical representative.
//
// Arithmetic between residues requires equal moduli. The modulus may be 1
// (the pre-data of a period-2 map lives in Z_1), in which case the only
// value is 0.
class Residue {
public:
    Residue() = default;
    Residue(Int value, Int mod);

    Int value() const { return value_; }
    Int mod() const { return mod_; }

    bool is_zero() const { return value_ == 0; }
    bool is_even() const { return value_ % 2 == 0; }
    bool is_odd() const { return value_ % 2 != 0; }

    Residue operator+(Residue rhs) const;
    Residue operator-(Residue rhs) const;
    Residue operator-() const;
    // value * r, r any integer
    Residue scaled(Int r) const;
    // multiplicative inverse; throws NotCoprime
    Residue inverse() const;

    friend bool operator==(Residue a, Residue b) = default;
    friend auto operator<=>(Residue a, Residue b) = default;

private:
    Int value_ = 0;
    Int mod_ = 1;
};

// Orbit data of a loop with holonomy w in Z_n: t is the orbit length,
// q = n/t the multiplicity, u the unit with w = u*t, and p = u^{-1} mod q
// the rotation numerator of the first-return map.
struct Valency {
    Int t = 0;
    Int q = 0;
    Int u = 0;
    Int p = 0;

    friend bool operator==(const Valency&, const Valency&) = default;
};

// t = gcd(w, n), q = n/t, u = w/t, p = u^{-1} mod q.
// w = 0 is legal: it yields (n, 1, 0, 0).
Valency valency_of(Residue w);

// Plain values of a residue list, for sorting and hashing.
std::vector<Int> values_of(const std::vector<Residue>& xs);

// Residue list over Z_n from (possibly signed) integers.
std::vector<Residue> residues(const std::vector<Int>& xs, Int n);

} // namespace atlas
