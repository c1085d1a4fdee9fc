#include "period_atlas/residue.hpp"

#include <numeric>
#include <string>

namespace atlas {

Int mod_inverse(Int u, Int n) {
    if (n < 1)
        throw MalformedData("modulus must be positive, got " + std::to_string(n));
    if (n == 1)
        return 0;
    u = mod_reduce(u, n);
    // extended Euclid: track x with x*u = r (mod n)
    Int r0 = n, r1 = u;
    Int x0 = 0, x1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 -= q * r1;
        x0 -= q * x1;
        std::swap(r0, r1);
        std::swap(x0, x1);
    }
    if (r0 != 1)
        throw NotCoprime("no inverse of " + std::to_string(u) + " mod " + std::to_string(n) +
                         ": gcd = " + std::to_string(r0));
    return mod_reduce(x0, n);
}

Residue::Residue(Int value, Int mod) : value_(0), mod_(mod) {
    if (mod < 1)
        throw MalformedData("residue modulus must be >= 1, got " + std::to_string(mod));
    value_ = mod_reduce(value, mod);
}

namespace {
void require_same_mod(Residue a, Residue b) {
    if (a.mod() != b.mod())
        throw MalformedData("mixed moduli " + std::to_string(a.mod()) + " and " +
                            std::to_string(b.mod()));
}
} // namespace

Residue Residue::operator+(Residue rhs) const {
    require_same_mod(*this, rhs);
    return Residue(value_ + rhs.value_, mod_);
}

Residue Residue::operator-(Residue rhs) const {
    require_same_mod(*this, rhs);
    return Residue(value_ - rhs.value_, mod_);
}

Residue Residue::operator-() const { return Residue(-value_, mod_); }

Residue Residue::scaled(Int r) const { return Residue(value_ * mod_reduce(r, mod_), mod_); }

Residue Residue::inverse() const { return Residue(mod_inverse(value_, mod_), mod_); }

Valency valency_of(Residue w) {
    Int n = w.mod();
    if (w.is_zero())
        return Valency{n, 1, 0, 0};
    Int t = std::gcd(w.value(), n);
    Int q = n / t;
    Int u = w.value() / t;
    Int p = (q == 1) ? 0 : mod_inverse(u, q);
    return Valency{t, q, u, p};
}

std::vector<Int> values_of(const std::vector<Residue>& xs) {
    std::vector<Int> out;
    out.reserve(xs.size());
    for (Residue x : xs)
        out.push_back(x.value());
    return out;
}

std::vector<Residue> residues(const std::vector<Int>& xs, Int n) {
    std::vector<Residue> out;
    out.reserve(xs.size());
    for (Int x : xs)
        out.emplace_back(x, n);
    return out;
}

} // namespace atlas
