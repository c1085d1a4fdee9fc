#pragma once

#include <span>
#include <vector>

#include "period_atlas/data.hpp"

namespace atlas {

// Realizability of orientation-preserving class data of period n:
//   op.branch-nonzero  every branch value != 0 mod n
//   op.sum-zero        sum of all values == 0 mod n
//   op.sphere-gcd      if h = 0, gcd of all values and n is 1
//   op.genus           the covering genus is a nonnegative integer
ValidationReport validate_op(const OpData& d);

// Same conditions for pre-data, read as class data of period m.
ValidationReport validate_pre(const PreData& p);

// Genus of the covering surface. Requires validate_op to pass.
Int genus_op(const OpData& d);

// Genus of the split-cover component described by pre-data.
Int genus_pre(const PreData& p);

// One branch term of a total valency, as a reduced fraction u/q.
struct ValencyFraction {
    Int u = 0;
    Int q = 1;

    friend bool operator==(const ValencyFraction&, const ValencyFraction&) = default;
};

struct TotalValency {
    Int n = 0;
    std::vector<ValencyFraction> parts;
    Int sum = 0; // u_1/q_1 + ... + u_b/q_b, always an integer for valid data
};

// Total valency of closed-surface data (c = 0). Throws NotClosed when c != 0,
// NotRealizable when the data is invalid.
TotalValency total_valency(const OpData& d);

// For sphere-quotient closed data: every (b-1)-subset of the multiplicities
// has lcm equal to n. Requires h = 0, c = 0 and valid data.
bool check_sphere_lcm(const OpData& d);

// Canonical representative: both lists sorted ascending. Two valid data
// describe conjugate maps iff their canonical forms are equal.
OpData canon_op(const OpData& d);

// Data of the r-th power: every value is multiplied by r^{-1} mod n.
// Requires gcd(r, n) = 1.
OpData power_op(const OpData& d, Int r);

} // namespace atlas
