#pragma once

#include <vector>

#include "period_atlas/data.hpp"
#include "period_atlas/op_maps.hpp"

namespace atlas {

// Realizability of orientation-reversing class data of period n = 2m:
//   or.parity          branch and boundary values even, checked first
//   or.nonempty        k + s > 0
//   or.even-m-closed   when m is even, k = 0
//   or.one-sided-odd   every one-sided value is odd
//   or.orbit-odd       gcd(eta_j, m) odd for boundary, gcd(zeta_l, 2m) odd
//   or.pre-data        the halved data validates as period-m class data
//   or.genus           the covering genus is a nonnegative integer
ValidationReport validate_or(const OrData& d);

// Halve branch and boundary values, reduce one-sided values mod m.
// Throws MalformedData when a branch or boundary value is odd.
PreData predata_of(const OrData& d);

// All orientation-reversing data whose pre-data is p (up to the mod-m
// identification of one-sided values):
//   m even: every eta becomes one-sided, with either odd lift in Z_2m;
//   m odd:  every eta becomes either a boundary value 2*eta or the odd
//           lift among {eta, eta+m}.
// Throws NotRealizable when p is not valid period-m data, NotLiftable when
// c = 0 or some gcd(eta_j, m) is even.
std::vector<OrData> lift_predata(const PreData& p);

// Genus of the surface the map acts on. Requires validate_or to pass.
Int genus_or(const OrData& d);

// Data of the r-th power for odd r with gcd(r, 2m) = 1: every value is
// multiplied by r^{-1} mod 2m. Even r would describe an
// orientation-preserving map; use predata_of for that.
OrData power_or(const OrData& d, Int r);

} // namespace atlas
