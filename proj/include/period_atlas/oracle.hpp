#pragma once

#include "period_atlas/data.hpp"

namespace atlas {

// Independent verification of the gcd-derived orbit counts: the n-cycle
// permutation is raised to the w-th power by explicit traversal and its
// cycles are counted. No gcd is computed anywhere on this route, so
// agreement with the formula route is a genuine cross-check.
struct CycleCount {
    Int count = 0;  // number of cycles, equals gcd(w, n)
    Int length = 0; // common cycle length, equals n / gcd(w, n)

    friend bool operator==(const CycleCount&, const CycleCount&) = default;
};

CycleCount cycle_count(Residue w);

// Genus of the split-cover component, with every orbit count obtained by
// cycle counting:
//   2*tau - 2 = m(2h - 2 + b + c) - sum of cycle counts over all values.
//
// Worked example, pre-data [0,8;(4);(3,1)]:
//   counts are 4, 1, 1, so 2*tau - 2 = 8*(-2+1+2) - (4+1+1) = 2, tau = 2;
//   then g - 1 = (2*tau - 2) + 1 + 1 = 4, so the lifted maps act on genus 5.
Int oracle_genus(const PreData& p);

// Genus of the surface an orientation-reversing map acts on:
//   g - 1 = (2*tau - 2) + sum of cycle counts over the pre-data boundary
// values, with tau = oracle_genus of the pre-data.
Int oracle_genus_or(const OrData& d);

// Compare the oracle route against the formula route; disagreement is a
// library bug, reported as ValidatorMismatch.
void oracle_verify(const PreData& p);
void oracle_verify_or(const OrData& d);

} // namespace atlas
