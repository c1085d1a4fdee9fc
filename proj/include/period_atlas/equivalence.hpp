#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "period_atlas/or_maps.hpp"

namespace atlas {

// Canonical form of an orientation-reversing conjugacy class: the
// lexicographically least (branch, boundary, one_sided) tuple reachable
// from the merge-reduced data under the rewriting moves. Two valid data
// describe conjugate maps iff their keys are equal.
struct CanonKey {
    Int n = 2;
    Int h = 0;
    std::vector<Int> branch;
    std::vector<Int> boundary;
    std::vector<Int> one_sided;

    Int b() const { return static_cast<Int>(branch.size()); }
    Int k() const { return static_cast<Int>(boundary.size()); }
    Int s() const { return static_cast<Int>(one_sided.size()); }
    bool orientable_quotient() const { return one_sided.empty(); }

    OrData to_data() const;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

std::string to_string(const CanonKey& key);

// The step size of the pair-shift move: 1 when h > 0, otherwise the gcd of
// the halved branch and boundary values (m for an empty set).
Int d_of(const OrData& d);

// Same, for pre-data whose eta list holds boundary values only.
Int d_of(const PreData& p);

// Merge one-sided values three at a time (ascending sort, last three into
// their sum, h+1) until s <= 2. Identity when s <= 2 already.
OrData r3_reduce(const OrData& d);

// Reusable state-to-key cache for canonicalization-heavy loops. One
// instance per loop; not synchronized.
class CanonCache {
public:
    const CanonKey* find(const std::string& packed) const;
    void insert(const std::string& packed, const CanonKey& key);
    size_t size() const { return index_.size(); }

private:
    std::vector<CanonKey> keys_;
    std::unordered_map<std::string, size_t> index_;
    std::map<CanonKey, size_t> key_ids_;
};

// Canonical form. Requires validate_or to pass (throws NotRealizable).
CanonKey canon_or(const OrData& d);
CanonKey canon_or(const OrData& d, CanonCache& cache);

// Conjugacy decision: equal periods, equal reduced shape, equal keys.
bool eq_or(const OrData& d1, const OrData& d2);

// Sum of the one-sided values mod n. Not a conjugacy invariant (negation
// flips it); its move-by-move transformation law is fixed and tested.
Residue balance_sum(const OrData& d);

// All conjugacy classes sharing d's local invariants: same n and reduced
// (h, k, s), same branch and boundary values up to sign, any one-sided
// values. Returns the distinct keys, sorted.
std::vector<CanonKey> local_classes(const OrData& d);

// Single rewriting moves, exposed for property tests. Each maps valid data
// to valid data of the same class.
namespace moves {

// negate every value
OrData negate_all(const OrData& d);
// negate branch value i, add its old value to one_sided[target]
OrData flip_branch(const OrData& d, size_t i, size_t target);
// negate boundary value j, add its old value to one_sided[target]
OrData flip_boundary(const OrData& d, size_t j, size_t target);
// negate one_sided value l, add twice its old value to one_sided[target]
OrData flip_one_sided(const OrData& d, size_t l, size_t target);
// s = 2 only: shift the pair by (+2d, -2d) or (-2d, +2d)
OrData shift_pair(const OrData& d, Int direction);
// replace one_sided values at three distinct indices by their sum, h+1
OrData merge_three(const OrData& d, size_t a, size_t b, size_t c);

} // namespace moves

} // namespace atlas
