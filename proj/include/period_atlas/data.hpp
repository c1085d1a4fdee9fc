#pragma once

#include <string>
#include <vector>

#include "period_atlas/residue.hpp"

namespace atlas {

// Outcome of one validation condition. `code` is a short stable identifier,
// `detail` is human-readable.
struct Check {
    std::string code;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool valid() const {
        for (const Check& c : checks)
            if (!c.ok)
                return false;
        return true;
    }

    const Check* first_failure() const {
        for (const Check& c : checks)
            if (!c.ok)
                return &c;
        return nullptr;
    }
};

// Class data of an orientation-preserving periodic map of period n on a
// surface whose quotient has genus h: branch values thetas (length b) and
// boundary values etas (length c), all in Z_n.
//
// Construction reduces entries mod n and checks only structural sanity;
// realizability is decided by validate_op, which reports rather than throws.
struct OpData {
    Int h = 0;
    Int n = 2;
    std::vector<Residue> thetas;
    std::vector<Residue> etas;

    static OpData make(Int h, Int n, std::vector<Int> thetas, std::vector<Int> etas);

    Int b() const { return static_cast<Int>(thetas.size()); }
    Int c() const { return static_cast<Int>(etas.size()); }

    friend bool operator==(const OpData&, const OpData&) = default;
};

// Class data of an orientation-reversing periodic map of period n = 2m:
// even branch values (length b), even boundary values (length k), odd
// one-sided values (length s), all in Z_2m.
struct OrData {
    Int h = 0;
    Int n = 2;
    std::vector<Residue> branch;
    std::vector<Residue> boundary;
    std::vector<Residue> one_sided;

    static OrData make(Int h, Int n, std::vector<Int> branch, std::vector<Int> boundary,
                       std::vector<Int> one_sided);

    Int m() const { return n / 2; }
    Int b() const { return static_cast<Int>(branch.size()); }
    Int k() const { return static_cast<Int>(boundary.size()); }
    Int s() const { return static_cast<Int>(one_sided.size()); }

    friend bool operator==(const OrData&, const OrData&) = default;
};

// Data of the square of an orientation-reversing map, restricted to one
// component of the split cover: period m, branch values thetas (length b),
// boundary values etas (length c = k + s), all in Z_m.
struct PreData {
    Int h = 0;
    Int m = 1;
    std::vector<Residue> thetas;
    std::vector<Residue> etas;

    static PreData make(Int h, Int m, std::vector<Int> thetas, std::vector<Int> etas);

    Int b() const { return static_cast<Int>(thetas.size()); }
    Int c() const { return static_cast<Int>(etas.size()); }

    friend bool operator==(const PreData&, const PreData&) = default;
};

std::string to_string(const OpData& d);
std::string to_string(const OrData& d);
std::string to_string(const PreData& d);

} // namespace atlas
