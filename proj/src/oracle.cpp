#include "period_atlas/oracle.hpp"

#include <string>
#include <vector>

#include "period_atlas/op_maps.hpp"
#include "period_atlas/or_maps.hpp"

namespace atlas {

CycleCount cycle_count(Residue w) {
    Int n = w.mod();
    std::vector<bool> visited(static_cast<size_t>(n), false);
    CycleCount out;
    for (Int start = 0; start < n; ++start) {
        if (visited[static_cast<size_t>(start)])
            continue;
        Int len = 0;
        Int i = start;
        do {
            visited[static_cast<size_t>(i)] = true;
            i = i + w.value() >= n ? i + w.value() - n : i + w.value();
            ++len;
        } while (i != start);
        out.count += 1;
        out.length = len;
    }
    return out;
}

Int oracle_genus(const PreData& p) {
    Int m = p.m;
    Int rhs = m * (2 * p.h - 2 + p.b() + p.c());
    for (Residue t : p.thetas)
        rhs -= cycle_count(t).count;
    for (Residue e : p.etas)
        rhs -= cycle_count(e).count;
    return (rhs + 2) / 2;
}

Int oracle_genus_or(const OrData& d) {
    PreData p = predata_of(d);
    Int g1 = 2 * oracle_genus(p) - 2;
    for (Residue e : p.etas)
        g1 += cycle_count(e).count;
    return g1 + 1;
}

void oracle_verify(const PreData& p) {
    Int by_formula = genus_pre(p);
    Int by_cycles = oracle_genus(p);
    if (by_formula != by_cycles)
        throw ValidatorMismatch("genus of " + to_string(p) + ": formula " +
                                std::to_string(by_formula) + " vs cycles " +
                                std::to_string(by_cycles));
}

void oracle_verify_or(const OrData& d) {
    Int by_formula = genus_or(d);
    Int by_cycles = oracle_genus_or(d);
    if (by_formula != by_cycles)
        throw ValidatorMismatch("genus of " + to_string(d) + ": formula " +
                                std::to_string(by_formula) + " vs cycles " +
                                std::to_string(by_cycles));
}

} // namespace atlas
