#include "period_atlas/op_maps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace atlas {

namespace {

// Shared condition evaluation for class data [h, n; thetas; etas].
// 2*tau - 2 = n(2h - 2 + b + c) - sum of gcd(value, n) over all entries.
Int euler_rhs(Int h, Int n, const std::vector<Residue>& thetas, const std::vector<Residue>& etas) {
    Int rhs = n * (2 * h - 2 + static_cast<Int>(thetas.size()) + static_cast<Int>(etas.size()));
    for (Residue t : thetas)
        rhs -= valency_of(t).t;
    for (Residue e : etas)
        rhs -= valency_of(e).t;
    return rhs;
}

ValidationReport validate_core(Int h, Int n, const std::vector<Residue>& thetas,
                               const std::vector<Residue>& etas) {
    ValidationReport rep;

    bool nonzero = std::none_of(thetas.begin(), thetas.end(),
                                [](Residue t) { return t.is_zero(); });
    rep.checks.push_back({"op.branch-nonzero", nonzero,
                          nonzero ? "" : "a branch value is 0 mod " + std::to_string(n)});

    Int sum = 0;
    for (Residue t : thetas)
        sum += t.value();
    for (Residue e : etas)
        sum += e.value();
    bool sum_ok = mod_reduce(sum, n) == 0;
    rep.checks.push_back({"op.sum-zero", sum_ok,
                          sum_ok ? "" : "values sum to " + std::to_string(mod_reduce(sum, n)) +
                                            " mod " + std::to_string(n)});

    bool gcd_ok = true;
    if (h == 0) {
        Int g = n;
        for (Residue t : thetas)
            g = std::gcd(g, t.value());
        for (Residue e : etas)
            g = std::gcd(g, e.value());
        gcd_ok = (g == 1);
    }
    rep.checks.push_back({"op.sphere-gcd", gcd_ok,
                          gcd_ok ? "" : "h = 0 but the values do not generate Z_" +
                                            std::to_string(n)});

    Int rhs = euler_rhs(h, n, thetas, etas);
    bool genus_ok = (rhs % 2 == 0) && (rhs >= -2);
    std::ostringstream det;
    if (!genus_ok)
        det << "2*tau - 2 evaluates to " << rhs;
    rep.checks.push_back({"op.genus", genus_ok, det.str()});

    return rep;
}

} // namespace

ValidationReport validate_op(const OpData& d) { return validate_core(d.h, d.n, d.thetas, d.etas); }

ValidationReport validate_pre(const PreData& p) {
    return validate_core(p.h, p.m, p.thetas, p.etas);
}

Int genus_op(const OpData& d) {
    ValidationReport rep = validate_op(d);
    if (!rep.valid())
        throw NotRealizable("not realizable: " + rep.first_failure()->code + " " + to_string(d));
    return (euler_rhs(d.h, d.n, d.thetas, d.etas) + 2) / 2;
}

Int genus_pre(const PreData& p) {
    ValidationReport rep = validate_pre(p);
    if (!rep.valid())
        throw NotRealizable("pre-data not realizable: " + rep.first_failure()->code + " " +
                            to_string(p));
    return (euler_rhs(p.h, p.m, p.thetas, p.etas) + 2) / 2;
}

TotalValency total_valency(const OpData& d) {
    if (d.c() != 0)
        throw NotClosed("total valency needs closed-surface data, got c = " +
                        std::to_string(d.c()));
    ValidationReport rep = validate_op(d);
    if (!rep.valid())
        throw NotRealizable("not realizable: " + rep.first_failure()->code + " " + to_string(d));

    TotalValency v;
    v.n = d.n;
    Int theta_sum = 0;
    for (Residue t : d.thetas) {
        Valency val = valency_of(t);
        v.parts.push_back({val.u, val.q});
        theta_sum += t.value();
    }
    // sum of u_i/q_i = sum of theta_i / n, an integer by the sum condition
    v.sum = theta_sum / d.n;
    return v;
}

bool check_sphere_lcm(const OpData& d) {
    if (d.h != 0 || d.c() != 0)
        throw NotRealizable("sphere-quotient check needs h = 0 and c = 0, got " + to_string(d));
    ValidationReport rep = validate_op(d);
    if (!rep.valid())
        throw NotRealizable("not realizable: " + rep.first_failure()->code + " " + to_string(d));

    std::vector<Int> qs;
    for (Residue t : d.thetas)
        qs.push_back(valency_of(t).q);
    for (size_t omit = 0; omit < qs.size(); ++omit) {
        Int l = 1;
        for (size_t j = 0; j < qs.size(); ++j)
            if (j != omit)
                l = std::lcm(l, qs[j]);
        if (l != d.n)
            return false;
    }
    return true;
}

OpData canon_op(const OpData& d) {
    ValidationReport rep = validate_op(d);
    if (!rep.valid())
        throw NotRealizable("not realizable: " + rep.first_failure()->code + " " + to_string(d));
    OpData out = d;
    std::sort(out.thetas.begin(), out.thetas.end());
    std::sort(out.etas.begin(), out.etas.end());
    return out;
}

OpData power_op(const OpData& d, Int r) {
    Int rinv = mod_inverse(r, d.n); // throws NotCoprime
    OpData out = d;
    for (Residue& t : out.thetas)
        t = t.scaled(rinv);
    for (Residue& e : out.etas)
        e = e.scaled(rinv);
    return out;
}

} // namespace atlas
