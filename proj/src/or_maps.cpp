#include "period_atlas/or_maps.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace atlas {

namespace {

bool halvable(const OrData& d) {
    return std::all_of(d.branch.begin(), d.branch.end(), [](Residue x) { return x.is_even(); }) &&
           std::all_of(d.boundary.begin(), d.boundary.end(), [](Residue x) { return x.is_even(); });
}

// g - 1 = m(2h - 2 + k + s) + sum of (m - gcd(theta_i, m)).
Int genus_rhs(const OrData& d, const PreData& p) {
    Int m = d.m();
    Int rhs = m * (2 * d.h - 2 + d.k() + d.s());
    for (Residue t : p.thetas)
        rhs += m - std::gcd(t.value(), m);
    return rhs;
}

} // namespace

ValidationReport validate_or(const OrData& d) {
    ValidationReport rep;
    Int m = d.m();

    bool parity = halvable(d);
    rep.checks.push_back({"or.parity", parity,
                          parity ? "" : "branch and boundary values must be even mod " +
                                            std::to_string(d.n)});

    bool nonempty = d.k() + d.s() > 0;
    rep.checks.push_back({"or.nonempty", nonempty, nonempty ? "" : "k + s must be positive"});

    bool even_m = (m % 2 != 0) || d.k() == 0;
    rep.checks.push_back({"or.even-m-closed", even_m,
                          even_m ? "" : "m = " + std::to_string(m) +
                                            " is even but k = " + std::to_string(d.k())});

    bool odd_ok = std::all_of(d.one_sided.begin(), d.one_sided.end(),
                              [](Residue z) { return z.is_odd(); });
    rep.checks.push_back({"or.one-sided-odd", odd_ok,
                          odd_ok ? "" : "a one-sided value is even"});

    bool orbit_odd = true;
    for (Residue e : d.boundary)
        if (e.is_even() && std::gcd(e.value() / 2, m) % 2 == 0)
            orbit_odd = false;
    for (Residue z : d.one_sided)
        if (std::gcd(z.value(), d.n) % 2 == 0)
            orbit_odd = false;
    rep.checks.push_back({"or.orbit-odd", orbit_odd,
                          orbit_odd ? "" : "an orbit count is even"});

    if (!parity || !odd_ok) {
        rep.checks.push_back({"or.pre-data", false, "skipped: values have wrong parity"});
        rep.checks.push_back({"or.genus", false, "skipped: values have wrong parity"});
        return rep;
    }

    PreData p = predata_of(d);
    ValidationReport pre_rep = validate_pre(p);
    bool pre_ok = pre_rep.valid();
    rep.checks.push_back({"or.pre-data", pre_ok,
                          pre_ok ? "" : "pre-data " + to_string(p) + " fails " +
                                            pre_rep.first_failure()->code});

    Int rhs = genus_rhs(d, p);
    bool genus_ok = rhs >= -1;
    rep.checks.push_back({"or.genus", genus_ok,
                          genus_ok ? "" : "g - 1 evaluates to " + std::to_string(rhs)});

    return rep;
}

PreData predata_of(const OrData& d) {
    if (!halvable(d))
        throw MalformedData("cannot halve " + to_string(d) +
                            ": odd branch or boundary value");
    Int m = d.m();
    PreData p;
    p.h = d.h;
    p.m = m;
    for (Residue t : d.branch)
        p.thetas.emplace_back(t.value() / 2, m);
    for (Residue e : d.boundary)
        p.etas.emplace_back(e.value() / 2, m);
    for (Residue z : d.one_sided)
        p.etas.emplace_back(z.value(), m);
    return p;
}

std::vector<OrData> lift_predata(const PreData& p) {
    ValidationReport rep = validate_pre(p);
    if (!rep.valid())
        throw NotRealizable("pre-data not realizable: " + rep.first_failure()->code + " " +
                            to_string(p));
    if (p.c() == 0)
        throw NotLiftable("pre-data with c = 0 lifts to no orientation-reversing map");
    Int m = p.m;
    for (Residue e : p.etas)
        if (std::gcd(e.value(), m) % 2 == 0)
            throw NotLiftable("boundary value " + std::to_string(e.value()) +
                              " has even orbit count mod " + std::to_string(m));

    Int n = 2 * m;
    std::vector<Int> branch;
    for (Residue t : p.thetas)
        branch.push_back(2 * t.value());

    // Per eta: the list of (as_boundary, lifted value) choices.
    std::vector<std::vector<std::pair<bool, Int>>> choices;
    for (Residue e : p.etas) {
        std::vector<std::pair<bool, Int>> opts;
        if (m % 2 == 0) {
            // both lifts are odd here since gcd(eta, m) odd forces eta odd
            opts.emplace_back(false, e.value());
            opts.emplace_back(false, e.value() + m);
        } else {
            opts.emplace_back(true, 2 * e.value());
            Int odd_lift = (e.value() % 2 != 0) ? e.value() : e.value() + m;
            opts.emplace_back(false, odd_lift);
        }
        choices.push_back(std::move(opts));
    }

    std::vector<OrData> lifts;
    std::vector<size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<Int> boundary, one_sided;
        for (size_t j = 0; j < choices.size(); ++j) {
            auto [as_boundary, value] = choices[j][pick[j]];
            (as_boundary ? boundary : one_sided).push_back(value);
        }
        OrData d = OrData::make(p.h, n, branch, boundary, one_sided);
        if (validate_or(d).valid())
            lifts.push_back(std::move(d));

        size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j].size()) {
            pick[j] = 0;
            ++j;
        }
        if (j == pick.size())
            break;
    }
    // duplicate lifts appear when eta values repeat
    std::sort(lifts.begin(), lifts.end(), [](const OrData& a, const OrData& b) {
        return to_string(a) < to_string(b);
    });
    lifts.erase(std::unique(lifts.begin(), lifts.end()), lifts.end());
    return lifts;
}

Int genus_or(const OrData& d) {
    ValidationReport rep = validate_or(d);
    if (!rep.valid())
        throw NotRealizable("not realizable: " + rep.first_failure()->code + " " + to_string(d));
    return genus_rhs(d, predata_of(d)) + 1;
}

OrData power_or(const OrData& d, Int r) {
    if (mod_reduce(r, 2) == 0)
        throw EvenExponent("even power of an orientation-reversing map is orientation-preserving");
    Int rinv = mod_inverse(r, d.n); // throws NotCoprime
    OrData out = d;
    for (Residue& t : out.branch)
        t = t.scaled(rinv);
    for (Residue& e : out.boundary)
        e = e.scaled(rinv);
    for (Residue& z : out.one_sided)
        z = z.scaled(rinv);
    return out;
}

} // namespace atlas
