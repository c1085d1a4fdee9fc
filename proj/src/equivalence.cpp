#include "period_atlas/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace atlas {

namespace {

// Working state during closure exploration: the three value lists, kept
// sorted. n and h are fixed for a whole closure.
struct State {
    std::vector<Int> br, bd, os;

    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State&, const State&) = default;
};

State make_sorted(std::vector<Int> br, std::vector<Int> bd, std::vector<Int> os) {
    std::sort(br.begin(), br.end());
    std::sort(bd.begin(), bd.end());
    std::sort(os.begin(), os.end());
    return State{std::move(br), std::move(bd), std::move(os)};
}

State state_of(const OrData& d) {
    return make_sorted(values_of(d.branch), values_of(d.boundary), values_of(d.one_sided));
}

Int state_d(Int h, const State& s, Int m) {
    if (h > 0)
        return 1;
    Int g = 0;
    for (Int x : s.br)
        g = std::gcd(g, x / 2);
    for (Int x : s.bd)
        g = std::gcd(g, x / 2);
    return g == 0 ? m : g;
}

std::string pack_state(Int n, Int h, const State& s) {
    std::string out;
    auto push = [&out](Int v) {
        out.push_back(static_cast<char>(v & 0xff));
        out.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    push(n);
    push(h);
    push(static_cast<Int>(s.br.size()));
    push(static_cast<Int>(s.bd.size()));
    for (Int x : s.br)
        push(x);
    for (Int x : s.bd)
        push(x);
    for (Int x : s.os)
        push(x);
    return out;
}

template <typename Visit>
void for_each_neighbor(Int n, Int h, Int m, const State& s, Visit&& visit) {
    // negate everything
    {
        State t = s;
        for (Int& x : t.br)
            x = (n - x) % n;
        for (Int& x : t.bd)
            x = (n - x) % n;
        for (Int& x : t.os)
            x = (n - x) % n;
        visit(make_sorted(std::move(t.br), std::move(t.bd), std::move(t.os)));
    }
    if (!s.os.empty()) {
        // sign flip of a branch or boundary value, absorbed by a one-sided value
        for (size_t i = 0; i < s.br.size(); ++i)
            for (size_t t = 0; t < s.os.size(); ++t) {
                State u = s;
                Int a = u.br[i];
                u.br[i] = (n - a) % n;
                u.os[t] = (u.os[t] + a) % n;
                visit(make_sorted(std::move(u.br), std::move(u.bd), std::move(u.os)));
            }
        for (size_t j = 0; j < s.bd.size(); ++j)
            for (size_t t = 0; t < s.os.size(); ++t) {
                State u = s;
                Int a = u.bd[j];
                u.bd[j] = (n - a) % n;
                u.os[t] = (u.os[t] + a) % n;
                visit(make_sorted(std::move(u.br), std::move(u.bd), std::move(u.os)));
            }
        // sign flip of one one-sided value, absorbed by another
        for (size_t l = 0; l < s.os.size(); ++l)
            for (size_t t = 0; t < s.os.size(); ++t) {
                if (l == t)
                    continue;
                State u = s;
                Int a = u.os[l];
                u.os[l] = (n - a) % n;
                u.os[t] = (u.os[t] + 2 * a) % n;
                visit(make_sorted(std::move(u.br), std::move(u.bd), std::move(u.os)));
            }
    }
    if (s.os.size() == 2) {
        Int shift = (2 * state_d(h, s, m)) % n;
        for (Int dir : {Int{1}, Int{-1}}) {
            State u = s;
            u.os[0] = mod_reduce(u.os[0] + dir * shift, n);
            u.os[1] = mod_reduce(u.os[1] - dir * shift, n);
            visit(make_sorted(std::move(u.br), std::move(u.bd), std::move(u.os)));
        }
    }
}

OrData reduce_checked(const OrData& d) {
    ValidationReport rep = validate_or(d);
    if (!rep.valid())
        throw NotRealizable("not realizable: " + rep.first_failure()->code + " " + to_string(d));
    return r3_reduce(d);
}

CanonKey canon_reduced(const OrData& r, CanonCache* cache) {
    Int n = r.n;
    Int m = r.m();
    State start = state_of(r);

    if (cache) {
        if (const CanonKey* hit = cache->find(pack_state(n, r.h, start)))
            return *hit;
    }

    std::set<State> seen;
    std::deque<const State*> queue;
    auto enqueue = [&seen, &queue](State&& s) {
        auto [it, fresh] = seen.insert(std::move(s));
        if (fresh)
            queue.push_back(&*it);
    };
    enqueue(std::move(start));
    while (!queue.empty()) {
        const State* s = queue.front();
        queue.pop_front();
        for_each_neighbor(n, r.h, m, *s, [&enqueue](State&& t) { enqueue(std::move(t)); });
    }

    const State& least = *seen.begin();
    CanonKey key{n, r.h, least.br, least.bd, least.os};
    if (cache)
        for (const State& s : seen)
            cache->insert(pack_state(n, r.h, s), key);
    return key;
}

} // namespace

OrData CanonKey::to_data() const { return OrData::make(h, n, branch, boundary, one_sided); }

std::string to_string(const CanonKey& key) { return to_string(key.to_data()); }

Int d_of(const OrData& d) {
    if (d.h > 0)
        return 1;
    Int g = 0;
    for (Residue t : d.branch)
        g = std::gcd(g, t.value() / 2);
    for (Residue e : d.boundary)
        g = std::gcd(g, e.value() / 2);
    return g == 0 ? d.m() : g;
}

Int d_of(const PreData& p) {
    if (p.h > 0)
        return 1;
    Int g = 0;
    for (Residue t : p.thetas)
        g = std::gcd(g, t.value());
    for (Residue e : p.etas)
        g = std::gcd(g, e.value());
    return g == 0 ? p.m : g;
}

OrData r3_reduce(const OrData& d) {
    OrData out = d;
    while (out.s() >= 3) {
        std::sort(out.one_sided.begin(), out.one_sided.end());
        Residue sum = out.one_sided[out.one_sided.size() - 3] +
                      out.one_sided[out.one_sided.size() - 2] + out.one_sided.back();
        out.one_sided.resize(out.one_sided.size() - 3);
        out.one_sided.push_back(sum);
        out.h += 1;
    }
    return out;
}

const CanonKey* CanonCache::find(const std::string& packed) const {
    auto it = index_.find(packed);
    return it == index_.end() ? nullptr : &keys_[it->second];
}

void CanonCache::insert(const std::string& packed, const CanonKey& key) {
    auto [it, fresh] = key_ids_.try_emplace(key, keys_.size());
    if (fresh)
        keys_.push_back(key);
    index_.emplace(packed, it->second);
}

CanonKey canon_or(const OrData& d) { return canon_reduced(reduce_checked(d), nullptr); }

CanonKey canon_or(const OrData& d, CanonCache& cache) {
    return canon_reduced(reduce_checked(d), &cache);
}

bool eq_or(const OrData& d1, const OrData& d2) {
    OrData r1 = reduce_checked(d1);
    OrData r2 = reduce_checked(d2);
    if (r1.n != r2.n || r1.h != r2.h || r1.b() != r2.b() || r1.k() != r2.k() ||
        r1.s() != r2.s())
        return false;
    CanonCache cache;
    return canon_reduced(r1, &cache) == canon_reduced(r2, &cache);
}

Residue balance_sum(const OrData& d) {
    Residue sum(0, d.n);
    for (Residue z : d.one_sided)
        sum = sum + z;
    return sum;
}

std::vector<CanonKey> local_classes(const OrData& d) {
    OrData r = reduce_checked(d);
    Int n = r.n;
    Int m = r.m();

    // options per entry: the value or its negative
    auto unsigned_options = [n](const std::vector<Residue>& xs) {
        std::vector<std::vector<Int>> opts;
        for (Residue x : xs) {
            std::vector<Int> o{x.value()};
            if ((n - x.value()) % n != x.value())
                o.push_back((n - x.value()) % n);
            opts.push_back(std::move(o));
        }
        return opts;
    };
    std::vector<std::vector<Int>> br_opts = unsigned_options(r.branch);
    std::vector<std::vector<Int>> bd_opts = unsigned_options(r.boundary);

    CanonCache cache;
    std::set<CanonKey> keys;

    std::vector<Int> br(br_opts.size()), bd(bd_opts.size());
    auto consider = [&](const std::vector<Int>& one_sided) {
        OrData cand = OrData::make(r.h, n, br, bd, one_sided);
        if (validate_or(cand).valid())
            keys.insert(canon_or(cand, cache));
    };

    // iterate one-sided lists: all but the last value free over the odd
    // residues, the last solved mod m from the pre-data sum condition
    auto scan_one_sided = [&] {
        Int s = r.s();
        if (s == 0) {
            consider({});
            return;
        }
        Int fixed = 0;
        for (Int x : br)
            fixed += x / 2;
        for (Int x : bd)
            fixed += x / 2;
        std::vector<Int> zs(s);
        auto rec = [&](auto&& self, Int idx, Int partial) -> void {
            if (idx == s - 1) {
                Int root = mod_reduce(-(fixed + partial), m);
                for (Int lift : {root, root + m})
                    if (lift % 2 != 0) {
                        zs[s - 1] = lift;
                        consider(zs);
                    }
                return;
            }
            for (Int z = 1; z < n; z += 2) {
                zs[idx] = z;
                self(self, idx + 1, partial + z);
            }
        };
        rec(rec, 0, 0);
    };

    auto scan_signs = [&](auto&& self, size_t idx) -> void {
        size_t nb = br_opts.size();
        if (idx == nb + bd_opts.size()) {
            scan_one_sided();
            return;
        }
        auto& opts = idx < nb ? br_opts[idx] : bd_opts[idx - nb];
        Int& slot = idx < nb ? br[idx] : bd[idx - nb];
        for (Int v : opts) {
            slot = v;
            self(self, idx + 1);
        }
    };
    scan_signs(scan_signs, 0);

    return std::vector<CanonKey>(keys.begin(), keys.end());
}

namespace moves {

OrData negate_all(const OrData& d) {
    OrData out = d;
    for (Residue& x : out.branch)
        x = -x;
    for (Residue& x : out.boundary)
        x = -x;
    for (Residue& x : out.one_sided)
        x = -x;
    return out;
}

OrData flip_branch(const OrData& d, size_t i, size_t target) {
    if (i >= d.branch.size() || target >= d.one_sided.size())
        throw Error("flip_branch: index out of range");
    OrData out = d;
    Residue a = out.branch[i];
    out.branch[i] = -a;
    out.one_sided[target] = out.one_sided[target] + a;
    return out;
}

OrData flip_boundary(const OrData& d, size_t j, size_t target) {
    if (j >= d.boundary.size() || target >= d.one_sided.size())
        throw Error("flip_boundary: index out of range");
    OrData out = d;
    Residue a = out.boundary[j];
    out.boundary[j] = -a;
    out.one_sided[target] = out.one_sided[target] + a;
    return out;
}

OrData flip_one_sided(const OrData& d, size_t l, size_t target) {
    if (l >= d.one_sided.size() || target >= d.one_sided.size() || l == target)
        throw Error("flip_one_sided: bad indices");
    OrData out = d;
    Residue a = out.one_sided[l];
    out.one_sided[l] = -a;
    out.one_sided[target] = out.one_sided[target] + a + a;
    return out;
}

OrData shift_pair(const OrData& d, Int direction) {
    if (d.s() != 2)
        throw Error("shift_pair needs exactly two one-sided values");
    Int step = 2 * d_of(d) * (direction < 0 ? -1 : 1);
    OrData out = d;
    out.one_sided[0] = Residue(out.one_sided[0].value() + step, d.n);
    out.one_sided[1] = Residue(out.one_sided[1].value() - step, d.n);
    return out;
}

OrData merge_three(const OrData& d, size_t a, size_t b, size_t c) {
    if (d.s() < 3 || a == b || a == c || b == c || a >= d.one_sided.size() ||
        b >= d.one_sided.size() || c >= d.one_sided.size())
        throw Error("merge_three: bad indices");
    OrData out = d;
    Residue sum = d.one_sided[a] + d.one_sided[b] + d.one_sided[c];
    std::vector<Residue> rest;
    for (size_t l = 0; l < d.one_sided.size(); ++l)
        if (l != a && l != b && l != c)
            rest.push_back(d.one_sided[l]);
    rest.push_back(sum);
    out.one_sided = std::move(rest);
    out.h += 1;
    return out;
}

} // namespace moves

} // namespace atlas
