#include "period_atlas/data.hpp"

#include <sstream>

namespace atlas {

namespace {
void append_list(std::ostringstream& os, const std::vector<Residue>& xs) {
    os << '(';
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i)
            os << ',';
        os << xs[i].value();
    }
    os << ')';
}
} // namespace

OpData OpData::make(Int h, Int n, std::vector<Int> thetas, std::vector<Int> etas) {
    if (h < 0)
        throw MalformedData("quotient genus must be >= 0, got " + std::to_string(h));
    if (n < 2)
        throw MalformedData("period must be >= 2, got " + std::to_string(n));
    OpData d;
    d.h = h;
    d.n = n;
    d.thetas = residues(thetas, n);
    d.etas = residues(etas, n);
    return d;
}

OrData OrData::make(Int h, Int n, std::vector<Int> branch, std::vector<Int> boundary,
                    std::vector<Int> one_sided) {
    if (h < 0)
        throw MalformedData("quotient genus must be >= 0, got " + std::to_string(h));
    if (n < 2 || n % 2 != 0)
        throw MalformedData("period must be a positive even integer, got " + std::to_string(n));
    OrData d;
    d.h = h;
    d.n = n;
    d.branch = residues(branch, n);
    d.boundary = residues(boundary, n);
    d.one_sided = residues(one_sided, n);
    return d;
}

PreData PreData::make(Int h, Int m, std::vector<Int> thetas, std::vector<Int> etas) {
    if (h < 0)
        throw MalformedData("quotient genus must be >= 0, got " + std::to_string(h));
    if (m < 1)
        throw MalformedData("half-period must be >= 1, got " + std::to_string(m));
    PreData d;
    d.h = h;
    d.m = m;
    d.thetas = residues(thetas, m);
    d.etas = residues(etas, m);
    return d;
}

std::string to_string(const OpData& d) {
    std::ostringstream os;
    os << "[" << d.h << "," << d.n << ";";
    append_list(os, d.thetas);
    os << ";";
    append_list(os, d.etas);
    os << "]";
    return os.str();
}

std::string to_string(const OrData& d) {
    std::ostringstream os;
    os << "[" << d.h << "," << d.n << ";";
    append_list(os, d.branch);
    os << ";";
    append_list(os, d.boundary);
    os << ";";
    append_list(os, d.one_sided);
    os << "]";
    return os.str();
}

std::string to_string(const PreData& d) {
    std::ostringstream os;
    os << "[" << d.h << "," << d.m << ";";
    append_list(os, d.thetas);
    os << ";";
    append_list(os, d.etas);
    os << "]";
    return os.str();
}

} // namespace atlas
