#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "period_atlas/equivalence.hpp"

namespace atlas {

// Homeomorphism type of the quotient surface.
struct Quotient {
    bool orientable = true;
    Int genus = 0;
    Int boundaries = 0;

    std::string str() const; // "S(h,k)" or "N(g,k)"

    friend bool operator==(const Quotient&, const Quotient&) = default;
};

// One conjugacy class of orientation-reversing period-n maps on genus g,
// with its derived invariants.
struct ClassRecord {
    CanonKey key;
    OrData representative; // key.to_data()
    Int g = 0;
    Int n = 2;
    PreData pre;
    Quotient quotient;
    std::vector<Int> x_list; // m / gcd(theta_i, m) over pre.thetas
    std::vector<Int> y_list; // m / gcd(eta_j, m) over pre.etas
};

struct EnumerateOptions {
    Int node_budget = 10'000'000;
};

// Exactly one record per conjugacy class of orientation-reversing period-n
// maps on the closed orientable surface of genus g, sorted by key. Refuses
// m > 512 and searches whose projected size exceeds the node budget.
std::vector<ClassRecord> enumerate_classes(Int g, Int n, const EnumerateOptions& opt = {});

// Largest period with a nonempty class list, scanning even n <= 4g+4.
// Requires g >= 2.
Int max_period(Int g, const EnumerateOptions& opt = {});

// Survey of all classes with n > 2(g-1): quotient descriptor, membership in
// the five admissible quotients, and the (b, c) case check.
struct SurveyEntry {
    ClassRecord record;
    bool quotient_admissible = false; // one of S(0,2) N(1,1) N(2,0) S(0,1) N(1,0)
    bool shape_admissible = false;    // h = 0 and (b, k+s) in the case list
};
std::vector<SurveyEntry> large_period_survey(Int g, const EnumerateOptions& opt = {});

// One row of a classification table: a pre-data pattern instantiated at a
// concrete (g, n), possibly with a parenthetical alternate.
struct TableRowSpec {
    std::string table;
    std::string label;
    PreData pre;
    std::optional<PreData> alt;
};

// Rows of the named table applying to classes at (g, n): "t0", "bc2",
// "bc4", "bc3".
std::vector<TableRowSpec> table_rows(const std::string& table, Int g, Int n);

// Keys of all powers of all lifts of the given pre-data: the classes of
// maps f^r, r odd and coprime to the period, where f has pre-data p.
std::set<CanonKey> power_lift_keys(const PreData& p);

struct TableCheckEntry {
    Int g = 0;
    Int n = 2;
    CanonKey key;
    std::string table; // which table decided this class
    std::string row;   // matched row label
    bool alt_matched = false;
};

struct TableCheckResult {
    std::vector<TableCheckEntry> matched;
    std::vector<TableCheckEntry> mismatched;
    // classes in the window 2(g-1) < n < 3g with b+c = 3 and all y_j > 1,
    // for which no classification is available
    std::vector<TableCheckEntry> unclassified;

    bool ok() const { return mismatched.empty(); }
};

// Check every class with n > 2(g-1), per genus in `genera`, against the
// table that covers it: classes with some y_j = 1 against the two
// full-multiplicity types, b+c = 2 and b+c = 4 classes against their
// lemmas, and b+c = 3 classes with n >= 3g against the seventeen-row
// table. A class matches a row when its key is the key of some power of
// some lift of the row's pre-data.
TableCheckResult verify_table_3g(const std::vector<Int>& genera,
                                 const EnumerateOptions& opt = {});

// Restriction of verify_table_3g to one table, for g = 2..g_max.
TableCheckResult verify_table(const std::string& table, Int g_max,
                              const EnumerateOptions& opt = {});

// Odd g > 3: every class with n >= 3g lives at n = 4g-4 and is a power of
// the map with data [0,8k;(4k);();(2k-1,1)], k = (g-1)/2.
TableCheckResult verify_4g4(Int g_max, const EnumerateOptions& opt = {});

// One row of the triangle-quotient family table: period m, multiplicities
// Q and units U of the three branch points.
struct HiroseRow {
    std::string family;
    Int tau = 0;
    Int m = 0;
    std::array<Int, 3> q{};
    std::array<Int, 3> u{};

    OpData to_op_data() const; // [0, m; (u_i * m / q_i); ()]
};

// All rows whose family matches tau and whose instantiation is valid
// closed-surface data of genus tau.
std::vector<HiroseRow> hirose_rows(Int tau);

} // namespace atlas
