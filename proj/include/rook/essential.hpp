#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rook/cyclic.hpp"
#include "rook/matroid.hpp"
#include "rook/shapes.hpp"

namespace rook {

struct RankedEssentialSet {
    int rank;
    CyclicInterval interval;
    bool connected;

    bool operator==(const RankedEssentialSet&) const = default;
};

// All ranked essential sets of a verified matroid on the full ground set:
// the proper cyclic intervals whose rank is locally maximal-dependent, plus
// (rank, FULL). Sorted by (a, b) with FULL last; connectivity flags filled
// via is_connected_essential.
std::vector<RankedEssentialSet> essential_family(const Matroid& m);

// No pairwise disjoint subfamily inside the member's interval decomposes its
// rank as sum of subfamily ranks plus leftover elements.
bool is_connected_essential(const std::vector<RankedEssentialSet>& family,
                            const RankedEssentialSet& member);

// The essential sets read off the corners: (r+c-j, [j+1, i]) per inner corner
// (i, j) and (l-1-r, [k, l-1]) per outer corner (k, l); inner corners first,
// each group by row. Requires a connected shape.
std::vector<RankedEssentialSet> corner_essential_sets(const SkewShape& shape);

// One row of an H-representation: sum coef[e-1] * x_e <= rhs (== for the
// equality row).
struct HRow {
    long rhs;
    std::vector<long> coef;
    std::string label;

    bool operator==(const HRow&) const = default;
};

struct HRep {
    std::string name;
    int n;
    HRow equality;            // sum x = c
    std::vector<HRow> rows;   // corner inequalities then box constraints

    bool operator==(const HRep&) const = default;
};

// Base polytope of the rook matroid: the coordinate-sum equality, one
// inequality per corner, and the 0 <= x <= 1 box. Requires a connected shape.
HRep polytope_hrep(const SkewShape& shape);

// lrs-style text: name, "H-representation", "linearity 1 1", "begin",
// "<rows> <n+1> rational", rows as "b -a", "end".
std::string to_ine(const HRep& hrep);
std::string to_plain(const HRep& hrep);

struct HRepWitness {
    std::vector<int> point;  // 0/1 vector of length n with coordinate sum c
    bool satisfies_hrep;     // true: satisfies all rows but is not a basis
};

// Ok (nullopt) iff the 0/1 points of the H-representation with coordinate sum
// c are exactly the basis indicator vectors of the rook matroid.
std::optional<HRepWitness> check_hrep(const SkewShape& shape, const HRep& hrep);

}  // namespace rook
