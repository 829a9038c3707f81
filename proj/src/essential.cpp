#include "rook/essential.hpp"

#include <algorithm>
#include <functional>

#include "rook/placements.hpp"
#include "rook/rook_matroid.hpp"

namespace rook {

namespace {

// Rank of the cyclic interval starting at `a` with the given length; length n
// means the whole ground set.
struct IntervalRankTable {
    int n;
    int full_rank;
    std::vector<std::vector<int>> by_start_len;  // [a-1][len-1], len in [1, n-1]

    int rank(int a, int len) const {
        if (len >= n) return full_rank;
        return by_start_len[a - 1][len - 1];
    }
};

IntervalRankTable build_table(const Matroid& m) {
    int n = m.ambient_size();
    IntervalRankTable table{n, m.rank(), {}};
    table.by_start_len.assign(n, std::vector<int>(n - 1, 0));
    for (int a = 1; a <= n; ++a) {
        std::uint32_t mask = 0;
        int e = a;
        for (int len = 1; len <= n - 1; ++len) {
            mask |= 1u << (e - 1);
            table.by_start_len[a - 1][len - 1] = m.rank(ElemSet(mask));
            e = e % n + 1;
        }
    }
    return table;
}

}  // namespace

bool is_connected_essential(const std::vector<RankedEssentialSet>& family,
                            const RankedEssentialSet& member) {
    ElemSet inside = member.interval.member_set();
    std::vector<const RankedEssentialSet*> candidates;
    for (const RankedEssentialSet& other : family) {
        if (other.interval == member.interval) continue;
        if (other.interval.member_set().subset_of(inside)) candidates.push_back(&other);
    }
    // exact search over pairwise disjoint subfamilies, pruning on overlap
    std::function<bool(std::size_t, ElemSet, int, bool)> search =
        [&](std::size_t idx, ElemSet used, int rank_sum, bool any) -> bool {
        if (rank_sum > member.rank) return false;
        if (any && rank_sum + (inside - used).size() == member.rank) return true;
        for (std::size_t next = idx; next < candidates.size(); ++next) {
            ElemSet cand = candidates[next]->interval.member_set();
            if (!cand.disjoint_from(used)) continue;
            if (search(next + 1, used | cand, rank_sum + candidates[next]->rank, true)) return true;
        }
        return false;
    };
    return !search(0, ElemSet(), 0, false);
}

std::vector<RankedEssentialSet> essential_family(const Matroid& m) {
    if (!m.verified()) throw UsageError("essential family needs a verified matroid");
    if (m.ground() != ElemSet::full(m.ambient_size()))
        throw SizeMismatch("essential family needs a matroid on the full ground set [1,n]");
    int n = m.ambient_size();
    IntervalRankTable table = build_table(m);
    auto prev = [n](int e) { return (e - 2 + n) % n + 1; };

    std::vector<RankedEssentialSet> family;
    for (int a = 1; a <= n; ++a)
        for (int len = 1; len <= n - 1; ++len) {
            int b = (a - 1 + len - 1) % n + 1;
            int r = table.rank(a, len);
            bool essential;
            if (len == 1) {
                essential = r == 0 && table.rank(prev(a), 2) == 1 && table.rank(a, 2) == 1;
            } else {
                essential = r == table.rank((a % n) + 1, len - 1) && r == table.rank(a, len - 1) &&
                            r == table.rank(prev(a), len + 1) - 1 &&
                            r == table.rank(a, len + 1) - 1;
            }
            if (essential)
                family.push_back({r, CyclicInterval::proper(n, a, b), false});
        }
    std::sort(family.begin(), family.end(), [](const auto& x, const auto& y) {
        return std::pair(x.interval.a(), x.interval.b()) < std::pair(y.interval.a(), y.interval.b());
    });
    family.push_back({m.rank(), CyclicInterval::full(n), false});
    for (RankedEssentialSet& member : family)
        member.connected = is_connected_essential(family, member);
    return family;
}

std::vector<RankedEssentialSet> corner_essential_sets(const SkewShape& shape) {
    if (!is_connected_shape(shape)) throw DisconnectedShape(shape.to_string() + " is disconnected");
    int n = shape.ground_size(), r = shape.rows();
    std::vector<RankedEssentialSet> out;
    for (const Corner& corner : inner_corners(shape))
        out.push_back(
            {n - corner.col, CyclicInterval::proper(n, corner.col + 1, corner.row), true});
    for (const Corner& corner : outer_corners(shape))
        out.push_back(
            {corner.col - 1 - r, CyclicInterval::proper(n, corner.row, corner.col - 1), true});
    return out;
}

HRep polytope_hrep(const SkewShape& shape) {
    if (!is_connected_shape(shape)) throw DisconnectedShape(shape.to_string() + " is disconnected");
    int n = shape.ground_size(), r = shape.rows(), c = shape.cols();
    HRep hrep;
    hrep.name = shape.to_string();
    hrep.n = n;
    hrep.equality = {static_cast<long>(c), std::vector<long>(n, 1), "sum"};

    auto interval_row = [&](const CyclicInterval& iv, long rhs, std::string label) {
        HRow row{rhs, std::vector<long>(n, 0), std::move(label)};
        for (int e : iv.members()) row.coef[e - 1] = 1;
        return row;
    };
    for (const Corner& corner : inner_corners(shape))
        hrep.rows.push_back(interval_row(CyclicInterval::proper(n, corner.col + 1, corner.row),
                                         n - corner.col,
                                         "inner-corner (" + std::to_string(corner.row) + "," +
                                             std::to_string(corner.col) + ")"));
    for (const Corner& corner : outer_corners(shape))
        hrep.rows.push_back(interval_row(CyclicInterval::proper(n, corner.row, corner.col - 1),
                                         corner.col - 1 - r,
                                         "outer-corner (" + std::to_string(corner.row) + "," +
                                             std::to_string(corner.col) + ")"));
    for (int e = 1; e <= n; ++e) {
        HRow row{0, std::vector<long>(n, 0), "box x" + std::to_string(e) + " >= 0"};
        row.coef[e - 1] = -1;  // -x_e <= 0
        hrep.rows.push_back(row);
    }
    for (int e = 1; e <= n; ++e) {
        HRow row{1, std::vector<long>(n, 0), "box x" + std::to_string(e) + " <= 1"};
        row.coef[e - 1] = 1;
        hrep.rows.push_back(row);
    }
    return hrep;
}

std::string to_ine(const HRep& hrep) {
    std::string out = hrep.name + "\n";
    out += "H-representation\n";
    out += "linearity 1 1\n";
    out += "begin\n";
    out += std::to_string(hrep.rows.size() + 1) + " " + std::to_string(hrep.n + 1) + " rational\n";
    auto emit = [&](const HRow& row) {
        out += std::to_string(row.rhs);
        for (long a : row.coef) out += " " + std::to_string(-a);
        out += "\n";
    };
    emit(hrep.equality);
    for (const HRow& row : hrep.rows) emit(row);
    out += "end\n";
    return out;
}

std::string to_plain(const HRep& hrep) {
    auto lhs = [&](const HRow& row) {
        std::string text;
        for (int e = 1; e <= hrep.n; ++e) {
            if (row.coef[e - 1] == 0) continue;
            if (!text.empty()) text += row.coef[e - 1] > 0 ? " + " : " - ";
            else if (row.coef[e - 1] < 0)
                text += "-";
            text += "x" + std::to_string(e);
        }
        return text.empty() ? "0" : text;
    };
    std::string out = hrep.name + "\n";
    out += lhs(hrep.equality) + " = " + std::to_string(hrep.equality.rhs) + "\n";
    for (const HRow& row : hrep.rows)
        out += lhs(row) + " <= " + std::to_string(row.rhs) + "  [" + row.label + "]\n";
    return out;
}

std::optional<HRepWitness> check_hrep(const SkewShape& shape, const HRep& hrep) {
    int n = shape.ground_size(), c = shape.cols();
    std::vector<ElemSet> bases;
    for (const Placement& rho : enumerate_non_nesting(shape)) bases.push_back(encode(shape, rho));
    std::vector<std::uint32_t> basis_bits;
    for (const ElemSet& b : bases) basis_bits.push_back(b.bits());
    std::sort(basis_bits.begin(), basis_bits.end());

    auto satisfies = [&](ElemSet point) {
        auto value = [&](const HRow& row) {
            long total = 0;
            for (int e = 1; e <= n; ++e)
                if (point.contains(e)) total += row.coef[e - 1];
            return total;
        };
        if (value(hrep.equality) != hrep.equality.rhs) return false;
        for (const HRow& row : hrep.rows)
            if (value(row) > row.rhs) return false;
        return true;
    };

    // walk all C(n, c) candidate 0/1 points in ascending-tuple order
    std::vector<int> combo(c);
    for (int i = 0; i < c; ++i) combo[i] = i + 1;
    while (true) {
        ElemSet point = ElemSet::from(combo);
        bool in_polytope = satisfies(point);
        bool in_bases = std::binary_search(basis_bits.begin(), basis_bits.end(), point.bits());
        if (in_polytope != in_bases) {
            HRepWitness witness;
            witness.point.assign(n, 0);
            for (int e : point.elements()) witness.point[e - 1] = 1;
            witness.satisfies_hrep = in_polytope;
            return witness;
        }
        int idx = c - 1;
        while (idx >= 0 && combo[idx] == n - (c - 1 - idx)) --idx;
        if (idx < 0) break;
        ++combo[idx];
        for (int j = idx + 1; j < c; ++j) combo[j] = combo[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace rook
