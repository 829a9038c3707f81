#include "rook/sorting.hpp"

#include <algorithm>

namespace rook {

std::vector<Cell> DoublePlacement::of_color(RookColor color) const {
    std::vector<Cell> out;
    for (const ColoredRook& rook : rooks)
        if (rook.color == color) out.push_back(rook.cell);
    return out;
}

std::pair<ElemSet, ElemSet> sort_pair(ElemSet i_set, ElemSet j_set) {
    if (i_set.size() != j_set.size()) throw SizeMismatch("sort pair needs equal-size sets");
    std::vector<int> merged;
    for (int e : i_set.elements()) merged.push_back(e);
    for (int e : j_set.elements()) merged.push_back(e);
    std::sort(merged.begin(), merged.end());
    ElemSet sort1, sort2;
    for (std::size_t idx = 0; idx < merged.size(); ++idx) {
        if (idx % 2 == 0)
            sort1 = sort1.with(merged[idx]);
        else
            sort2 = sort2.with(merged[idx]);
    }
    return {sort1, sort2};
}

namespace {

struct UncrossState {
    std::vector<ColoredRook> rooks;

    bool has(Cell cell, RookColor color) const {
        return std::find(rooks.begin(), rooks.end(), ColoredRook{cell, color}) != rooks.end();
    }
    void remove(Cell cell, RookColor color) {
        rooks.erase(std::find(rooks.begin(), rooks.end(), ColoredRook{cell, color}));
    }
    void add(Cell cell, RookColor color) { rooks.push_back({cell, color}); }
};

// First rook of `target` color strictly nested by s: minimal row below s,
// then leftmost admissible column.
std::optional<Cell> find_nested(const UncrossState& state, Cell s, RookColor target) {
    std::optional<Cell> best;
    for (const ColoredRook& rook : state.rooks) {
        if (rook.color != target || !strictly_nested(s, rook.cell)) continue;
        if (!best || rook.cell < *best) best = rook.cell;
    }
    return best;
}

// One full pass over the board; returns whether any pair was uncrossed.
bool uncross_pass(const SkewShape& shape, UncrossState& state, bool different_colors) {
    bool changed = false;
    for (int row = 1; row <= shape.rows(); ++row) {
        if (shape.row_empty(row)) continue;
        for (int col = shape.row_last_col(row); col >= shape.row_first_col(row); --col) {
            for (RookColor color : {RookColor::Black, RookColor::White}) {
                Cell s{row, col};
                if (!state.has(s, color)) continue;
                RookColor target =
                    different_colors
                        ? (color == RookColor::Black ? RookColor::White : RookColor::Black)
                        : color;
                std::optional<Cell> t = find_nested(state, s, target);
                if (!t) continue;
                state.remove(s, color);
                state.remove(*t, target);
                state.add({t->row, s.col}, color);
                state.add({s.row, t->col}, target);
                changed = true;
            }
        }
    }
    return changed;
}

void run_to_fixed_point(const SkewShape& shape, UncrossState& state, bool different_colors) {
    // Every uncross strictly decreases the sum of row*column over the rooks,
    // so the pass count stays far below this cap; tripping it means a bug.
    long base = static_cast<long>(state.rooks.size()) + shape.ground_size();
    long guard = base * base * base * base;
    long passes = 0;
    while (uncross_pass(shape, state, different_colors))
        if (++passes > guard) throw InternalError("uncrossing did not reach a fixed point");
}

}  // namespace

DoublePlacement uncross(const SkewShape& shape, const Placement& rho1, const Placement& rho2) {
    for (const Placement* rho : {&rho1, &rho2}) {
        if (!is_non_nesting(*rho)) throw UsageError("input placement is nesting or attacking");
        for (const Cell& cell : *rho)
            if (!shape.contains(cell)) throw OffBoard(cell.row, cell.col);
    }
    UncrossState state;
    for (const Cell& cell : rho1) state.add(cell, RookColor::White);
    for (const Cell& cell : rho2) state.add(cell, RookColor::Black);
    run_to_fixed_point(shape, state, /*different_colors=*/true);
    run_to_fixed_point(shape, state, /*different_colors=*/false);
    for (const ColoredRook& rook : state.rooks)
        if (!shape.contains(rook.cell))
            throw InternalError("uncrossing moved a rook off the shape");
    DoublePlacement out{std::move(state.rooks)};
    std::sort(out.rooks.begin(), out.rooks.end());
    return out;
}

NumberedUncrossing number_uncrossing(const DoublePlacement& z) {
    NumberedUncrossing y{z.rooks};
    std::sort(y.order.begin(), y.order.end(), [](const ColoredRook& a, const ColoredRook& b) {
        if (a.cell.row != b.cell.row) return a.cell.row < b.cell.row;
        if (a.cell.col != b.cell.col) return a.cell.col > b.cell.col;
        return a.color == RookColor::Black && b.color == RookColor::White;
    });
    return y;
}

namespace {

Placement pick_parity(const NumberedUncrossing& y, std::size_t start) {
    Placement out;
    for (std::size_t idx = start; idx < y.order.size(); idx += 2) out.push_back(y.order[idx].cell);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Placement odd_rooks(const NumberedUncrossing& y) { return pick_parity(y, 0); }

Placement even_rooks(const NumberedUncrossing& y) { return pick_parity(y, 1); }

std::optional<SortClosureCounterexample> verify_sort_closed(const RookMatroid& rm) {
    const SkewShape& shape = rm.shape();
    for (const ElemSet& i_set : rm.matroid().bases())
        for (const ElemSet& j_set : rm.matroid().bases()) {
            auto [sort1, sort2] = sort_pair(i_set, j_set);
            if (!rm.matroid().is_basis(sort1))
                return SortClosureCounterexample{i_set, j_set, "sort1 is not a basis"};
            if (!rm.matroid().is_basis(sort2))
                return SortClosureCounterexample{i_set, j_set, "sort2 is not a basis"};
            DoublePlacement z =
                uncross(shape, rm.placement_of(i_set), rm.placement_of(j_set));
            NumberedUncrossing y = number_uncrossing(z);
            if (encode(shape, odd_rooks(y)) != sort1)
                return SortClosureCounterexample{i_set, j_set, "odd rooks do not encode sort1"};
            if (encode(shape, even_rooks(y)) != sort2)
                return SortClosureCounterexample{i_set, j_set, "even rooks do not encode sort2"};
        }
    return std::nullopt;
}

}  // namespace rook
