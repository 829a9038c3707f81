#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rook/elem_set.hpp"
#include "rook/rook_matroid.hpp"
#include "rook/shapes.hpp"

namespace rook {

enum class RookColor { White, Black };

struct ColoredRook {
    Cell cell;
    RookColor color;
    auto operator<=>(const ColoredRook&) const = default;
};

// Two colored rook sets on a shape. At most one rook per color per cell; two
// rooks of the same color may share a row or column once uncrossing has run.
struct DoublePlacement {
    std::vector<ColoredRook> rooks;  // sorted

    std::vector<Cell> of_color(RookColor color) const;
    bool operator==(const DoublePlacement&) const = default;
};

// Merge I u J as the sorted multiset a_1 <= b_1 <= ... <= a_k <= b_k and
// return ({a_1..a_k}, {b_1..b_k}).
std::pair<ElemSet, ElemSet> sort_pair(ElemSet i_set, ElemSet j_set);

// The uncrossing procedure: step (1) removes all strictly nested pairs of
// different colors, step (2) all same-color ones, scanning rows top to bottom
// and each row right to left, repeating full passes until a fixed point. Each
// uncross of s=(i,j), t=(k,l) replaces the pair by (k,j), (i,l) with the
// colors kept on the columns.
DoublePlacement uncross(const SkewShape& shape, const Placement& rho1, const Placement& rho2);

// Rooks of Z in scan order (top to bottom, right to left, black before white
// on shared squares); the rook at position p carries number p+1.
struct NumberedUncrossing {
    std::vector<ColoredRook> order;
};

NumberedUncrossing number_uncrossing(const DoublePlacement& z);

Placement odd_rooks(const NumberedUncrossing& y);
Placement even_rooks(const NumberedUncrossing& y);

struct SortClosureCounterexample {
    ElemSet i_set;
    ElemSet j_set;
    std::string what;
};

// Ok (nullopt) iff for every basis pair sort1/sort2 are bases and the
// uncross -> number -> odd/even pipeline reproduces them.
std::optional<SortClosureCounterexample> verify_sort_closed(const RookMatroid& rm);

}  // namespace rook
