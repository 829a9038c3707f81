#pragma once

#include <vector>

#include "rook/elem_set.hpp"
#include "rook/shapes.hpp"

namespace rook {

// A set of rooks, kept sorted by row. Valid placements are non-attacking and
// non-nesting: listing rooks by increasing row, columns strictly decrease.
using Placement = std::vector<Cell>;

// t lies strictly South-East of s.
inline bool strictly_nested(const Cell& s, const Cell& t) {
    return s.row < t.row && s.col < t.col;
}

// Non-attacking and free of strictly nested pairs.
bool is_non_nesting(const std::vector<Cell>& rooks);

// R(rho) u C(rho): occupied row indices plus unoccupied column indices. The
// result always has exactly `cols` elements.
ElemSet encode(int rows, int cols, const Placement& rooks);
ElemSet encode(const Board& board, const Placement& rooks);
ElemSet encode(const SkewShape& shape, const Placement& rooks);

// Inverse of encode: pairs the rows of b ascending with the occupied columns
// descending (the unique non-nesting pairing) and checks each forced cell
// against the shape.
Placement decode(const SkewShape& shape, ElemSet b);
Placement decode(const Board& board, ElemSet b);

// All non-nesting placements, the empty one included, sorted by encoding.
std::vector<Placement> enumerate_non_nesting(const Board& board);
std::vector<Placement> enumerate_non_nesting(const SkewShape& shape);

}  // namespace rook
