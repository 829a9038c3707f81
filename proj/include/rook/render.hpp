#pragma once

#include <string>

#include "rook/placements.hpp"
#include "rook/shapes.hpp"
#include "rook/sorting.hpp"

namespace rook {

// Grid with row labels left and column labels on top; '.' for empty cells,
// blanks for holes.
std::string ascii_shape(const SkewShape& shape);

// Same grid with 'R' at the rook cells.
std::string ascii_placement(const SkewShape& shape, const Placement& rooks);

// 'R' white, 'r' black, '*' where both colors share a square.
std::string ascii_double(const SkewShape& shape, const DoublePlacement& dp);

// One line per rook in scan order: "<number>: (row,col) white|black".
std::string describe_numbering(const NumberedUncrossing& y);

}  // namespace rook
