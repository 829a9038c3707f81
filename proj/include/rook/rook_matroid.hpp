#pragma once

#include <variant>
#include <vector>

#include "rook/cyclic.hpp"
#include "rook/matroid.hpp"
#include "rook/necklace.hpp"
#include "rook/placements.hpp"
#include "rook/shapes.hpp"

namespace rook {

// The matroid on [r+c] whose bases are the encodings of the non-nesting rook
// placements on a skew shape, together with the basis <-> placement index.
class RookMatroid {
public:
    static RookMatroid build(const SkewShape& shape);

    const SkewShape& shape() const { return shape_; }
    const Matroid& matroid() const { return matroid_; }
    const Placement& placement_of(ElemSet basis) const;

private:
    RookMatroid(SkewShape shape, Matroid matroid,
                std::vector<std::pair<ElemSet, Placement>> index)
        : shape_(std::move(shape)), matroid_(std::move(matroid)), index_(std::move(index)) {}
    SkewShape shape_;
    Matroid matroid_;
    std::vector<std::pair<ElemSet, Placement>> index_;  // sorted by basis
};

// The i-extremal non-nesting placement. For a row index i: a rook in the last
// cell of row i, then rows below greedily rightmost keeping the placement
// non-nesting, stopping once a rook lands in the last row or the first
// column. For a column index i: columns i..r+c stay unoccupied and rows 1..r
// are filled greedily rightmost; rows with no admissible cell are skipped.
Placement extremal_placement(const SkewShape& shape, int i);

// (I_1, ..., I_{r+c}) with I_i the encoding of the i-extremal placement.
GrassmannNecklace grassmann_necklace(const SkewShape& shape);

// Gale-minimal necklace of any loopless matroid given by bases: I_i is the
// basis minimal in the shifted order i < i+1 < ... < n < 1 < ... < i-1,
// comparing bases as ascending tuples in that order.
GrassmannNecklace necklace_from_bases(const Matroid& m);

// Interval statistics of the extremal placements rho_a.
class IntervalStats {
public:
    explicit IntervalStats(const SkewShape& shape);

    // |I_a n [1, b]| for a column index a and row index b
    int ell(int a, int b) const;
    // |I_a n [r+1, b]| for a row index a and column index b
    int m(int a, int b) const;
    // rooks of rho_a in columns [b+1, a-1], both column indices, b < a
    int y(int a, int b) const;
    // last row index holding a rook of rho_a, for a row index a
    int t(int a) const;

    const GrassmannNecklace& necklace() const { return necklace_; }
    const Placement& placement(int a) const { return placements_[a - 1]; }

private:
    int rows_;
    int cols_;
    std::vector<Placement> placements_;
    GrassmannNecklace necklace_;
};

// rank([a,b]) = |I_a n [a,b]|, checked against the closed forms
//   r+c-a+1 + ell(a,b)   for a column index a and row index b,
//   t(a)-a+1 + m(a,b)    for a row index a and column index b,
//   c-a+b+1 + y(a,b)     for column indices b < a.
int interval_rank(const RookMatroid& rm, const CyclicInterval& iv);
int interval_rank(const RookMatroid& rm, const CyclicInterval& iv, const IntervalStats& stats);

// Runs basis exchange over the encodings of the non-nesting placements on an
// arbitrary board: the verified matroid, or the first counterexample.
std::variant<Matroid, ExchangeCounterexample> is_matroid_board(const Board& board);

}  // namespace rook
