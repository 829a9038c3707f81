#include "rook/placements.hpp"

#include <algorithm>

namespace rook {

bool is_non_nesting(const std::vector<Cell>& rooks) {
    for (std::size_t i = 0; i < rooks.size(); ++i)
        for (std::size_t j = 0; j < rooks.size(); ++j) {
            if (i == j) continue;
            const Cell &s = rooks[i], &t = rooks[j];
            if (s.row == t.row || s.col == t.col) return false;
            if (strictly_nested(s, t)) return false;
        }
    return true;
}

ElemSet encode(int rows, int cols, const Placement& rooks) {
    ElemSet occupied_rows, occupied_cols;
    for (const Cell& c : rooks) {
        occupied_rows = occupied_rows.with(c.row);
        occupied_cols = occupied_cols.with(c.col);
    }
    return occupied_rows | (ElemSet::range(rows + 1, rows + cols) - occupied_cols);
}

ElemSet encode(const Board& board, const Placement& rooks) {
    return encode(board.rows(), board.cols(), rooks);
}

ElemSet encode(const SkewShape& shape, const Placement& rooks) {
    return encode(shape.rows(), shape.cols(), rooks);
}

namespace {

template <typename ContainsFn>
Placement decode_impl(int r, int c, ElemSet b, ContainsFn contains) {
    if (b.size() != c)
        throw SizeMismatch("expected a set of size " + std::to_string(c) + ", got " +
                           std::to_string(b.size()));
    if (!b.subset_of(ElemSet::full(r + c))) throw OutOfRange("element outside [1, r+c]");
    std::vector<int> rows = (b & ElemSet::range(1, r)).elements();
    std::vector<int> cols = (ElemSet::range(r + 1, r + c) - b).elements();
    std::reverse(cols.begin(), cols.end());
    // |rows| == |cols| is automatic when |b| == c
    Placement rooks;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Cell cell{rows[i], cols[i]};
        if (!contains(cell)) throw OffBoard(cell.row, cell.col);
        rooks.push_back(cell);
    }
    return rooks;
}

}  // namespace

Placement decode(const SkewShape& shape, ElemSet b) {
    return decode_impl(shape.rows(), shape.cols(), b,
                       [&](Cell cell) { return shape.contains(cell); });
}

Placement decode(const Board& board, ElemSet b) {
    return decode_impl(board.rows(), board.cols(), b,
                       [&](Cell cell) { return board.contains(cell); });
}

namespace {

void enumerate_rows(const Board& board, int row, int prev_col, Placement& current,
                    std::vector<Placement>& out) {
    if (row > board.rows()) {
        out.push_back(current);
        return;
    }
    enumerate_rows(board, row + 1, prev_col, current, out);
    for (int col : board.row_cols(row)) {
        if (col >= prev_col) break;
        current.push_back({row, col});
        enumerate_rows(board, row + 1, col, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Placement> enumerate_non_nesting(const Board& board) {
    std::vector<Placement> out;
    Placement current;
    enumerate_rows(board, 1, board.ground_size() + 1, current, out);
    std::sort(out.begin(), out.end(), [&](const Placement& a, const Placement& b) {
        return encode(board, a).tuple_less(encode(board, b));
    });
    return out;
}

std::vector<Placement> enumerate_non_nesting(const SkewShape& shape) {
    return enumerate_non_nesting(shape.to_board());
}

}  // namespace rook
