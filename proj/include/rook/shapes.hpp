#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rook/errors.hpp"

namespace rook {

// A grid position. Rows are labeled 1..r top to bottom, columns r+1..r+c left
// to right; every cell of a board with r rows carries this labeling.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Weakly decreasing tuple of positive integers; the empty partition is the
// all-zeroes vector.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // part(i) for any i >= 1, zero-padded past the end
    int part(int i) const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// An arbitrary subset of the r x c grid in which every row and every column
// has at least one cell.
class Board {
public:
    Board(int rows, int cols, std::vector<Cell> cells);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int ground_size() const { return rows_ + cols_; }
    const std::vector<Cell>& cells() const { return cells_; }  // row-major order
    bool contains(int row, int col) const;
    bool contains(Cell c) const { return contains(c.row, c.col); }
    // columns of the cells in a row, ascending
    const std::vector<int>& row_cols(int row) const;

    bool operator==(const Board&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> by_row_;
};

enum class CornerKind { Inner, Outer };

struct Corner {
    CornerKind kind;
    int row;
    int col;
    auto operator<=>(const Corner&) const = default;
};

// The board of a pair lambda/mu of partitions with mu contained in lambda;
// cell set { (i, r+j) : 1 <= i <= r, mu_i < j <= lambda_i }. Rows or columns
// may be empty; to_board() rejects such shapes.
class SkewShape {
public:
    SkewShape(Partition lambda, Partition mu);

    int rows() const { return static_cast<int>(lambda_.size()); }
    int cols() const { return lambda_.empty() ? 0 : lambda_[0]; }
    int ground_size() const { return rows() + cols(); }

    int lambda(int i) const { return lambda_[i - 1]; }  // 1-based
    int mu(int i) const { return mu_[i - 1]; }          // 1-based, zero padded
    const std::vector<int>& lambda_parts() const { return lambda_; }
    const std::vector<int>& mu_parts() const { return mu_; }

    bool row_empty(int i) const { return mu(i) >= lambda(i); }
    int row_first_col(int i) const { return rows() + mu(i) + 1; }
    int row_last_col(int i) const { return rows() + lambda(i); }
    bool contains(int row, int col) const;
    bool contains(Cell c) const { return contains(c.row, c.col); }

    std::vector<Cell> cells() const;  // row-major order
    int cell_count() const;
    bool all_rows_cols_nonempty() const;
    Board to_board() const;  // throws EmptyLine on an empty row or column

    // "54421/31" when all parts are single digits, "10,9,3/2,1" otherwise;
    // trailing zeroes of mu are dropped and "/" is omitted when mu is empty.
    std::string to_string() const;

    bool operator==(const SkewShape&) const = default;

private:
    std::vector<int> lambda_;
    std::vector<int> mu_;  // padded to the length of lambda_
};

// Accepts "<lambda>" or "<lambda>/<mu>"; each side is either a digit string
// (all parts <= 9) or a comma-separated list.
SkewShape parse_shape(const std::string& text);

// r lines of exactly c characters, '#' = cell, '.' = hole.
Board parse_board(const std::string& text);

std::vector<Corner> inner_corners(const SkewShape& shape);
std::vector<Corner> outer_corners(const SkewShape& shape);

// Closure property: for cells (i,j), (k,l) with i<k and j<l, both (k,j) and
// (i,l) are on the board.
bool is_skew_board(const Board& board);

// Connectivity of the bipartite row/column incidence graph.
bool is_connected_shape(const Board& board);
bool is_connected_shape(const SkewShape& shape);

}  // namespace rook
