#include "rook/shapes.hpp"

#include <algorithm>
#include <queue>

#include "rook/elem_set.hpp"

namespace rook {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw NotAPartition("parts must be positive, got " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotAPartition("parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw IndexOutOfRange("partition part index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

Board::Board(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ < 1 || cols_ < 1) throw ParseError("board needs at least one row and one column");
    if (rows_ + cols_ > kMaxGroundSize) throw ParseError("board too large");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    by_row_.assign(rows_ + 1, {});
    std::vector<bool> col_seen(cols_ + 1, false);
    for (const Cell& c : cells_) {
        if (c.row < 1 || c.row > rows_ || c.col < rows_ + 1 || c.col > rows_ + cols_)
            throw ParseError("cell " + to_string(c) + " outside the labeled grid");
        by_row_[c.row].push_back(c.col);
        col_seen[c.col - rows_] = true;
    }
    for (int i = 1; i <= rows_; ++i)
        if (by_row_[i].empty()) throw EmptyLine("row " + std::to_string(i) + " has no cell");
    for (int j = 1; j <= cols_; ++j)
        if (!col_seen[j]) throw EmptyLine("column " + std::to_string(rows_ + j) + " has no cell");
}

bool Board::contains(int row, int col) const {
    if (row < 1 || row > rows_) return false;
    const auto& cols = by_row_[row];
    return std::binary_search(cols.begin(), cols.end(), col);
}

const std::vector<int>& Board::row_cols(int row) const {
    if (row < 1 || row > rows_) throw IndexOutOfRange("row " + std::to_string(row));
    return by_row_[row];
}

SkewShape::SkewShape(Partition lambda, Partition mu) : lambda_(lambda.parts()), mu_(mu.parts()) {
    if (static_cast<int>(mu_.size()) > rows())
        throw NotContained("mu has more parts than lambda");
    mu_.resize(lambda_.size(), 0);
    for (int i = 1; i <= rows(); ++i)
        if (mu_[i - 1] > lambda_[i - 1])
            throw NotContained("mu_" + std::to_string(i) + " exceeds lambda_" + std::to_string(i));
    if (ground_size() > kMaxGroundSize) throw ParseError("shape too large");
}

bool SkewShape::contains(int row, int col) const {
    if (row < 1 || row > rows()) return false;
    return col >= row_first_col(row) && col <= row_last_col(row);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows(); ++i)
        for (int col = row_first_col(i); col <= row_last_col(i); ++col) out.push_back({i, col});
    return out;
}

int SkewShape::cell_count() const {
    int total = 0;
    for (int i = 1; i <= rows(); ++i) total += lambda(i) - mu(i);
    return total;
}

bool SkewShape::all_rows_cols_nonempty() const {
    for (int i = 1; i <= rows(); ++i)
        if (row_empty(i)) return false;
    std::vector<bool> col_seen(cols() + 1, false);
    for (int i = 1; i <= rows(); ++i)
        for (int j = mu(i) + 1; j <= lambda(i); ++j) col_seen[j] = true;
    for (int j = 1; j <= cols(); ++j)
        if (!col_seen[j]) return false;
    return true;
}

Board SkewShape::to_board() const {
    return Board(rows(), cols(), cells());
}

namespace {

std::string format_parts(const std::vector<int>& parts, bool compact) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!compact && i > 0) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace

std::string SkewShape::to_string() const {
    std::vector<int> mu_trimmed = mu_;
    while (!mu_trimmed.empty() && mu_trimmed.back() == 0) mu_trimmed.pop_back();
    bool compact = true;
    for (int p : lambda_) compact = compact && p <= 9;
    for (int p : mu_trimmed) compact = compact && p <= 9;
    std::string out = format_parts(lambda_, compact);
    if (!mu_trimmed.empty()) out += "/" + format_parts(mu_trimmed, compact);
    return out;
}

namespace {

std::vector<int> parse_parts(const std::string& side) {
    std::vector<int> parts;
    if (side.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= side.size()) {
            std::size_t next = side.find(',', pos);
            std::string tok = side.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.empty()) throw ParseError("empty part in \"" + side + "\"");
            for (char ch : tok)
                if (ch < '0' || ch > '9') throw ParseError("invalid character in \"" + side + "\"");
            if (tok.size() > 9) throw ParseError("part too large in \"" + side + "\"");
            parts.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        for (char ch : side) {
            if (ch < '0' || ch > '9') throw ParseError("invalid character in \"" + side + "\"");
            parts.push_back(ch - '0');
        }
    }
    return parts;
}

void require_partition(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw NotAPartition("parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw NotAPartition("parts must be weakly decreasing");
    }
}

}  // namespace

SkewShape parse_shape(const std::string& text) {
    if (text.empty()) throw ParseError("empty shape string");
    std::size_t slash = text.find('/');
    std::string lambda_text = text.substr(0, slash);
    std::string mu_text = slash == std::string::npos ? "" : text.substr(slash + 1);
    if (lambda_text.empty()) throw ParseError("missing lambda in \"" + text + "\"");
    if (slash != std::string::npos && mu_text.empty())
        throw ParseError("missing mu after '/' in \"" + text + "\"");

    std::vector<int> lambda = parse_parts(lambda_text);
    std::vector<int> mu = slash == std::string::npos ? std::vector<int>{} : parse_parts(mu_text);
    require_partition(lambda);
    // containment is reported before mu's own monotonicity
    if (mu.size() > lambda.size()) throw NotContained("mu has more parts than lambda");
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i])
            throw NotContained("mu_" + std::to_string(i + 1) + " exceeds lambda_" +
                               std::to_string(i + 1));
    require_partition(mu);
    return SkewShape(Partition(lambda), Partition(mu));
}

Board parse_board(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        if (next == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty board");
    std::size_t width = lines[0].size();
    if (width == 0) throw ParseError("empty board row");
    std::vector<Cell> cells;
    int r = static_cast<int>(lines.size());
    for (int i = 0; i < r; ++i) {
        if (lines[i].size() != width) throw ParseError("ragged board rows");
        for (std::size_t j = 0; j < width; ++j) {
            char ch = lines[i][j];
            if (ch == '#')
                cells.push_back({i + 1, r + static_cast<int>(j) + 1});
            else if (ch != '.')
                throw ParseError(std::string("invalid board character '") + ch + "'");
        }
    }
    return Board(r, static_cast<int>(width), cells);
}

std::vector<Corner> inner_corners(const SkewShape& shape) {
    // (i,j) not on the shape with (i+1,j) and (i,j+1) on it; evaluated only at
    // grid positions, so i <= r-1 and j <= r+c-1.
    std::vector<Corner> out;
    int r = shape.rows(), c = shape.cols();
    for (int i = 1; i <= r - 1; ++i)
        for (int j = r + 1; j <= r + c - 1; ++j)
            if (!shape.contains(i, j) && shape.contains(i + 1, j) && shape.contains(i, j + 1))
                out.push_back({CornerKind::Inner, i, j});
    return out;
}

std::vector<Corner> outer_corners(const SkewShape& shape) {
    std::vector<Corner> out;
    int r = shape.rows(), c = shape.cols();
    for (int i = 2; i <= r; ++i)
        for (int j = r + 2; j <= r + c; ++j)
            if (!shape.contains(i, j) && shape.contains(i, j - 1) && shape.contains(i - 1, j))
                out.push_back({CornerKind::Outer, i, j});
    return out;
}

bool is_skew_board(const Board& board) {
    const auto& cells = board.cells();
    for (const Cell& a : cells)
        for (const Cell& b : cells)
            if (a.row < b.row && a.col < b.col)
                if (!board.contains(b.row, a.col) || !board.contains(a.row, b.col)) return false;
    return true;
}

bool is_connected_shape(const Board& board) {
    int n = board.ground_size();
    std::vector<std::vector<int>> adj(n + 1);
    for (const Cell& c : board.cells()) {
        adj[c.row].push_back(c.col);
        adj[c.col].push_back(c.row);
    }
    std::vector<bool> seen(n + 1, false);
    std::queue<int> queue;
    queue.push(1);
    seen[1] = true;
    int reached = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        ++reached;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push(w);
            }
    }
    return reached == n;
}

bool is_connected_shape(const SkewShape& shape) {
    return is_connected_shape(shape.to_board());
}

}  // namespace rook
