#include "rook/render.hpp"

#include <algorithm>

namespace rook {

namespace {

std::string pad_left(const std::string& text, int width) {
    if (static_cast<int>(text.size()) >= width) return text;
    return std::string(width - text.size(), ' ') + text;
}

// cell_mark returns the 1-character mark for a cell, or '\0' for "plain cell"
template <typename MarkFn>
std::string render_grid(const SkewShape& shape, MarkFn cell_mark) {
    int r = shape.rows(), c = shape.cols();
    int width = 1 + static_cast<int>(std::to_string(r + c).size());
    std::string out = std::string(width, ' ');
    for (int col = r + 1; col <= r + c; ++col) out += pad_left(std::to_string(col), width);
    out += "\n";
    for (int i = 1; i <= r; ++i) {
        std::string line = pad_left(std::to_string(i), width);
        for (int col = r + 1; col <= r + c; ++col) {
            if (!shape.contains(i, col)) {
                line += std::string(width, ' ');
                continue;
            }
            char mark = cell_mark(i, col);
            line += pad_left(std::string(1, mark == '\0' ? '.' : mark), width);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace

std::string ascii_shape(const SkewShape& shape) {
    return render_grid(shape, [](int, int) { return '\0'; });
}

std::string ascii_placement(const SkewShape& shape, const Placement& rooks) {
    return render_grid(shape, [&](int row, int col) {
        return std::find(rooks.begin(), rooks.end(), Cell{row, col}) != rooks.end() ? 'R' : '\0';
    });
}

std::string ascii_double(const SkewShape& shape, const DoublePlacement& dp) {
    return render_grid(shape, [&](int row, int col) {
        Cell cell{row, col};
        bool white = false, black = false;
        for (const ColoredRook& rook : dp.rooks)
            if (rook.cell == cell) (rook.color == RookColor::White ? white : black) = true;
        if (white && black) return '*';
        if (white) return 'R';
        if (black) return 'r';
        return '\0';
    });
}

std::string describe_numbering(const NumberedUncrossing& y) {
    std::string out;
    for (std::size_t idx = 0; idx < y.order.size(); ++idx) {
        const ColoredRook& rook = y.order[idx];
        out += std::to_string(idx + 1) + ": " + to_string(rook.cell) + " " +
               (rook.color == RookColor::White ? "white" : "black") + "\n";
    }
    return out;
}

}  // namespace rook
