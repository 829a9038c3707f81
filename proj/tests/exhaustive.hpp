#pragma once

#include <functional>
#include <vector>

#include "rook/shapes.hpp"

namespace rook::testing {

// All skew shapes with exactly r rows and c columns: lambda_1 = c, every row
// nonempty (mu_i < lambda_i), every column nonempty.
inline std::vector<SkewShape> all_skew_shapes(int r, int c) {
    std::vector<SkewShape> out;
    std::vector<int> lambda(r), mu(r);
    std::function<void(int)> fill_mu = [&](int i) {
        if (i == r) {
            std::vector<int> mu_trimmed = mu;
            while (!mu_trimmed.empty() && mu_trimmed.back() == 0) mu_trimmed.pop_back();
            SkewShape shape{Partition(lambda), Partition(mu_trimmed)};
            if (shape.all_rows_cols_nonempty()) out.push_back(shape);
            return;
        }
        int hi = std::min(i == 0 ? lambda[0] - 1 : mu[i - 1], lambda[i] - 1);
        for (int v = hi; v >= 0; --v) {
            mu[i] = v;
            fill_mu(i + 1);
        }
    };
    std::function<void(int)> fill_lambda = [&](int i) {
        if (i == r) {
            fill_mu(0);
            return;
        }
        int hi = i == 0 ? c : lambda[i - 1];
        int lo = i == 0 ? c : 1;
        for (int v = hi; v >= lo; --v) {
            lambda[i] = v;
            fill_lambda(i + 1);
        }
    };
    fill_lambda(0);
    return out;
}

// Every shape with nonempty rows and columns and r + c <= max_ground.
inline void for_each_shape_up_to(int max_ground,
                                 const std::function<void(const SkewShape&)>& fn) {
    for (int r = 1; r < max_ground; ++r)
        for (int c = 1; r + c <= max_ground; ++c)
            for (const SkewShape& shape : all_skew_shapes(r, c)) fn(shape);
}

}  // namespace rook::testing
