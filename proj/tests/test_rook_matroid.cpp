#include <doctest.h>

#include <algorithm>
#include <set>

#include "exhaustive.hpp"
#include "rook/rook_matroid.hpp"
#include "rook/sorting.hpp"

using namespace rook;

namespace {

bool is_cyclic_interval(ElemSet s, int n) {
    if (s.empty() || s.size() == n) return true;
    // some element outside s whose successor lies in s marks the single start
    int starts = 0;
    for (int e = 1; e <= n; ++e) {
        int next = e % n + 1;
        if (!s.contains(e) && s.contains(next)) ++starts;
    }
    return starts == 1;
}

}  // namespace

TEST_CASE("rectangles build uniform matroids") {
    RookMatroid rm = RookMatroid::build(parse_shape("22"));
    CHECK(rm.matroid().bases().size() == 6);
    for (unsigned mask = 0; mask < 16; ++mask)
        if (ElemSet{mask}.size() == 2) CHECK(rm.matroid().is_basis(ElemSet{mask}));

    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) {
            SkewShape rect{Partition(std::vector<int>(r, c)), Partition{}};
            Matroid m = RookMatroid::build(rect).matroid();
            CHECK(m.rank() == c);
            long binom = 1;
            for (int i = 1; i <= c; ++i) binom = binom * (r + c - i + 1) / i;
            CHECK(m.bases().size() == static_cast<std::size_t>(binom));
        }
}

TEST_CASE("build on the running example") {
    RookMatroid rm = RookMatroid::build(parse_shape("54421/31"));
    CHECK(rm.matroid().rank() == 5);
    CHECK(rm.matroid().ambient_size() == 10);
    CHECK(rm.matroid().bases().size() == enumerate_non_nesting(parse_shape("54421/31")).size());
    CHECK(rm.matroid().verified());
    Matroid copy = rm.matroid();
    CHECK(!copy.verify().has_value());
    // the index maps bases back to their placements
    for (const ElemSet& b : rm.matroid().bases())
        CHECK(encode(rm.shape(), rm.placement_of(b)) == b);
}

TEST_CASE("extremal placements on the drawn figure shape") {
    SkewShape fig = parse_shape("55443/31");
    CHECK(extremal_placement(fig, 3) == Placement{{3, 9}, {4, 8}, {5, 7}});
    CHECK(encode(fig, extremal_placement(fig, 3)) == ElemSet::of({3, 4, 5, 6, 10}));
    CHECK(extremal_placement(fig, 8) == Placement{{2, 7}, {3, 6}});
    CHECK(encode(fig, extremal_placement(fig, 8)) == ElemSet::of({2, 3, 8, 9, 10}));
}

TEST_CASE("extremal placements on 54421/31") {
    SkewShape s = parse_shape("54421/31");
    // row 4 of this shape ends at column 7, so the 3-extremal run drops there
    CHECK(extremal_placement(s, 3) == Placement{{3, 9}, {4, 7}, {5, 6}});
    CHECK(encode(s, extremal_placement(s, 3)) == ElemSet::of({3, 4, 5, 8, 10}));
    CHECK(extremal_placement(s, 8) == Placement{{2, 7}, {3, 6}});
    CHECK(encode(s, extremal_placement(s, 8)) == ElemSet::of({2, 3, 8, 9, 10}));
    // the first column index always yields the empty placement
    CHECK(extremal_placement(s, 6).empty());
    CHECK(encode(s, extremal_placement(s, 6)) == ElemSet::range(6, 10));
    CHECK_THROWS_AS(extremal_placement(s, 0), IndexOutOfRange);
    CHECK_THROWS_AS(extremal_placement(s, 11), IndexOutOfRange);
}

TEST_CASE("grassmann necklace of the rectangle") {
    GrassmannNecklace gn = grassmann_necklace(parse_shape("22"));
    CHECK(gn.term(1) == ElemSet::of({1, 2}));
    CHECK(gn.term(2) == ElemSet::of({2, 3}));
    CHECK(gn.term(3) == ElemSet::of({3, 4}));
    CHECK(gn.term(4) == ElemSet::of({1, 4}));
}

TEST_CASE("grassmann necklace of the worked example") {
    GrassmannNecklace gn = grassmann_necklace(parse_shape("554421/2211"));
    std::vector<ElemSet> expected{
        ElemSet::of({1, 2, 3, 4, 5}),   ElemSet::of({2, 3, 4, 5, 6}),
        ElemSet::of({3, 4, 5, 6, 11}),  ElemSet::of({4, 5, 6, 9, 11}),
        ElemSet::of({5, 6, 9, 10, 11}), ElemSet::of({6, 8, 9, 10, 11}),
        ElemSet::of({7, 8, 9, 10, 11}), ElemSet::of({5, 8, 9, 10, 11}),
        ElemSet::of({3, 5, 9, 10, 11}), ElemSet::of({1, 3, 5, 10, 11}),
        ElemSet::of({1, 2, 3, 5, 11}),
    };
    CHECK(gn.terms() == expected);
}

TEST_CASE("the Gale-minimal necklace agrees with the extremal construction") {
    Matroid u24 = RookMatroid::build(parse_shape("22")).matroid();
    GrassmannNecklace uniform = necklace_from_bases(u24);
    CHECK(uniform == grassmann_necklace(parse_shape("22")));

    for (const char* spec : {"54421/31", "554421/2211", "55443/31", "21/1", "222/1"}) {
        SkewShape shape = parse_shape(spec);
        CHECK(necklace_from_bases(RookMatroid::build(shape).matroid()) ==
              grassmann_necklace(shape));
    }
}

TEST_CASE("interval ranks with closed-form checks") {
    RookMatroid rm = RookMatroid::build(parse_shape("54421/31"));
    CHECK(interval_rank(rm, CyclicInterval::proper(10, 7, 2)) == 4);
    CHECK(interval_rank(rm, CyclicInterval::proper(10, 9, 1)) == 2);
    CHECK(interval_rank(rm, CyclicInterval::full(10)) == 5);
}

TEST_CASE("interval ranks match the brute-force oracle everywhere") {
    testing::for_each_shape_up_to(9, [](const SkewShape& shape) {
        RookMatroid rm = RookMatroid::build(shape);
        IntervalStats st(shape);
        int n = shape.ground_size();
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if ((b - a + n) % n + 1 == n) continue;
                CyclicInterval iv = CyclicInterval::proper(n, a, b);
                CHECK(interval_rank(rm, iv, st) == rm.matroid().rank(iv));
            }
        CHECK(interval_rank(rm, CyclicInterval::full(n), st) == rm.matroid().rank());
    });
}

TEST_CASE("ell vanishing certifies the cell left of the first rook is off the shape") {
    testing::for_each_shape_up_to(8, [](const SkewShape& shape) {
        IntervalStats st(shape);
        int r = shape.rows(), n = shape.ground_size();
        for (int a = r + 1; a <= n; ++a)
            for (int b = 1; b <= r; ++b)
                if (st.ell(a, b) == 0) CHECK(!shape.contains(b, a - 1));
    });
}

TEST_CASE("successive extremal rooks advance by one row or one column") {
    testing::for_each_shape_up_to(8, [](const SkewShape& shape) {
        for (int i = 1; i <= shape.ground_size(); ++i) {
            Placement rho = extremal_placement(shape, i);
            for (std::size_t j = 0; j + 1 < rho.size(); ++j)
                CHECK((rho[j + 1].row == rho[j].row + 1 || rho[j + 1].col == rho[j].col - 1));
        }
    });
}

TEST_CASE("necklace stats satisfy the corner inequalities") {
    testing::for_each_shape_up_to(8, [](const SkewShape& shape) {
        NecklaceStats st(grassmann_necklace(shape));
        int r = shape.rows(), n = shape.ground_size();
        for (int j = r + 2; j <= n; ++j) CHECK(st.c(st.r(j)) >= j - 1);
        for (int i = 1; i <= r; ++i) {
            int idx = st.c(i) + 2;
            CHECK(st.r(idx) - 1 <= i);
        }
    });
}

TEST_CASE("strict drops in the stats detect corners") {
    testing::for_each_shape_up_to(8, [](const SkewShape& shape) {
        NecklaceStats st(grassmann_necklace(shape));
        int r = shape.rows(), n = shape.ground_size();
        auto has_corner = [&](const std::vector<Corner>& corners, int row, int col) {
            return std::any_of(corners.begin(), corners.end(), [&](const Corner& c) {
                return c.row == row && c.col == col;
            });
        };
        std::vector<Corner> inner = inner_corners(shape), outer = outer_corners(shape);
        for (int i = 2; i <= r; ++i) {
            bool drop = st.c(i) < st.c(i - 1);
            CHECK(drop == has_corner(outer, i, st.c(i) + 1));
            if (drop) CHECK(!is_cyclic_interval(grassmann_necklace(shape).term(i), n));
        }
        for (int i = r + 2; i < n; ++i) {
            bool drop = st.r(i) > st.r(i + 1);
            CHECK(drop == (st.r(i) != 1 && has_corner(inner, st.r(i) - 1, i - 1)));
            if (drop) CHECK(!is_cyclic_interval(grassmann_necklace(shape).term(i), n));
        }
    });
}

TEST_CASE("is_matroid_board on the three non-skew boards and a shape") {
    auto check_board = [](const Board& board, ElemSet b1, ElemSet b2, int a) {
        auto result = is_matroid_board(board);
        REQUIRE(std::holds_alternative<ExchangeCounterexample>(result));
        const auto& ce = std::get<ExchangeCounterexample>(result);
        CHECK(ce.b1 == b1);
        CHECK(ce.b2 == b2);
        CHECK(ce.a == a);
    };
    check_board(parse_board("##\n.#"), ElemSet::of({2, 3}), ElemSet::of({1, 4}), 3);
    check_board(parse_board("#.\n.#"), ElemSet::of({2, 3}), ElemSet::of({1, 4}), 3);
    // the transposed board has no valid exchange for a = 4 out of {1,4}
    check_board(parse_board("#.\n##"), ElemSet::of({1, 4}), ElemSet::of({2, 3}), 4);

    auto skew = is_matroid_board(parse_shape("54421/31").to_board());
    CHECK(std::holds_alternative<Matroid>(skew));
}
