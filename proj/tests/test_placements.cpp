#include <doctest.h>

#include "exhaustive.hpp"
#include "rook/placements.hpp"

using namespace rook;

TEST_CASE("encoding matches the set representation") {
    SkewShape fig1 = parse_shape("55443/31");
    Placement rho{{1, 10}, {3, 9}, {4, 8}, {5, 6}};
    CHECK(encode(fig1, rho) == ElemSet::of({1, 3, 4, 5, 7}));

    CHECK(encode(parse_shape("22"), {}) == ElemSet::of({3, 4}));
    CHECK(encode(parse_shape("54421/31"), {{2, 9}, {3, 8}, {4, 6}}) ==
          ElemSet::of({2, 3, 4, 7, 10}));
}

TEST_CASE("decoding recovers the drawn placement") {
    SkewShape fig1 = parse_shape("55443/31");
    CHECK(decode(fig1, ElemSet::of({1, 3, 4, 5, 7})) ==
          Placement{{1, 10}, {3, 9}, {4, 8}, {5, 6}});
    CHECK(decode(parse_shape("22"), ElemSet::of({3, 4})).empty());
}

TEST_CASE("decoding a non-basis reports the forced off-board cell") {
    Board board(2, 2, {{1, 3}, {2, 4}});
    try {
        decode(board, ElemSet::of({1, 2}));
        FAIL("expected OffBoard");
    } catch (const OffBoard& e) {
        CHECK(e.row == 1);
        CHECK(e.col == 4);
    }
    CHECK_THROWS_AS(decode(board, ElemSet::of({1, 2, 3})), SizeMismatch);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_non_nesting(parse_shape("22")).size() == 6);
    CHECK(enumerate_non_nesting(parse_shape("222")).size() == 10);  // C(5,2)
}

TEST_CASE("full rectangles carry binomially many placements") {
    for (int r = 1; r <= 5; ++r)
        for (int c = 1; c <= 5; ++c) {
            SkewShape rect{Partition(std::vector<int>(r, c)), Partition{}};
            long binom = 1;
            for (int i = 1; i <= c; ++i) binom = binom * (r + c - i + 1) / i;
            CHECK(enumerate_non_nesting(rect).size() == static_cast<std::size_t>(binom));
        }
}

TEST_CASE("enumeration on a non-skew board skips the nesting pair") {
    Board board(2, 2, {{1, 3}, {2, 4}});
    std::vector<Placement> placements = enumerate_non_nesting(board);
    CHECK(placements.size() == 3);
    CHECK(std::count(placements.begin(), placements.end(), Placement{}) == 1);
    CHECK(std::count(placements.begin(), placements.end(), Placement{{1, 3}}) == 1);
    CHECK(std::count(placements.begin(), placements.end(), Placement{{2, 4}}) == 1);
}

TEST_CASE("nesting predicates") {
    CHECK(!is_non_nesting({{1, 3}, {2, 4}}));
    CHECK(is_non_nesting({{1, 4}, {2, 3}}));
    CHECK(strictly_nested({2, 9}, {5, 10}));
    CHECK(!strictly_nested({5, 10}, {2, 9}));
    CHECK(!is_non_nesting({{1, 3}, {1, 4}}));  // attacking
}

TEST_CASE("encode and decode are mutually inverse on every shape") {
    testing::for_each_shape_up_to(9, [](const SkewShape& shape) {
        for (const Placement& rho : enumerate_non_nesting(shape)) {
            ElemSet b = encode(shape, rho);
            CHECK(b.size() == shape.cols());
            CHECK(decode(shape, b) == rho);
            // rows ascending means columns strictly descending
            CHECK(is_non_nesting(rho));
        }
    });
}
