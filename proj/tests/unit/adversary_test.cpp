#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <untangle/adversary.hpp>
#include <untangle/rng.hpp>

#include "test_support.hpp"

using namespace untangle;
using namespace untangle::adversary;

namespace {

std::vector<Point> sorted_copy(std::vector<Point> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("wheel and fan adversaries permute the point set") {
    Rng rng(17);
    auto X = test_support::random_points(8, rng);
    graphs::Drawing w = wheel_adversary(X, 7);
    CHECK(w.graph == graphs::wheel_graph(8));
    CHECK(sorted_copy(w.placement) == sorted_copy(X));
    CHECK(w.placement[7] == X[7]); // hub pinned to the last point
    CHECK(wheel_adversary(X, 7).placement == w.placement);
    CHECK(wheel_adversary(X, 8).placement != w.placement);

    graphs::Drawing f = fan_adversary(X, 21);
    CHECK(f.graph == graphs::fan_graph(8));
    CHECK(sorted_copy(f.placement) == sorted_copy(X));
    CHECK(f.placement[7] == X[7]);
    CHECK(fan_adversary(X, 21).placement == f.placement);

    auto tiny = test_support::random_points(4, rng);
    CHECK_THROWS_AS(wheel_adversary(tiny, 1), std::invalid_argument);
}

TEST_CASE("stars adversary strides along the line") {
    std::vector<Point> X;
    for (int i = 0; i < 9; ++i) X.push_back({i, 0});
    Rng rng(3);
    rng.shuffle(X); // the adversary sorts internally
    graphs::Drawing d = stars_collinear_adversary(X, 3);
    CHECK(d.graph == graphs::star_forest(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j + 1 < 3; ++j) CHECK(d.placement[i * 3 + j] == Point{i + 3 * j, 0});
        CHECK(d.placement[i * 3 + 2] == Point{6 + i, 0}); // centers on the last k points
    }

    CHECK_THROWS_AS(stars_collinear_adversary(X, 2), std::invalid_argument);
    auto scattered = test_support::random_points(9, rng);
    CHECK_THROWS_AS(stars_collinear_adversary(scattered, 3), std::invalid_argument);
}

TEST_CASE("interweaving coloring cycles around the boundary") {
    Rng rng(29);
    auto X = test_support::convex_points(9, rng);
    BalancedColoring col = interweaving_coloring(X, 3);
    CHECK_NOTHROW(col.validate(9));
    auto cyc = boundary_cyclic_order(X);
    for (int c = 0; c < 3; ++c) {
        REQUIRE(col.classes[c].size() == 3);
        for (int r = 0; r < 3; ++r) CHECK(col.classes[c][r] == cyc[c + 3 * r]);
    }

    // general-position input is rejected
    std::vector<Point> grid;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) grid.push_back({i, j});
    CHECK_THROWS_AS(interweaving_coloring(grid, 3), std::invalid_argument);
    CHECK_THROWS_AS(interweaving_coloring(X, 2), std::invalid_argument);
}

TEST_CASE("H_n adversary sends groups onto color classes") {
    Rng rng(31);
    auto X = test_support::weakly_convex_points(9, rng);
    BalancedColoring col = interweaving_coloring(X, 3);
    graphs::HnGraph H = graphs::make_Hn(3, graphs::HnKind::fan_stack);
    graphs::Drawing d = hn_adversary(X, col, H);
    CHECK(d.graph == H.graph);
    CHECK_NOTHROW(d.validate());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d.placement[H.groups[i][j]] == X[col.classes[i][j]]);

    BalancedColoring wrong = col;
    wrong.k = 2;
    CHECK_THROWS_AS(hn_adversary(X, wrong, H), std::invalid_argument);
}

TEST_CASE("coloring validation") {
    BalancedColoring col;
    col.k = 2;
    col.classes = {{0, 1}, {2, 3}};
    CHECK_NOTHROW(col.validate(4));
    col.classes = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(col.validate(4), std::invalid_argument);
    col.classes = {{0, 1, 2}, {3}};
    CHECK_THROWS_AS(col.validate(4), std::invalid_argument);
    col.classes = {{0, 1}, {2, 9}};
    CHECK_THROWS_AS(col.validate(4), std::out_of_range);
}

TEST_CASE("annealing finds the crossing pairing on the square") {
    std::vector<Point> sq{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    BalancedColoring col = anneal_coloring(sq, 2, 60, 5);
    CHECK_NOTHROW(col.validate(4));
    // the diagonal pairing is the unique coloring that loses a point
    CHECK(clustering::max_clustered_subset(sq, col.classes).upper == 3);
    // deterministic under the seed
    BalancedColoring again = anneal_coloring(sq, 2, 60, 5);
    CHECK(col.classes == again.classes);
}
