#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include <untangle/arrangement.hpp>
#include <untangle/rng.hpp>

#include "test_support.hpp"

using namespace untangle;

TEST_CASE("line_through and intersections") {
    Line l = line_through({0, 0}, {2, 2});
    CHECK(line_eval(l, {1, 1}) == 0);
    CHECK(line_eval(l, {0, 1}) != 0);
    Line m = line_through({0, 2}, {2, 0});
    auto p = line_intersection(l, m);
    REQUIRE(p.has_value());
    CHECK(*p == Point{1, 1});
    CHECK_FALSE(line_intersection(line_through({0, 0}, {1, 0}), line_through({0, 1}, {1, 1})));
}

TEST_CASE("triangle arrangement counts cells") {
    std::vector<Point> tri{{0, 0}, {4, 0}, {0, 4}};
    Arrangement arr = build_arrangement(tri);
    CHECK_FALSE(arr.degenerate);
    CHECK(arr.lines.size() == 3);
    CHECK(arr.vertices.size() == 3);
    CHECK(arr.edges.size() == 9);
    CHECK(arr.faces.size() == 7);
    CHECK(arr.euler_characteristic() == 1);
    int bounded_faces = 0;
    for (const auto& f : arr.faces) bounded_faces += f.bounded ? 1 : 0;
    CHECK(bounded_faces == 1); // the triangle interior
}

TEST_CASE("collinear input degenerates to one line") {
    std::vector<Point> pts{{0, 0}, {1, 0}, {2, 0}};
    Arrangement arr = build_arrangement(pts);
    CHECK(arr.degenerate);
    CHECK(arr.lines.size() == 1);
    CHECK(arr.faces.size() == 2); // the two open half-planes
}

TEST_CASE("representatives land in their cells") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        auto pts = test_support::random_points(3 + static_cast<int>(rng.below(4)), rng);
        Arrangement arr = build_arrangement(pts);
        if (arr.degenerate) continue;
        CHECK(arr.euler_characteristic() == 1);
        for (const auto& f : arr.faces)
            for (const Line& l : arr.lines) CHECK(line_eval(l, f.rep) != 0);
        for (const auto& e : arr.edges) {
            int on = 0;
            for (const Line& l : arr.lines) on += line_eval(l, e.rep) == 0 ? 1 : 0;
            CHECK(on == 1);
            CHECK(line_eval(arr.lines[e.line], e.rep) == 0);
        }
        std::set<Point> vset(arr.vertices.begin(), arr.vertices.end());
        for (const Point& p : pts) CHECK(vset.count(p) == 1);
        // face signatures are distinct
        std::set<std::vector<int>> sigs;
        for (const auto& f : arr.faces) sigs.insert(f.signs);
        CHECK(sigs.size() == arr.faces.size());
    }
}

// with concurrencies: faces = 1 + lines + sum over vertices of (multiplicity - 1),
// and each line carries one more edge than it has vertices
static void check_cell_counts(const Arrangement& arr) {
    std::size_t extra = 0;
    for (const Point& v : arr.vertices) {
        std::size_t mult = 0;
        for (const Line& l : arr.lines) mult += line_eval(l, v) == 0 ? 1 : 0;
        REQUIRE(mult >= 2);
        extra += mult - 1;
    }
    CHECK(arr.faces.size() == 1 + arr.lines.size() + extra);
    for (std::size_t li = 0; li < arr.lines.size(); ++li) {
        std::size_t on = 0, edges = 0;
        for (const Point& v : arr.vertices) on += line_eval(arr.lines[li], v) == 0 ? 1 : 0;
        for (const auto& e : arr.edges) edges += e.line == static_cast<int>(li) ? 1 : 0;
        CHECK(edges == on + 1);
    }
}

TEST_CASE("cell counts obey the concurrency formula") {
    // 4 generic points: 6 lines, 4 triple points + 3 simple crossings,
    // 18 faces, 24 edges
    std::vector<Point> pts{{0, 0}, {7, 1}, {3, 9}, {11, 6}};
    Arrangement arr = build_arrangement(pts);
    REQUIRE_FALSE(arr.degenerate);
    REQUIRE(arr.lines.size() == 6);
    check_cell_counts(arr);
    CHECK(arr.vertices.size() == 7);
    CHECK(arr.faces.size() == 18);
    CHECK(arr.edges.size() == 24);
    CHECK(arr.euler_characteristic() == 1);

    Rng rng(77);
    for (int t = 0; t < 12; ++t) {
        auto rnd = test_support::random_points(4 + static_cast<int>(rng.below(2)), rng);
        Arrangement a = build_arrangement(rnd);
        if (!a.degenerate) check_cell_counts(a);
    }
}

TEST_CASE("safe_step stays short of the first line hit") {
    std::vector<Line> lines{line_through({1, 0}, {1, 1})};
    Rat step = detail::safe_step(lines, Point{0, 0}, Point{1, 0});
    CHECK(step == Rat(1, 2));
    CHECK(detail::safe_step(lines, Point{0, 0}, Point{0, 1}) == 1);
}
