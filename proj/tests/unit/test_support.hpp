#pragma once

// seeded point-set builders shared by the test suites

#include <set>
#include <vector>

#include <untangle/geometry.hpp>
#include <untangle/rng.hpp>

namespace test_support {

using untangle::Int;
using untangle::Point;
using untangle::Rat;
using untangle::Rng;

inline Rat coord(Rng& rng, int span) {
    return Rat(Int(rng.range(-4 * span, 4 * span)), Int(rng.range(1, 5)));
}

inline std::vector<Point> random_points(int n, Rng& rng) {
    std::set<Point> got;
    while (static_cast<int>(got.size()) < n) got.insert(Point{coord(rng, n), coord(rng, n)});
    std::vector<Point> pts(got.begin(), got.end());
    rng.shuffle(pts);
    return pts;
}

inline std::vector<Point> collinear_points(int n, Rng& rng) {
    Rat a(Int(rng.range(-3, 3)), Int(rng.range(1, 3)));
    Rat b(Int(rng.range(-5, 5)), Int(1));
    std::set<Rat> xs;
    while (static_cast<int>(xs.size()) < n) xs.insert(coord(rng, n));
    std::vector<Point> pts;
    for (const Rat& x : xs) pts.push_back(Point{x, a * x + b});
    rng.shuffle(pts);
    return pts;
}

inline std::vector<Point> convex_points(int n, Rng& rng) {
    std::set<Rat> ts;
    while (static_cast<int>(ts.size()) < n) ts.insert(coord(rng, n));
    std::vector<Point> pts;
    for (const Rat& t : ts) pts.push_back(Point{t, t * t});
    rng.shuffle(pts);
    return pts;
}

inline std::vector<Point> weakly_convex_points(int n, Rng& rng) {
    if (n < 5) return convex_points(n, rng);
    int corners = std::max(3, (n + 1) / 2);
    std::set<Rat> ts;
    while (static_cast<int>(ts.size()) < corners) ts.insert(coord(rng, n));
    std::vector<Point> poly;
    for (const Rat& t : ts) poly.push_back(Point{t, t * t});
    std::vector<Point> pts = poly;
    for (int i = 0; static_cast<int>(pts.size()) < n; ++i)
        pts.push_back(untangle::midpoint(poly[i % corners], poly[(i + 1) % corners]));
    rng.shuffle(pts);
    return pts;
}

} // namespace test_support
