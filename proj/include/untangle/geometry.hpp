#pragma once

// Exact primitives on rational points: orientation, segment relation classification,
// convex hull with on-boundary reporting, position class of a point set.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace untangle {

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& a) { return {s * a.x, s * a.y}; }

inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rat norm2(const Point& u) { return dot(u, u); }

// +1 if p->q->r turns left (counterclockwise), -1 right, 0 collinear
inline int orient(const Point& p, const Point& q, const Point& r) {
    return sign(cross(q - p, r - p));
}

inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

// p lies on the closed segment [a, b]
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return sign(dot(p - a, p - b)) <= 0;
}

inline bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
    return on_segment(p, a, b) && p != a && p != b;
}

enum class SegRelation {
    disjoint,             // no common point
    shared_endpoint_only, // exactly one common point, an endpoint of both
    proper_cross,         // one common point, interior to both
    improper_touch,       // one common point, endpoint of one, not of the other
    overlap,              // common segment of positive length
};

inline const char* to_string(SegRelation r) {
    switch (r) {
        case SegRelation::disjoint: return "disjoint";
        case SegRelation::shared_endpoint_only: return "shared_endpoint_only";
        case SegRelation::proper_cross: return "proper_cross";
        case SegRelation::improper_touch: return "improper_touch";
        case SegRelation::overlap: return "overlap";
    }
    return "?";
}

// Classifies closed segments [a,b] vs [c,d]; endpoints of each must be distinct.
inline SegRelation segments_relation(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == b || c == d) throw std::invalid_argument("degenerate segment");
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // collinear: compare 1-d parameters along the carrier line
        Point dir = b - a;
        Rat ta = 0, tb = dot(dir, b - a), tc = dot(dir, c - a), td = dot(dir, d - a);
        Rat lo1 = std::min(ta, tb), hi1 = std::max(ta, tb);
        Rat lo2 = std::min(tc, td), hi2 = std::max(tc, td);
        Rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return SegRelation::disjoint;
        if (lo < hi) return SegRelation::overlap;
        return SegRelation::shared_endpoint_only; // single point; on a line it ends both
    }

    // different carrier lines: at most one common point
    bool meet = false;
    Point common{};
    if (o1 == 0 && on_segment(c, a, b)) { meet = true; common = c; }
    else if (o2 == 0 && on_segment(d, a, b)) { meet = true; common = d; }
    else if (o3 == 0 && on_segment(a, c, d)) { meet = true; common = a; }
    else if (o4 == 0 && on_segment(b, c, d)) { meet = true; common = b; }
    else if (o1 != o2 && o3 != o4 && o1 * o2 < 0 && o3 * o4 < 0) return SegRelation::proper_cross;

    if (!meet) return SegRelation::disjoint;
    bool end1 = common == a || common == b;
    bool end2 = common == c || common == d;
    if (end1 && end2) return SegRelation::shared_endpoint_only;
    return SegRelation::improper_touch;
}

struct HullResult {
    std::vector<Point> vertices;  // hull corners, counterclockwise
    std::vector<Point> on_edge;   // inputs on the boundary that are not corners
    std::vector<Point> interior;  // everything else
};

// Andrew monotone chain; degenerate inputs give a segment or a point.
inline HullResult convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    HullResult res;
    if (pts.size() <= 1) { res.vertices = pts; return res; }

    auto chain = [&](bool upper) {
        std::vector<Point> h;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const Point& p = pts[upper ? pts.size() - 1 - k : k];
            while (h.size() >= 2 && orient(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
            h.push_back(p);
        }
        return h;
    };
    std::vector<Point> lo = chain(false), hi = chain(true);
    res.vertices = lo;
    res.vertices.pop_back();
    res.vertices.insert(res.vertices.end(), hi.begin(), hi.end() - 1);

    // Collinear input collapses to the two extremes; the rest sits on that edge.
    auto is_vertex = [&](const Point& p) {
        return std::find(res.vertices.begin(), res.vertices.end(), p) != res.vertices.end();
    };
    std::size_t m = res.vertices.size();
    for (const Point& p : pts) {
        if (is_vertex(p)) continue;
        bool onb = false;
        for (std::size_t i = 0; i < m && !onb; ++i)
            onb = on_segment(p, res.vertices[i], res.vertices[(i + 1) % m]);
        (onb ? res.on_edge : res.interior).push_back(p);
    }
    return res;
}

enum class PositionClass { collinear, weakly_convex, general };

inline const char* to_string(PositionClass c) {
    switch (c) {
        case PositionClass::collinear: return "collinear";
        case PositionClass::weakly_convex: return "weakly_convex";
        case PositionClass::general: return "general";
    }
    return "?";
}

inline bool all_collinear(const std::vector<Point>& pts) {
    if (pts.size() <= 2) return true;
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (orient(pts[0], pts[1], pts[i]) != 0) return false;
    return true;
}

// collinear if all on one line; weakly_convex if all on the hull boundary; else general
inline PositionClass position_class(const std::vector<Point>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("position_class wants >= 2 points");
    if (all_collinear(pts)) return PositionClass::collinear;
    HullResult h = convex_hull(pts);
    return h.interior.empty() ? PositionClass::weakly_convex : PositionClass::general;
}

// Indices of pts in cyclic order along the convex hull boundary: corners
// counterclockwise with on-edge points in place; collinear sets are read in
// coordinate order. Every point must lie on the boundary.
inline std::vector<int> boundary_cyclic_order(const std::vector<Point>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("boundary_cyclic_order wants >= 2 points");
    auto index_of = [&](const Point& p) {
        return static_cast<int>(std::find(pts.begin(), pts.end(), p) - pts.begin());
    };
    std::vector<int> order;
    if (all_collinear(pts)) {
        order.resize(pts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });
        return order;
    }
    HullResult h = convex_hull(pts);
    if (!h.interior.empty())
        throw std::invalid_argument("boundary_cyclic_order wants all points on the hull boundary");
    std::size_t m = h.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = h.vertices[i];
        const Point& b = h.vertices[(i + 1) % m];
        order.push_back(index_of(a));
        std::vector<std::pair<Rat, int>> mid;
        for (const Point& p : h.on_edge)
            if (strictly_inside_segment(p, a, b)) mid.emplace_back(dot(p - a, b - a), index_of(p));
        std::sort(mid.begin(), mid.end());
        for (const auto& [t, idx] : mid) order.push_back(idx);
    }
    return order;
}

// Pairwise-distinct point list; the standard validated input for the modules above.
inline void require_distinct(const std::vector<Point>& pts) {
    std::vector<Point> s = pts;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("points must be pairwise distinct");
}

} // namespace untangle
