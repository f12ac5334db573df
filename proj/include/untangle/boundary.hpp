#pragma once

// Convex polygon boundary with exact arc-length comparison (sums of square
// roots compared symbolically), colored arrows, and the quiver construction:
// the arrow from a boundary point v toward an outside standpoint p, headed at
// the second boundary crossing.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrangement.hpp"
#include "geometry.hpp"
#include "rational.hpp"

namespace untangle {

enum class ArrowColor { red, blue, median };

inline const char* to_string(ArrowColor c) {
    switch (c) {
        case ArrowColor::red: return "red";
        case ArrowColor::blue: return "blue";
        case ArrowColor::median: return "median";
    }
    return "?";
}

struct Arrow {
    Point tail, head;
};

class Boundary {
  public:
    explicit Boundary(std::vector<Point> poly) : poly_(std::move(poly)) {
        int n = static_cast<int>(poly_.size());
        if (n < 3) throw std::invalid_argument("boundary wants at least 3 vertices");
        for (int i = 0; i < n; ++i)
            if (orient(poly_[i], poly_[(i + 1) % n], poly_[(i + 2) % n]) <= 0)
                throw std::invalid_argument("boundary wants strictly convex counter-clockwise vertices");
        side_sq_.reserve(n);
        for (int i = 0; i < n; ++i) side_sq_.push_back(norm2(poly_[(i + 1) % n] - poly_[i]));
    }

    const std::vector<Point>& polygon() const { return poly_; }
    int sides() const { return static_cast<int>(poly_.size()); }
    const Point& vertex(int i) const { return poly_[i % poly_.size()]; }

    struct Location {
        int side;
        Rat t; // in [0,1) along the side
    };

    std::optional<Location> locate(const Point& p) const {
        int n = sides();
        for (int i = 0; i < n; ++i)
            if (p == poly_[i]) return Location{i, 0};
        for (int i = 0; i < n; ++i) {
            const Point& a = poly_[i];
            const Point& b = poly_[(i + 1) % n];
            if (on_segment(p, a, b)) return Location{i, dot(p - a, b - a) / norm2(b - a)};
        }
        return std::nullopt;
    }

    bool on_boundary(const Point& p) const { return locate(p).has_value(); }

    bool strictly_outside(const Point& p) const {
        int n = sides();
        for (int i = 0; i < n; ++i)
            if (orient(poly_[i], poly_[(i + 1) % n], p) < 0) return true;
        return false;
    }

    SqrtSum perimeter() const {
        SqrtSum s;
        for (const Rat& q : side_sq_) s.add(1, q);
        return s;
    }

    // length of the counter-clockwise walk from a to b; both must lie on the boundary
    SqrtSum arc_ccw(const Point& a, const Point& b) const {
        auto la = locate(a), lb = locate(b);
        if (!la || !lb) throw std::invalid_argument("arc endpoints must lie on the boundary");
        SqrtSum s;
        if (la->side == lb->side && la->t <= lb->t) {
            s.add(lb->t - la->t, side_sq_[la->side]);
            return s;
        }
        s.add(1 - la->t, side_sq_[la->side]);
        int n = sides();
        for (int i = (la->side + 1) % n; i != lb->side; i = (i + 1) % n) s.add(1, side_sq_[i]);
        s.add(lb->t, side_sq_[lb->side]);
        return s;
    }

  private:
    std::vector<Point> poly_;
    std::vector<Rat> side_sq_;
};

// median when both ways around are equally long; red when the shorter way from
// tail to head runs clockwise; blue otherwise
inline ArrowColor arrow_color(const Arrow& a, const Boundary& g) {
    if (a.tail == a.head) throw std::invalid_argument("arrow wants distinct endpoints");
    SqrtSum ccw = g.arc_ccw(a.tail, a.head);
    SqrtSum cw = g.perimeter();
    cw.add(ccw, -1);
    int cmp = cw.compare(ccw);
    if (cmp == 0) return ArrowColor::median;
    return cmp < 0 ? ArrowColor::red : ArrowColor::blue;
}

// Arrow from v on the boundary toward the outside standpoint p: head at the
// second crossing of segment v-p with the boundary; none when the segment
// leaves immediately; collinear contact with a side is a degeneracy error.
inline std::optional<Arrow> quiver_arrow(const Point& p, const Point& v, const Boundary& g) {
    if (!g.on_boundary(v)) throw std::invalid_argument("quiver_arrow wants v on the boundary");
    if (!g.strictly_outside(p)) throw std::invalid_argument("quiver_arrow wants p strictly outside");
    int n = g.sides();
    std::set<Point> hits;
    for (int i = 0; i < n; ++i) {
        const Point& a = g.vertex(i);
        const Point& b = g.vertex(i + 1);
        if (orient(a, b, v) == 0 && orient(a, b, p) == 0) {
            if (segments_relation(v, p, a, b) != SegRelation::disjoint)
                throw std::invalid_argument("quiver_arrow degenerate: segment collinear with a side");
            continue;
        }
        if (segments_relation(v, p, a, b) == SegRelation::disjoint) continue;
        auto q = line_intersection(line_through(v, p), line_through(a, b));
        hits.insert(*q);
    }
    if (hits.size() == 1) return std::nullopt;
    if (hits.size() != 2) throw std::invalid_argument("quiver_arrow degenerate: more than two boundary points");
    for (const Point& h : hits)
        if (h != v) return Arrow{v, h};
    return std::nullopt; // unreachable: one of the two hits is v
}

} // namespace untangle
