#pragma once

// Arrangement of all lines through at least two input points: vertices, edges
// and faces, each with a representative point strictly inside its cell.
// Faces are identified by their sign vector against the line list; a face is
// unbounded exactly when it meets the perimeter of a box enclosing every
// arrangement vertex with ample margin.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"

namespace untangle {

struct Line {
    Rat a, b, c; // a*x + b*y + c = 0, leading nonzero coefficient normalized to 1
    bool operator<(const Line& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
};

inline Rat line_eval(const Line& l, const Point& p) { return l.a * p.x + l.b * p.y + l.c; }

inline Point line_direction(const Line& l) { return {-l.b, l.a}; }

inline Line line_through(const Point& p, const Point& q) {
    if (p == q) throw std::invalid_argument("line_through wants distinct points");
    Point d = q - p;
    Rat a = -d.y, b = d.x;
    Rat c = -(a * p.x + b * p.y);
    if (a != 0) { c /= a; b /= a; a = 1; }
    else { c /= b; b = 1; }
    return {a, b, c};
}

inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
    Rat det = l1.a * l2.b - l2.a * l1.b;
    if (det == 0) return std::nullopt;
    return Point{(l1.b * l2.c - l2.b * l1.c) / det, (l1.c * l2.a - l2.c * l1.a) / det};
}

// circular comparison of direction vectors, clockwise starting at north (+y)
inline int direction_rank(const Point& d) {
    if (d.x == 0) return d.y > 0 ? 0 : 2;
    return d.x > 0 ? 1 : 3;
}

inline bool direction_clockwise_less(const Point& da, const Point& db) {
    int ra = direction_rank(da), rb = direction_rank(db);
    if (ra != rb) return ra < rb;
    return sign(cross(da, db)) < 0;
}

struct Arrangement {
    std::vector<Point> input; // the defining point set
    std::vector<Line> lines;
    std::vector<Point> vertices;
    struct Edge {
        int line;
        Point rep;
        bool bounded;
    };
    struct Face {
        std::vector<int> signs; // per line, all nonzero
        Point rep;
        bool bounded;
    };
    std::vector<Edge> edges;
    std::vector<Face> faces;
    bool degenerate = false; // all input points on a single line

    long long euler_characteristic() const {
        return static_cast<long long>(vertices.size()) - static_cast<long long>(edges.size()) +
               static_cast<long long>(faces.size());
    }
};

namespace detail {

inline Point linf_normalized(const Point& d) {
    Rat m = std::max(rat_abs(d.x), rat_abs(d.y));
    return {d.x / m, d.y / m};
}

// first positive parameter at which the ray base + t*dir meets any line, halved;
// 1 when the ray meets nothing
inline Rat safe_step(const std::vector<Line>& lines, const Point& base, const Point& dir) {
    Rat best;
    bool have = false;
    for (const Line& l : lines) {
        Rat den = l.a * dir.x + l.b * dir.y;
        if (den == 0) continue;
        Rat t = -line_eval(l, base) / den;
        if (t > 0 && (!have || t < best)) { best = t; have = true; }
    }
    return have ? best / 2 : Rat(1);
}

} // namespace detail

inline Arrangement build_arrangement(const std::vector<Point>& X) {
    if (X.size() < 2) throw std::invalid_argument("build_arrangement wants at least 2 points");
    require_distinct(X);

    Arrangement arr;
    arr.input = X;

    std::set<Line> line_set;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) line_set.insert(line_through(X[i], X[j]));
    arr.lines.assign(line_set.begin(), line_set.end());
    const auto& lines = arr.lines;

    if (lines.size() == 1) {
        // every point on one line: two half-plane faces, the line itself one edge
        arr.degenerate = true;
        const Line& l = lines[0];
        std::vector<Point> sorted = X;
        Point d = line_direction(l);
        std::sort(sorted.begin(), sorted.end(),
                  [&](const Point& p, const Point& q) { return dot(p, d) < dot(q, d); });
        arr.edges.push_back({0, midpoint(sorted[0], sorted[1]), false});
        Point n{l.a, l.b};
        arr.faces.push_back({{+1}, sorted[0] + n, false});
        arr.faces.push_back({{-1}, sorted[0] - n, false});
        return arr;
    }

    std::set<Point> vert_set;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = line_intersection(lines[i], lines[j])) vert_set.insert(*p);
    arr.vertices.assign(vert_set.begin(), vert_set.end());

    Rat xlo = arr.vertices[0].x, xhi = xlo, ylo = arr.vertices[0].y, yhi = ylo;
    for (const Point& v : arr.vertices) {
        xlo = std::min(xlo, v.x); xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y); yhi = std::max(yhi, v.y);
    }
    Rat margin = 2 * std::max(xhi - xlo, yhi - ylo) + 1;

    // edges per line: segments between consecutive on-line vertices plus two rays
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const Line& l = lines[li];
        Point d = line_direction(l);
        std::vector<Point> on;
        for (const Point& v : arr.vertices)
            if (line_eval(l, v) == 0) on.push_back(v);
        std::sort(on.begin(), on.end(),
                  [&](const Point& p, const Point& q) { return dot(p, d) < dot(q, d); });
        Rat stretch = margin / std::max(rat_abs(d.x), rat_abs(d.y));
        arr.edges.push_back({static_cast<int>(li), on.front() - stretch * d, false});
        for (std::size_t i = 0; i + 1 < on.size(); ++i)
            arr.edges.push_back({static_cast<int>(li), midpoint(on[i], on[i + 1]), true});
        arr.edges.push_back({static_cast<int>(li), on.back() + stretch * d, false});
    }

    // face discovery by sampling; sign vectors identify faces uniquely
    std::map<std::vector<int>, std::size_t> face_index;
    auto offer = [&](const Point& p, bool from_perimeter) {
        std::vector<int> signs(lines.size());
        for (std::size_t i = 0; i < lines.size(); ++i) {
            signs[i] = sign(line_eval(lines[i], p));
            if (signs[i] == 0) return; // on a line, not a face point
        }
        auto it = face_index.find(signs);
        if (it == face_index.end()) {
            face_index.emplace(signs, arr.faces.size());
            arr.faces.push_back({signs, p, !from_perimeter});
        }
    };

    // box perimeter gap midpoints: every unbounded face crosses the perimeter
    {
        Point corner[4] = {{xlo - margin, ylo - margin},
                           {xhi + margin, ylo - margin},
                           {xhi + margin, yhi + margin},
                           {xlo - margin, yhi + margin}};
        std::set<Rat> events;
        for (const Line& l : lines) {
            for (int s = 0; s < 4; ++s) {
                Point a = corner[s], b = corner[(s + 1) % 4];
                Rat den = l.a * (b.x - a.x) + l.b * (b.y - a.y);
                if (den == 0) continue;
                Rat t = -line_eval(l, a) / den;
                if (t >= 0 && t <= 1) {
                    Rat param = Rat(s) + t;
                    if (param >= 4) param -= 4; // last corner equals parameter 0
                    events.insert(param);
                }
            }
        }
        std::vector<Rat> ev(events.begin(), events.end());
        auto perimeter_point = [&](Rat param) {
            if (param >= 4) param -= 4;
            int s = 0;
            while (Rat(s + 1) <= param && s < 3) ++s;
            Rat f = param - s;
            Point a = corner[s], b = corner[(s + 1) % 4];
            return a + f * (b - a);
        };
        for (std::size_t i = 0; i < ev.size(); ++i) {
            Rat next = (i + 1 < ev.size()) ? ev[i + 1] : ev[0] + 4;
            offer(perimeter_point((ev[i] + next) / 2), true);
        }
    }

    // angular sector samples around each vertex: every bounded face touches a
    // vertex, and each incident face occupies at least one sector there
    for (const Point& v : arr.vertices) {
        std::vector<Point> dirs;
        for (const Line& l : lines) {
            if (line_eval(l, v) != 0) continue;
            Point d = detail::linf_normalized(line_direction(l));
            dirs.push_back(d);
            dirs.push_back({-d.x, -d.y});
        }
        std::sort(dirs.begin(), dirs.end(), direction_clockwise_less);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            Point dir = dirs[i] + dirs[(i + 1) % dirs.size()];
            offer(v + detail::safe_step(lines, v, dir) * dir, false);
        }
    }

    return arr;
}

} // namespace untangle
