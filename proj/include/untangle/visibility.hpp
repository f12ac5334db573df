#pragma once

// Visibility permutations: the circular order in which a point set is seen from
// a standpoint, clockwise from north, nearer point first on ties; the quotient
// set of such orders up to cyclic shift over all standpoints in the plane.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrangement.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace untangle {

using CircularOrder = std::vector<int>; // 1-based indices, read cyclically

// Clockwise-from-north order of X as seen from p; ties along a ray are listed
// nearer first; if p equals some member of X, that member comes first.
inline CircularOrder visibility_permutation(const Point& p, const std::vector<Point>& X) {
    require_distinct(X);
    CircularOrder order(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) order[i] = static_cast<int>(i) + 1;
    auto rank = [&](const Point& d) {
        if (d.x == 0 && d.y == 0) return -1; // the standpoint itself leads
        return direction_rank(d);
    };
    std::sort(order.begin(), order.end(), [&](int ia, int ib) {
        Point da = X[ia - 1] - p, db = X[ib - 1] - p;
        int ra = rank(da), rb = rank(db);
        if (ra != rb) return ra < rb;
        if (ra == -1) return false;
        int c = sign(cross(da, db));
        if (c != 0) return c < 0;
        return norm2(da) < norm2(db);
    });
    return order;
}

// canonical representative of the shift class: rotate the entry 1 to the front
inline CircularOrder canonical_shift(const CircularOrder& s) {
    auto it = std::find(s.begin(), s.end(), 1);
    if (it == s.end()) throw std::invalid_argument("canonical_shift wants an entry equal to 1");
    CircularOrder out(it, s.end());
    out.insert(out.end(), s.begin(), it);
    return out;
}

inline bool same_shift_class(const CircularOrder& a, const CircularOrder& b) {
    if (a.size() != b.size()) return false;
    return canonical_shift(a) == canonical_shift(b);
}

// One standpoint per arrangement cell (faces, edges, vertices) plus every
// member of X; visibility orders are constant on cells, so these realize
// every visibility class.
inline std::vector<Point> standpoint_representatives(const std::vector<Point>& X) {
    if (X.size() < 2) throw std::invalid_argument("standpoint_representatives wants at least 2 points");
    Arrangement arr = build_arrangement(X);
    std::vector<Point> reps;
    reps.reserve(arr.faces.size() + arr.edges.size() + arr.vertices.size() + X.size());
    for (const auto& f : arr.faces) reps.push_back(f.rep);
    for (const auto& e : arr.edges) reps.push_back(e.rep);
    for (const Point& v : arr.vertices) reps.push_back(v);
    for (const Point& x : X) reps.push_back(x);
    return reps;
}

// All visibility classes of X, realized at the standpoint representatives.
inline std::set<CircularOrder> visibility_classes(const std::vector<Point>& X) {
    std::set<CircularOrder> classes;
    for (const Point& p : standpoint_representatives(X))
        classes.insert(canonical_shift(visibility_permutation(p, X)));
    return classes;
}

// Stratified random standpoints: angular-sector points around arrangement
// vertices at random interior directions and safe radii, random rays from
// vertices, and uniform box points. Sector strata are needed to land inside
// sliver faces that uniform sampling virtually never hits.
inline std::vector<Point> sample_standpoints(const std::vector<Point>& X, int count,
                                             std::uint64_t seed) {
    Arrangement arr = build_arrangement(X);
    Rng rng(seed);
    std::vector<Point> out;
    out.reserve(count);

    Rat xlo = X[0].x, xhi = xlo, ylo = X[0].y, yhi = ylo;
    for (const Point& v : arr.vertices) {
        xlo = std::min(xlo, v.x); xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y); yhi = std::max(yhi, v.y);
    }
    for (const Point& v : X) {
        xlo = std::min(xlo, v.x); xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y); yhi = std::max(yhi, v.y);
    }
    Rat margin = 2 * std::max(xhi - xlo, yhi - ylo) + 1;

    auto frac = [&](int den_mag) { // random rational in (0,1)
        std::uint64_t q = rng.range(2, den_mag);
        std::uint64_t p = rng.range(1, q - 1 > 1 ? q - 1 : 1);
        return Rat(Int(p), Int(q));
    };

    struct Sector {
        Point v, d1, d2;
    };
    std::vector<Sector> sectors;
    const std::vector<Point>& anchors = arr.degenerate ? arr.input : arr.vertices;
    for (const Point& v : anchors) {
        std::vector<Point> dirs;
        for (const Line& l : arr.lines) {
            if (line_eval(l, v) != 0) continue;
            Point d = detail::linf_normalized(line_direction(l));
            dirs.push_back(d);
            dirs.push_back({-d.x, -d.y});
        }
        if (dirs.size() < 4) continue;
        std::sort(dirs.begin(), dirs.end(), direction_clockwise_less);
        for (std::size_t i = 0; i < dirs.size(); ++i)
            sectors.push_back({v, dirs[i], dirs[(i + 1) % dirs.size()]});
    }

    std::size_t sector_rr = 0;
    for (int i = 0; i < count; ++i) {
        std::uint64_t kind = rng.below(10);
        if (kind < 6 && !sectors.empty()) {
            const Sector& s = sectors[sector_rr++ % sectors.size()];
            Rat alpha = frac(64);
            Point dir = (1 - alpha) * s.d1 + alpha * s.d2;
            if (dir.x == 0 && dir.y == 0) dir = s.d1 + s.d2;
            if (dir.x == 0 && dir.y == 0) { out.push_back(s.v); continue; }
            Rat t = frac(64) * 2 * detail::safe_step(arr.lines, s.v, dir);
            out.push_back(s.v + t * dir);
        } else if (kind < 8 && !anchors.empty()) {
            const Point& v = anchors[rng.below(anchors.size())];
            Point dir{rng.rational(8, 8), rng.rational(8, 8)};
            if (dir.x == 0 && dir.y == 0) dir = {1, 1};
            Rat t = frac(64) * 2 * detail::safe_step(arr.lines, v, dir);
            out.push_back(v + t * dir);
        } else {
            Rat x = xlo - margin + frac(4096) * (xhi - xlo + 2 * margin);
            Rat y = ylo - margin + frac(4096) * (yhi - ylo + 2 * margin);
            out.push_back({x, y});
        }
    }
    return out;
}

// classes realized by an explicit list of standpoints
inline std::set<CircularOrder> visibility_classes_at(const std::vector<Point>& standpoints,
                                                     const std::vector<Point>& X) {
    std::set<CircularOrder> classes;
    for (const Point& p : standpoints)
        classes.insert(canonical_shift(visibility_permutation(p, X)));
    return classes;
}

} // namespace untangle
