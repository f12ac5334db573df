#pragma once

// Constructive untangling: the exact one-free-vertex extension decision, a
// fix oracle combining exact regimes with sound cell-sampling search, the
// collinear-reduction transform (project, untangle on a line, reinflate with
// an exact affine map), and the clustered redrawing of star forests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrangement.hpp"
#include "clustering.hpp"
#include "geometry.hpp"
#include "graphs.hpp"
#include "rng.hpp"

namespace untangle::untangler {

namespace detail {

// plane test restricted to what is already placed; full test when all are
inline bool partial_plane_ok(const graphs::Graph& g, const std::vector<std::optional<Point>>& pos) {
    std::vector<Point> placed;
    for (const auto& p : pos)
        if (p) placed.push_back(*p);
    std::sort(placed.begin(), placed.end());
    if (std::adjacent_find(placed.begin(), placed.end()) != placed.end()) return false;

    const auto& E = g.edges;
    int m = static_cast<int>(E.size());
    for (int i = 0; i < m; ++i) {
        auto [a, b] = E[i];
        if (!pos[a] || !pos[b]) continue;
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = E[j];
            if (!pos[c] || !pos[d]) continue;
            bool share = (a == c || a == d || b == c || b == d);
            SegRelation rel = segments_relation(*pos[a], *pos[b], *pos[c], *pos[d]);
            if (share ? rel != SegRelation::shared_endpoint_only : rel != SegRelation::disjoint)
                return false;
        }
        for (int v = 0; v < g.n; ++v) {
            if (v == a || v == b || !pos[v]) continue;
            if (on_segment(*pos[v], *pos[a], *pos[b])) return false;
        }
    }
    return true;
}

// candidate positions: one representative per cell of the arrangement of the
// placed points; bounded cells first so compact completions are found first
inline std::vector<Point> candidate_points(const std::vector<Point>& placed) {
    if (placed.empty()) return {Point{0, 0}};
    if (placed.size() == 1)
        return {placed[0] + Point{1, 0}, placed[0] + Point{0, 1}, placed[0] + Point{1, 1}};
    Arrangement arr = build_arrangement(placed);
    std::vector<Point> out;
    out.reserve(arr.faces.size() + arr.edges.size() + arr.vertices.size());
    for (const auto& f : arr.faces)
        if (f.bounded) out.push_back(f.rep);
    for (const auto& e : arr.edges)
        if (e.bounded) out.push_back(e.rep);
    for (const auto& f : arr.faces)
        if (!f.bounded) out.push_back(f.rep);
    for (const auto& e : arr.edges)
        if (!e.bounded) out.push_back(e.rep);
    for (const auto& v : arr.vertices) out.push_back(v);
    return out;
}

} // namespace detail

// Exact decision with one free vertex: cells of the arrangement of all lines
// through pairs of placed points are tested by representative; the plane
// predicate is constant on each cell, so feasibility cannot hide elsewhere.
inline std::optional<Point> extend_single_free(const graphs::Graph& g,
                                               const std::vector<std::optional<Point>>& partial) {
    if (static_cast<int>(partial.size()) != g.n)
        throw std::invalid_argument("extend_single_free wants one slot per vertex");
    int free_v = -1;
    std::vector<Point> placed;
    for (int v = 0; v < g.n; ++v) {
        if (!partial[v]) {
            if (free_v != -1) throw std::invalid_argument("extend_single_free wants exactly one free vertex");
            free_v = v;
        } else {
            placed.push_back(*partial[v]);
        }
    }
    if (free_v == -1) throw std::invalid_argument("extend_single_free wants exactly one free vertex");
    require_distinct(placed);

    std::vector<std::optional<Point>> pos = partial;
    for (const Point& cand : detail::candidate_points(placed)) {
        bool clash = false;
        for (const Point& q : placed)
            if (cand == q) {
                clash = true;
                break;
            }
        if (clash) continue;
        pos[free_v] = cand;
        if (detail::partial_plane_ok(g, pos)) return cand;
    }
    return std::nullopt;
}

namespace detail {

// sound recursive search: free vertices placed one at a time on cell
// representatives of the current arrangement; exact single-free step last
inline bool place_free_rec(const graphs::Graph& g, std::vector<std::optional<Point>>& pos,
                           const std::vector<int>& free, std::size_t idx, std::uint64_t& budget) {
    if (idx == free.size()) return partial_plane_ok(g, pos);
    if (idx + 1 == free.size()) {
        if (budget == 0) return false;
        --budget;
        if (auto p = extend_single_free(g, pos)) {
            pos[free[idx]] = *p;
            return true;
        }
        return false;
    }
    int v = free[idx];
    std::vector<Point> placed;
    for (const auto& p : pos)
        if (p) placed.push_back(*p);
    for (const Point& cand : candidate_points(placed)) {
        if (budget == 0) return false;
        --budget;
        bool clash = false;
        for (const Point& q : placed)
            if (cand == q) {
                clash = true;
                break;
            }
        if (clash) continue;
        pos[v] = cand;
        if (partial_plane_ok(g, pos) && place_free_rec(g, pos, free, idx + 1, budget)) return true;
        pos[v] = std::nullopt;
    }
    return false;
}

inline bool random_place(const graphs::Graph& g, std::vector<std::optional<Point>>& pos,
                         const std::vector<int>& free, int tries, Rng& rng,
                         const Point& lo, const Point& hi) {
    auto frac = [&] { return Rat(Int(rng.below(8192) + 1), Int(8193)); };
    for (int t = 0; t < tries; ++t) {
        for (int v : free) {
            Rat x = lo.x + frac() * (hi.x - lo.x);
            Rat y = lo.y + frac() * (hi.y - lo.y);
            pos[v] = Point{x, y};
        }
        if (partial_plane_ok(g, pos)) return true;
        for (int v : free) pos[v] = std::nullopt;
    }
    return false;
}

} // namespace detail

struct FixOptions {
    int max_free = 8;               // cell search allowed up to this many free vertices
    std::uint64_t budget = 300'000; // total candidate attempts across the search
    int random_tries = 40;          // randomized fallback placements per subset
    std::uint64_t seed = 12345;
};

struct FixInterval {
    int lower = 0, upper = 0;
    std::optional<graphs::Drawing> witness; // plane, fixes >= lower vertices
    bool exact() const { return lower == upper; }
};

// Max number of fixable vertices: exact plane test at size n, exact
// one-free-vertex regime at n-1, then a sound descending search over fixed
// subsets. The interval never overclaims: upper drops below n-1 only by
// exhaustion of the exact regimes.
inline FixInterval fix_oracle(const graphs::Drawing& pi, const FixOptions& opt = {}) {
    pi.validate();
    const graphs::Graph& g = pi.graph;
    int n = g.n;
    if (n >= 5 && !graphs::is_planar(g)) throw std::invalid_argument("fix_oracle wants a planar graph");

    FixInterval out;
    out.upper = n;
    if (graphs::is_plane_drawing(pi).plane) {
        out.lower = n;
        out.witness = pi;
        return out;
    }
    out.upper = n - 1;
    for (int v = 0; v < n; ++v) {
        std::vector<std::optional<Point>> partial(pi.placement.begin(), pi.placement.end());
        partial[v] = std::nullopt;
        if (auto p = extend_single_free(g, partial)) {
            out.lower = n - 1;
            graphs::Drawing w = pi;
            w.placement[v] = *p;
            out.witness = std::move(w);
            return out;
        }
    }
    out.upper = n - 2;

    Point lo = pi.placement[0], hi = pi.placement[0];
    for (const Point& p : pi.placement) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    lo = lo + Point{-1, -1};
    hi = hi + Point{1, 1};

    std::uint64_t budget = opt.budget;
    Rng rng(opt.seed);
    for (int s = n - 2; s >= 0; --s) {
        std::vector<char> take(n, 0);
        std::fill(take.begin(), take.begin() + s, 1);
        do {
            std::vector<std::optional<Point>> pos(n);
            std::vector<int> free;
            for (int v = 0; v < n; ++v) {
                if (take[v]) pos[v] = pi.placement[v];
                else free.push_back(v);
            }
            if (!detail::partial_plane_ok(g, pos)) continue;
            bool found = false;
            if (static_cast<int>(free.size()) <= opt.max_free && budget > 0)
                found = detail::place_free_rec(g, pos, free, 0, budget);
            if (!found && opt.random_tries > 0)
                found = detail::random_place(g, pos, free, opt.random_tries, rng, lo, hi);
            if (found) {
                out.lower = s;
                graphs::Drawing w;
                w.graph = g;
                w.placement.resize(n);
                for (int v = 0; v < n; ++v) w.placement[v] = *pos[v];
                out.witness = std::move(w);
                return out;
            }
        } while (std::prev_permutation(take.begin(), take.end()));
    }
    return out; // lower 0 without witness: nothing found within budget
}

namespace detail {

// rational r with 0 < r*r <= d2 (floor-sqrt based)
inline Rat sqrt_lower(const Rat& d2) {
    if (d2 <= 0) throw std::invalid_argument("sqrt_lower wants a positive value");
    Int p = boost::multiprecision::numerator(d2);
    Int q = boost::multiprecision::denominator(d2);
    Int root = boost::multiprecision::sqrt(Int(p * q));
    return Rat(root, q); // (root/q)^2 <= p*q/q^2 = d2, and root >= 1
}

inline Rat point_segment_d2(const Point& p, const Point& a, const Point& b) {
    if (a == b) return norm2(p - a);
    Rat t = dot(p - a, b - a) / norm2(b - a);
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point proj = a + t * (b - a);
    return norm2(p - proj);
}

inline Rat segment_d2(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rat best = point_segment_d2(a, c, d);
    best = std::min(best, point_segment_d2(b, c, d));
    best = std::min(best, point_segment_d2(c, a, b));
    best = std::min(best, point_segment_d2(d, a, b));
    return best;
}

} // namespace detail

// maps x-coordinates of a collinear drawing to a plane drawing of the graph
using CollinearUntangler =
    std::function<std::vector<Point>(const graphs::Graph&, const std::vector<Rat>&)>;

struct CollinearReduction {
    graphs::Drawing drawing; // plane, in the original coordinates
    std::vector<int> fixed;  // F: vertices the line untangler left in place
    Rat epsilon;             // final flattening parameter (rotated coordinates)
};

// Project the drawing injectively onto a line (exact rational rotation when
// needed), untangle there, and reinflate: vertices the line untangler kept
// become exactly fixed, everything stays rational, and the result is plane.
inline CollinearReduction collinear_reduce(const graphs::Drawing& pi, const CollinearUntangler& unt) {
    pi.validate();
    const graphs::Graph& g = pi.graph;
    int n = g.n;

    // rotation M_q = [[q,-1],[1,q]] collapses only pairs of slope q; only
    // finitely many directions collapse anything, so scanning q terminates
    Rat ra = 1, rb = 0, rc = 0, rd = 1;
    for (Int q = 1;; ++q) {
        std::vector<Rat> xs;
        xs.reserve(n);
        for (const Point& p : pi.placement) xs.push_back(ra * p.x + rb * p.y);
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) == xs.end()) break;
        ra = Rat(q);
        rb = -1;
        rc = 1;
        rd = Rat(q);
    }
    Rat det = ra * rd - rb * rc;
    auto rot = [&](const Point& p) { return Point{ra * p.x + rb * p.y, rc * p.x + rd * p.y}; };
    auto unrot = [&](const Point& p) {
        return Point{(rd * p.x - rb * p.y) / det, (ra * p.y - rc * p.x) / det};
    };

    std::vector<Point> rp(n);
    for (int v = 0; v < n; ++v) rp[v] = rot(pi.placement[v]);
    Rat ylo = rp[0].y, yhi = rp[0].y;
    for (const Point& p : rp) {
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    Rat ymid = (ylo + yhi) / 2;
    Rat yscale = yhi > ylo ? 2 * (yhi - ylo) : Rat(1);
    auto tfwd = [&](const Point& p) { return Point{p.x, Rat(1, 2) + (p.y - ymid) / yscale}; };
    auto tbwd = [&](const Point& p) { return Point{p.x, ymid + (p.y - Rat(1, 2)) * yscale}; };

    std::vector<Point> tp(n); // normalized drawing: distinct x, y in [1/4, 3/4]
    std::vector<Rat> lambda(n);
    for (int v = 0; v < n; ++v) {
        tp[v] = tfwd(rp[v]);
        lambda[v] = tp[v].x;
    }

    std::vector<Point> lp = unt(g, lambda);
    if (static_cast<int>(lp.size()) != n)
        throw std::invalid_argument("collinear untangler returned a wrong-size placement");
    graphs::Drawing check;
    check.graph = g;
    check.placement = lp;
    if (!graphs::is_plane_drawing(check).plane)
        throw std::invalid_argument("collinear untangler output is not plane");

    std::vector<int> F;
    for (int v = 0; v < n; ++v)
        if (lp[v] == Point{lambda[v], 0}) F.push_back(v);
    std::vector<char> in_f(n, 0);
    for (int v : F) in_f[v] = 1;

    // flattening margin: a third of the closest approach of disjoint edges
    Rat eps = 1;
    {
        bool have = false;
        Rat d2min = 0;
        const auto& E = g.edges;
        for (std::size_t i = 0; i < E.size(); ++i)
            for (std::size_t j = i + 1; j < E.size(); ++j) {
                auto [a, b] = E[i];
                auto [c, d] = E[j];
                if (segments_relation(lp[a], lp[b], lp[c], lp[d]) != SegRelation::disjoint) continue;
                Rat d2 = detail::segment_d2(lp[a], lp[b], lp[c], lp[d]);
                if (!have || d2 < d2min) {
                    have = true;
                    d2min = d2;
                }
            }
        if (have) eps = detail::sqrt_lower(d2min) / 3;
    }

    // squashed drawing: fixed vertices drop to height eps*y over their line
    // spot, movers take the untangler's positions; plane for small enough eps
    for (int tries = 0; tries < 64; ++tries, eps /= 4) {
        std::vector<Point> squashed(n);
        for (int v = 0; v < n; ++v)
            squashed[v] = in_f[v] ? Point{tp[v].x, eps * tp[v].y} : lp[v];
        std::set<Point> uniq(squashed.begin(), squashed.end());
        if (uniq.size() != squashed.size()) continue;
        graphs::Drawing flat;
        flat.graph = g;
        flat.placement = squashed;
        if (!graphs::is_plane_drawing(flat).plane) continue;

        // unsquash and undo the normalization; both maps are affine with
        // positive determinant, so plane-ness carries over exactly
        CollinearReduction out;
        out.drawing.graph = g;
        out.drawing.placement.resize(n);
        for (int v = 0; v < n; ++v) {
            Point a{squashed[v].x, squashed[v].y / eps};
            out.drawing.placement[v] = unrot(tbwd(a));
        }
        out.fixed = F;
        out.epsilon = eps;
        return out;
    }
    throw std::runtime_error("collinear_reduce could not reinflate the drawing");
}

// Naive exhaustive line untangler at desk scale: runs the fix oracle on the
// drawing placed along the x axis and returns its witness.
inline std::vector<Point> naive_collinear_untangler(const graphs::Graph& g,
                                                    const std::vector<Rat>& xs) {
    if (g.n > 8) throw std::invalid_argument("naive_collinear_untangler caps at 8 vertices");
    if (static_cast<int>(xs.size()) != g.n)
        throw std::invalid_argument("naive_collinear_untangler wants one coordinate per vertex");
    graphs::Drawing d;
    d.graph = g;
    d.placement.reserve(g.n);
    for (const Rat& x : xs) d.placement.push_back(Point{x, 0});
    FixOptions opt;
    opt.random_tries = 60;
    FixInterval res = fix_oracle(d, opt);
    if (!res.witness) throw std::runtime_error("naive_collinear_untangler found no plane drawing");
    return res.witness->placement;
}

// Redraw a star forest around a clustered subset Y: non-central vertices of Y
// stay put, each star is confined to a small neighborhood of its part's hull
// (neighborhood radius a third of the closest hull distance), stars without a
// part move to separate far slots. Fixes at least |Y| - k vertices.
inline graphs::Drawing stars_cluster_untangler(const graphs::Drawing& pi, const std::vector<int>& Y) {
    pi.validate();
    int n = pi.graph.n;
    int k = 0;
    while (k * k < n) ++k;
    if (k < 1 || k * k != n || pi.graph != graphs::star_forest(k))
        throw std::invalid_argument("stars_cluster_untangler wants a star forest drawing");

    clustering::Coloring classes(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) classes[i].push_back(i * k + j);
    if (!clustering::is_clustered(pi.placement, classes, Y))
        throw std::invalid_argument("stars_cluster_untangler wants a clustered subset");

    std::vector<std::vector<int>> ys(k);
    for (int v : Y) ys[v / k].push_back(v);

    std::vector<std::vector<Point>> hulls(k);
    for (int i = 0; i < k; ++i) {
        if (ys[i].empty()) continue;
        std::vector<Point> pts;
        for (int v : ys[i]) pts.push_back(pi.placement[v]);
        hulls[i] = convex_hull(pts).vertices;
    }

    Rat delta = 1;
    {
        bool have = false;
        Rat d2min = 0;
        auto edges_of = [](const std::vector<Point>& h) {
            std::vector<std::pair<Point, Point>> out;
            if (h.size() >= 2)
                for (std::size_t i = 0; i < (h.size() == 2 ? 1 : h.size()); ++i)
                    out.emplace_back(h[i], h[(i + 1) % h.size()]);
            return out;
        };
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                if (hulls[i].empty() || hulls[j].empty()) continue;
                Rat best = 0;
                bool first = true;
                auto ei = edges_of(hulls[i]), ej = edges_of(hulls[j]);
                for (const Point& p : hulls[i]) {
                    for (const auto& [c, d] : ej) {
                        Rat d2 = detail::point_segment_d2(p, c, d);
                        if (first || d2 < best) { first = false; best = d2; }
                    }
                    for (const Point& q : hulls[j]) {
                        Rat d2 = norm2(p - q);
                        if (first || d2 < best) { first = false; best = d2; }
                    }
                }
                for (const Point& q : hulls[j])
                    for (const auto& [a, b] : ei) {
                        Rat d2 = detail::point_segment_d2(q, a, b);
                        if (first || d2 < best) { first = false; best = d2; }
                    }
                if (!have || best < d2min) { have = true; d2min = best; }
            }
        if (have) delta = detail::sqrt_lower(d2min) / 3;
    }

    Point lo = pi.placement[0], hi = pi.placement[0];
    for (const Point& p : pi.placement) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }

    // local plane test of one star's edges under a candidate placement
    auto star_ok = [&](const std::vector<Point>& leaf_pts, const Point& c) {
        for (const Point& l : leaf_pts)
            if (l == c) return false;
        for (std::size_t a = 0; a < leaf_pts.size(); ++a)
            for (std::size_t b = a + 1; b < leaf_pts.size(); ++b) {
                if (leaf_pts[a] == leaf_pts[b]) return false;
                SegRelation rel = segments_relation(c, leaf_pts[a], c, leaf_pts[b]);
                if (rel != SegRelation::shared_endpoint_only) return false;
            }
        return true;
    };

    for (int tries = 0; tries < 40; ++tries, delta /= 4) {
        std::vector<Point> place(n);
        std::vector<char> done(n, 0);
        bool failed = false;
        int far_slot = 0;
        Rat slot_w = hi.x - lo.x + k + 3;

        for (int i = 0; i < k && !failed; ++i) {
            int center = i * k + k - 1;
            if (ys[i].empty()) {
                Rat bx = hi.x + delta + 1 + slot_w * far_slot++;
                place[center] = Point{bx, lo.y};
                int j = 0;
                for (int v = i * k; v < i * k + k - 1; ++v, ++j)
                    place[v] = Point{bx + 1, lo.y + j + 1};
                for (int v = i * k; v <= center; ++v) done[v] = 1;
                continue;
            }
            Point anchor = pi.placement[ys[i][0]];
            std::vector<Point> fixed_leaves;
            for (int v : ys[i])
                if (v != center) {
                    place[v] = pi.placement[v];
                    done[v] = 1;
                    fixed_leaves.push_back(place[v]);
                }

            // center: keep it when it is in Y and already works, else probe
            // nearby points inside the delta box around the anchor
            std::optional<Point> cpos;
            bool center_in_y = std::find(ys[i].begin(), ys[i].end(), center) != ys[i].end();
            if (center_in_y && star_ok(fixed_leaves, pi.placement[center])) cpos = pi.placement[center];
            for (int num = 1; !cpos && num <= 200; ++num) {
                Point cand = anchor + Point{delta * Rat(num % 13 + 1, 29), delta * Rat(num, 2 * (num + 3) * 7)};
                if (rat_abs(cand.x - anchor.x) >= delta || rat_abs(cand.y - anchor.y) >= delta) continue;
                if (star_ok(fixed_leaves, cand)) cpos = cand;
            }
            if (!cpos) {
                failed = true;
                break;
            }
            place[center] = *cpos;
            done[center] = 1;

            // stray leaves: own direction each, tiny radius, inside the box
            std::vector<Point> leaves = fixed_leaves;
            int e = 0;
            for (int v = i * k; v < i * k + k - 1 && !failed; ++v) {
                if (done[v]) continue;
                bool placed_leaf = false;
                for (int num = 1; num <= 300 && !placed_leaf; ++num) {
                    Point dir{1, Rat(2 * (e + 1) * 17 + num, 1 + num % 7 + 300 * (e + 1))};
                    Rat rad = delta / (8 + 8 * e + num);
                    Point cand = *cpos + rad * dir;
                    if (rat_abs(cand.x - anchor.x) >= delta || rat_abs(cand.y - anchor.y) >= delta) continue;
                    std::vector<Point> trial = leaves;
                    trial.push_back(cand);
                    if (star_ok(trial, *cpos)) {
                        place[v] = cand;
                        done[v] = 1;
                        leaves = std::move(trial);
                        placed_leaf = true;
                    }
                }
                failed = failed || !placed_leaf;
                ++e;
            }
        }
        if (failed) continue;

        graphs::Drawing out;
        out.graph = pi.graph;
        out.placement = place;
        std::set<Point> uniq(place.begin(), place.end());
        if (uniq.size() != place.size()) continue;
        if (graphs::is_plane_drawing(out).plane) return out;
    }
    throw std::runtime_error("stars_cluster_untangler could not realize the redrawing");
}

} // namespace untangle::untangler
