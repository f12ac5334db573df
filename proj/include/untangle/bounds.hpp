#pragma once

// Upper bounds on how many vertices any plane redrawing can keep fixed, per
// adversarial family: wheels (longest circular monotone subsequence over all
// visibility classes), fans (best two-part monotone decomposition), star
// forests on collinear and weakly convex point sets (alternation-free caps),
// and H_n (largest clustered subset plus one exceptional group).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adversary.hpp"
#include "boundary.hpp"
#include "clustering.hpp"
#include "geometry.hpp"
#include "graphs.hpp"
#include "sequences.hpp"
#include "visibility.hpp"

namespace untangle::bounds {

struct BoundReport {
    std::string family;
    int value = 0;
    std::vector<std::pair<std::string, int>> decomposition;
    std::optional<Point> standpoint;          // maximizing standpoint, when applicable
    std::optional<std::pair<int, int>> split; // maximizing two-part cut, fans only
    std::vector<int> witness_subset;          // maximizing clustered subset, hn only
    bool caps_exact = true;                   // all ingredient searches closed
};

// 1 for the hub plus, over every visibility standpoint of the rim points,
// the longest circular monotone subsequence of rim labels in seeing order
inline BoundReport wheel_upper(const graphs::Drawing& pi) {
    int n = pi.graph.n;
    if (n < 4 || pi.graph != graphs::wheel_graph(n))
        throw std::invalid_argument("wheel_upper wants a wheel drawing");
    pi.validate();
    std::vector<Point> rim(pi.placement.begin(), pi.placement.end() - 1);
    BoundReport rep;
    rep.family = "wheel";
    int best = 0;
    for (const Point& p : standpoint_representatives(rim)) {
        int v = sequences::longest_circular_monotone(visibility_permutation(p, rim));
        if (v > best) {
            best = v;
            rep.standpoint = p;
        }
    }
    rep.decomposition = {{"hub", 1}, {"rim_monotone", best}};
    rep.value = 1 + best;
    return rep;
}

// 1 for the center plus the best two-part monotone decomposition of the path
// labels in seeing order, over every visibility standpoint
inline BoundReport fan_upper(const graphs::Drawing& pi) {
    int n = pi.graph.n;
    if (n < 3 || pi.graph != graphs::fan_graph(n))
        throw std::invalid_argument("fan_upper wants a fan drawing");
    pi.validate();
    std::vector<Point> path(pi.placement.begin(), pi.placement.end() - 1);
    BoundReport rep;
    rep.family = "fan";
    int best = 0;
    for (const Point& p : standpoint_representatives(path)) {
        auto s = sequences::l2_with_split(visibility_permutation(p, path));
        if (s.value > best) {
            best = s.value;
            rep.standpoint = p;
            rep.split = std::make_pair(s.i, s.j);
        }
    }
    rep.decomposition = {{"center", 1}, {"path_l2", best}};
    rep.value = 1 + best;
    return rep;
}

namespace detail {

inline int exact_sqrt(int n) {
    int k = 0;
    while (k * k < n) ++k;
    return k * k == n ? k : -1;
}

} // namespace detail

// centers cap k, edge-of-line cap 2k, and two alternation-free caps over the
// k-symbol stride pattern; total below 7k
inline BoundReport stars_collinear_upper(const graphs::Drawing& pi,
                                         std::uint64_t budget = 200'000'000) {
    int k = detail::exact_sqrt(pi.graph.n);
    if (k < 2 || pi.graph != graphs::star_forest(k))
        throw std::invalid_argument("stars_collinear_upper wants a star forest drawing, k >= 2");
    pi.validate();
    auto expected = adversary::stars_collinear_adversary(pi.placement, k);
    if (expected.placement != pi.placement)
        throw std::invalid_argument("stars_collinear_upper wants the adversarial stride placement");
    auto cap = sequences::max_alternation_free_subsequence(sequences::block_sequence(k, k - 1), 2, budget);
    BoundReport rep;
    rep.family = "stars_collinear";
    rep.decomposition = {
        {"E_centers", k}, {"D_extremes", 2 * k}, {"A_before", cap.upper}, {"B_after", cap.upper}};
    rep.value = 3 * k + 2 * cap.upper;
    rep.caps_exact = cap.exact();
    return rep;
}

// k for the centers, two xyxy-free caps, and two xyxyxy-free caps over the
// interweaving pattern; when the points are collinear the stride bound also
// applies and the smaller value is reported
inline BoundReport stars_weakly_convex_upper(const graphs::Drawing& pi, const Boundary& gamma,
                                             std::uint64_t budget = 200'000'000) {
    int k = detail::exact_sqrt(pi.graph.n);
    if (k < 2 || pi.graph != graphs::star_forest(k))
        throw std::invalid_argument("stars_weakly_convex_upper wants a star forest drawing, k >= 2");
    pi.validate();
    for (const Point& p : pi.placement)
        if (!gamma.on_boundary(p))
            throw std::invalid_argument("stars_weakly_convex_upper wants all points on the boundary");

    // adversarial form: star components must interweave along the boundary
    auto cyc = boundary_cyclic_order(pi.placement);
    int n = k * k;
    bool fwd = true, bwd = true;
    for (int p = 0; p < n; ++p) {
        int c0 = cyc[p] / k, c1 = cyc[(p + 1) % n] / k;
        fwd = fwd && c1 == (c0 + 1) % k;
        bwd = bwd && c0 == (c1 + 1) % k;
    }
    if (!fwd && !bwd)
        throw std::invalid_argument("stars_weakly_convex_upper wants the interweaving placement");

    auto S = sequences::block_sequence(k, k);
    auto cap2 = sequences::max_alternation_free_subsequence(S, 2, budget);
    auto cap4 = sequences::max_alternation_free_subsequence(S, 4, budget);
    BoundReport rep;
    rep.family = "stars_weakly_convex";
    rep.decomposition = {{"E_centers", k},
                         {"I_inner", cap2.upper},
                         {"O_outer", cap2.upper},
                         {"R_red", cap4.upper},
                         {"B_blue", cap4.upper}};
    rep.value = k + 2 * cap2.upper + 2 * cap4.upper;
    rep.caps_exact = cap2.exact() && cap4.exact();

    if (all_collinear(pi.placement)) {
        auto line_cap = sequences::max_alternation_free_subsequence(
            sequences::block_sequence(k, k - 1), 2, budget);
        int line_value = 3 * k + 2 * line_cap.upper;
        if (line_value < rep.value) {
            rep.value = line_value;
            rep.decomposition = {{"E_centers", k},
                                 {"D_extremes", 2 * k},
                                 {"A_before", line_cap.upper},
                                 {"B_after", line_cap.upper}};
            rep.caps_exact = line_cap.exact();
        }
    }
    return rep;
}

// largest clustered subset plus k for the one group that may keep its
// triangulation around the others
inline BoundReport hn_upper(const std::vector<Point>& X, const adversary::BalancedColoring& col,
                            const graphs::HnGraph& H, std::uint64_t budget = 50'000'000) {
    if (static_cast<int>(X.size()) != H.k * H.k || col.k != H.k)
        throw std::invalid_argument("hn_upper size mismatch");
    col.validate(static_cast<int>(X.size()));
    require_distinct(X);
    auto cs = clustering::max_clustered_subset(X, col.classes, budget);
    BoundReport rep;
    rep.family = "hn";
    rep.decomposition = {{"clustered", cs.upper}, {"exception", H.k}};
    rep.value = cs.upper + H.k;
    rep.witness_subset = cs.witness;
    rep.caps_exact = cs.exact();
    return rep;
}

} // namespace untangle::bounds
