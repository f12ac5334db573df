#pragma once

// Clustered subsets: monochromatic parts whose closed convex hulls are
// pairwise disjoint. Exact hull-disjointness tests, branch-and-bound
// maximization with witness, coloring-wide estimates, and tiny-scale
// crossing-free partition counting.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace untangle::clustering {

using Coloring = std::vector<std::vector<int>>; // class -> point indices

namespace detail {

inline bool point_in_hull(const Point& p, const std::vector<Point>& h) {
    if (h.empty()) return false;
    if (h.size() == 1) return p == h[0];
    if (h.size() == 2) return on_segment(p, h[0], h[1]);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (orient(h[i], h[(i + 1) % h.size()], p) < 0) return false;
    return true;
}

inline std::vector<std::pair<Point, Point>> hull_edges(const std::vector<Point>& h) {
    std::vector<std::pair<Point, Point>> out;
    if (h.size() == 2) out.emplace_back(h[0], h[1]);
    else if (h.size() >= 3)
        for (std::size_t i = 0; i < h.size(); ++i) out.emplace_back(h[i], h[(i + 1) % h.size()]);
    return out;
}

// closed hulls share no point: no vertex containment and no edge contact
inline bool hull_vertices_disjoint(const std::vector<Point>& ha, const std::vector<Point>& hb) {
    for (const Point& p : ha)
        if (point_in_hull(p, hb)) return false;
    for (const Point& q : hb)
        if (point_in_hull(q, ha)) return false;
    for (const auto& [a, b] : hull_edges(ha))
        for (const auto& [c, d] : hull_edges(hb))
            if (segments_relation(a, b, c, d) != SegRelation::disjoint) return false;
    return true;
}

// point colors from a coloring; -1 for uncolored
inline std::vector<int> color_map(int n, const Coloring& classes) {
    std::vector<int> color(n, -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        for (int i : classes[c]) {
            if (i < 0 || i >= n) throw std::out_of_range("coloring index out of range");
            if (color[i] != -1) throw std::invalid_argument("coloring classes overlap");
            color[i] = c;
        }
    return color;
}

} // namespace detail

inline bool hulls_disjoint(const std::vector<Point>& A, const std::vector<Point>& B) {
    if (A.empty() || B.empty()) throw std::invalid_argument("hulls_disjoint wants nonempty sets");
    return detail::hull_vertices_disjoint(convex_hull(A).vertices, convex_hull(B).vertices);
}

// Y is clustered iff the hulls of its nonempty monochromatic parts are
// pairwise disjoint
inline bool is_clustered(const std::vector<Point>& X, const Coloring& classes,
                         const std::vector<int>& Y) {
    auto color = detail::color_map(static_cast<int>(X.size()), classes);
    std::vector<std::vector<Point>> parts(classes.size());
    for (int i : Y) {
        if (i < 0 || i >= static_cast<int>(X.size())) throw std::out_of_range("subset index out of range");
        if (color[i] == -1) throw std::invalid_argument("subset point has no color");
        parts[color[i]].push_back(X[i]);
    }
    std::vector<std::vector<Point>> hulls;
    for (const auto& part : parts)
        if (!part.empty()) hulls.push_back(convex_hull(part).vertices);
    for (std::size_t a = 0; a < hulls.size(); ++a)
        for (std::size_t b = a + 1; b < hulls.size(); ++b)
            if (!detail::hull_vertices_disjoint(hulls[a], hulls[b])) return false;
    return true;
}

struct ClusterSearch {
    int lower = 0, upper = 0;
    std::vector<int> witness; // a clustered subset of size lower
    std::uint64_t nodes = 0;
    bool exact() const { return lower == upper; }
};

// Largest clustered subset by branch and bound. Clusteredness is downward
// closed, so an include branch that breaks disjointness is pruned whole.
// Contested points (those whose nearest neighbors are mostly other-colored)
// are decided first.
inline ClusterSearch max_clustered_subset(const std::vector<Point>& X, const Coloring& classes,
                                          std::uint64_t budget = 50'000'000) {
    require_distinct(X);
    auto color = detail::color_map(static_cast<int>(X.size()), classes);
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(X.size()); ++i)
        if (color[i] != -1) order.push_back(i);

    auto interference = [&](int i) {
        std::vector<std::pair<Rat, int>> near;
        for (int j : order)
            if (j != i) near.emplace_back(norm2(X[j] - X[i]), j);
        std::sort(near.begin(), near.end());
        int score = 0;
        for (std::size_t t = 0; t < near.size() && t < 4; ++t)
            score += color[near[t].second] != color[i];
        return score;
    };
    std::vector<int> score(X.size(), 0);
    for (int i : order) score[i] = interference(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });

    int n = static_cast<int>(order.size());
    ClusterSearch res;
    std::vector<std::vector<Point>> parts(classes.size());
    std::vector<std::vector<Point>> hulls(classes.size());
    std::vector<int> chosen;
    bool exhausted = false;

    std::function<void(int)> dfs = [&](int idx) {
        if (++res.nodes > budget) {
            exhausted = true;
            return;
        }
        if (static_cast<int>(chosen.size()) + (n - idx) <= res.lower) return;
        if (idx == n) {
            res.lower = static_cast<int>(chosen.size());
            res.witness = chosen;
            return;
        }
        int p = order[idx];
        int c = color[p];
        parts[c].push_back(X[p]);
        auto grown = convex_hull(parts[c]).vertices;
        bool ok = true;
        for (std::size_t d = 0; d < hulls.size() && ok; ++d)
            if (static_cast<int>(d) != c && !hulls[d].empty())
                ok = detail::hull_vertices_disjoint(grown, hulls[d]);
        if (ok) {
            auto saved = std::move(hulls[c]);
            hulls[c] = std::move(grown);
            chosen.push_back(p);
            dfs(idx + 1);
            chosen.pop_back();
            hulls[c] = std::move(saved);
        }
        parts[c].pop_back();
        if (exhausted) return;
        dfs(idx + 1);
    };
    dfs(0);

    std::sort(res.witness.begin(), res.witness.end());
    res.upper = exhausted ? n : res.lower;
    return res;
}

namespace detail {

// balanced colorings of k*k indices, classes canonically ordered by their
// smallest member; calls fn for each until it has produced them all or the
// cap is hit (returns false in that case)
inline bool enumerate_balanced_colorings(int k, std::uint64_t cap,
                                         const std::function<void(const Coloring&)>& fn) {
    int n = k * k;
    std::vector<int> assign(n, -1);
    std::vector<int> count(k, 0);
    std::uint64_t produced = 0;
    std::function<bool(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (++produced > cap) return false;
            Coloring classes(k);
            for (int v = 0; v < n; ++v) classes[assign[v]].push_back(v);
            fn(classes);
            return true;
        }
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (count[c] == k) continue;
            assign[i] = c;
            ++count[c];
            bool go = rec(i + 1, std::max(used, c + 1));
            --count[c];
            assign[i] = -1;
            if (!go) return false;
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace detail

// Upper estimate of C(X) = min over balanced colorings of C(X, coloring):
// exhaustive over all balanced colorings when there are few, otherwise
// sampled random colorings plus the interweaving coloring when X is weakly
// convex. Per-coloring searches that close make the per-coloring value exact.
inline int estimate_CX(const std::vector<Point>& X, int k, int trials, std::uint64_t seed,
                       std::uint64_t budget = 50'000'000) {
    if (static_cast<int>(X.size()) != k * k) throw std::invalid_argument("estimate_CX wants |X| = k*k");
    require_distinct(X);
    int best = k * k;
    auto consider = [&](const Coloring& classes) {
        best = std::min(best, max_clustered_subset(X, classes, budget).upper);
    };

    const std::uint64_t kExhaustiveCap = 400;
    if (detail::enumerate_balanced_colorings(k, kExhaustiveCap, consider)) return best;

    best = k * k;
    Rng rng(seed);
    std::vector<int> ids(X.size());
    std::iota(ids.begin(), ids.end(), 0);
    for (int t = 0; t < trials; ++t) {
        rng.shuffle(ids);
        Coloring classes(k);
        for (int c = 0; c < k; ++c)
            classes[c] = std::vector<int>(ids.begin() + c * k, ids.begin() + (c + 1) * k);
        consider(classes);
    }
    if (position_class(X) != PositionClass::general) {
        auto cyc = boundary_cyclic_order(X);
        Coloring classes(k);
        for (int pos = 0; pos < k * k; ++pos) classes[pos % k].push_back(cyc[pos]);
        consider(classes);
    }
    return best;
}

// Exact number of partitions of Z into parts with pairwise disjoint hulls;
// incremental pruning works because parts only grow along the recursion.
inline long long count_crossing_free_partitions(const std::vector<Point>& Z) {
    if (Z.empty()) throw std::invalid_argument("count_crossing_free_partitions wants >= 1 point");
    if (Z.size() > 9) throw std::invalid_argument("count_crossing_free_partitions caps at 9 points");
    require_distinct(Z);
    int n = static_cast<int>(Z.size());
    std::vector<std::vector<Point>> blocks;
    std::vector<std::vector<Point>> hulls;

    std::function<long long(int)> rec = [&](int i) -> long long {
        if (i == n) return 1;
        long long total = 0;
        for (std::size_t b = 0; b <= blocks.size(); ++b) {
            if (b == blocks.size()) {
                blocks.push_back({Z[i]});
                hulls.push_back({Z[i]});
            } else {
                blocks[b].push_back(Z[i]);
                hulls[b] = convex_hull(blocks[b]).vertices;
            }
            bool ok = true;
            for (std::size_t d = 0; d < blocks.size() && ok; ++d)
                if (d != b) ok = detail::hull_vertices_disjoint(hulls[b], hulls[d]);
            if (ok) total += rec(i + 1);
            if (b == blocks.size() - 1 && blocks[b].size() == 1) {
                blocks.pop_back();
                hulls.pop_back();
            } else {
                blocks[b].pop_back();
                hulls[b] = convex_hull(blocks[b]).vertices;
            }
        }
        return total;
    };
    return rec(0);
}

} // namespace untangle::clustering
