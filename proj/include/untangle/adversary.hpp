#pragma once

// Hard instances: random rim/path assignments for wheels and fans, the
// stride-k collinear placement for star forests, the interweaving coloring
// of a weakly convex set, group placement for the H_n construction, and an
// annealing search for colorings with small clustered subsets.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "clustering.hpp"
#include "geometry.hpp"
#include "graphs.hpp"
#include "rng.hpp"

namespace untangle::adversary {

struct BalancedColoring {
    int k = 0;
    clustering::Coloring classes; // k classes of k point indices

    void validate(int npoints) const {
        if (static_cast<int>(classes.size()) != k) throw std::invalid_argument("coloring wants k classes");
        for (const auto& cl : classes)
            if (static_cast<int>(cl.size()) != k) throw std::invalid_argument("coloring class sizes must be k");
        clustering::detail::color_map(npoints, classes); // range/overlap checks
    }
};

// hub on the last point, rim on the rest via a uniform random permutation
inline graphs::Drawing wheel_adversary(const std::vector<Point>& X, std::uint64_t seed) {
    int n = static_cast<int>(X.size());
    if (n < 5) throw std::invalid_argument("wheel_adversary wants n >= 5");
    require_distinct(X);
    graphs::Drawing d;
    d.graph = graphs::wheel_graph(n);
    d.placement.resize(n);
    std::vector<int> sigma(n - 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rng rng(seed);
    rng.shuffle(sigma);
    for (int i = 0; i + 1 < n; ++i) d.placement[i] = X[sigma[i]];
    d.placement[n - 1] = X[n - 1];
    return d;
}

// center on the last point, path on the rest via a uniform random permutation
inline graphs::Drawing fan_adversary(const std::vector<Point>& X, std::uint64_t seed) {
    int n = static_cast<int>(X.size());
    if (n < 3) throw std::invalid_argument("fan_adversary wants n >= 3");
    require_distinct(X);
    graphs::Drawing d;
    d.graph = graphs::fan_graph(n);
    d.placement.resize(n);
    std::vector<int> sigma(n - 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rng rng(seed);
    rng.shuffle(sigma);
    for (int i = 0; i + 1 < n; ++i) d.placement[i] = X[sigma[i]];
    d.placement[n - 1] = X[n - 1];
    return d;
}

// leaves of star i on every k-th point starting at the i-th along the line,
// centers on the last k points in order
inline graphs::Drawing stars_collinear_adversary(std::vector<Point> X, int k) {
    if (k < 1) throw std::invalid_argument("stars_collinear_adversary wants k >= 1");
    if (static_cast<int>(X.size()) != k * k)
        throw std::invalid_argument("stars_collinear_adversary wants k*k points");
    require_distinct(X);
    if (!all_collinear(X)) throw std::invalid_argument("stars_collinear_adversary wants collinear points");
    std::sort(X.begin(), X.end());
    graphs::Drawing d;
    d.graph = graphs::star_forest(k);
    d.placement.resize(k * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) d.placement[i * k + j] = X[i + j * k];
        d.placement[i * k + k - 1] = X[k * (k - 1) + i];
    }
    return d;
}

// colors 1..k repeating k times along the boundary cyclic order
inline BalancedColoring interweaving_coloring(const std::vector<Point>& X, int k) {
    if (k < 1) throw std::invalid_argument("interweaving_coloring wants k >= 1");
    if (static_cast<int>(X.size()) != k * k)
        throw std::invalid_argument("interweaving_coloring wants k*k points");
    require_distinct(X);
    if (position_class(X) == PositionClass::general)
        throw std::invalid_argument("interweaving_coloring wants weakly convex points");
    auto cyc = boundary_cyclic_order(X);
    BalancedColoring col;
    col.k = k;
    col.classes.assign(k, {});
    for (int pos = 0; pos < k * k; ++pos) col.classes[pos % k].push_back(cyc[pos]);
    return col;
}

// group i of H onto color class i, both read in index order
inline graphs::Drawing hn_adversary(const std::vector<Point>& X, const BalancedColoring& col,
                                    const graphs::HnGraph& H) {
    int k = H.k;
    if (static_cast<int>(X.size()) != k * k || col.k != k)
        throw std::invalid_argument("hn_adversary size mismatch");
    col.validate(k * k);
    require_distinct(X);
    graphs::Drawing d;
    d.graph = H.graph;
    d.placement.resize(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d.placement[H.groups[i][j]] = X[col.classes[i][j]];
    return d;
}

// Annealing over balanced colorings, minimizing the clustered-subset upper
// value; swap proposals, geometric cooling. Returns the best coloring seen.
inline BalancedColoring anneal_coloring(const std::vector<Point>& X, int k, int iterations,
                                        std::uint64_t seed, std::uint64_t budget = 2'000'000) {
    if (static_cast<int>(X.size()) != k * k) throw std::invalid_argument("anneal_coloring wants k*k points");
    require_distinct(X);
    int n = k * k;
    Rng rng(seed);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);

    auto to_classes = [&](const std::vector<int>& order) {
        clustering::Coloring classes(k);
        for (int c = 0; c < k; ++c)
            classes[c] = std::vector<int>(order.begin() + c * k, order.begin() + (c + 1) * k);
        return classes;
    };
    auto cost = [&](const std::vector<int>& order) {
        return clustering::max_clustered_subset(X, to_classes(order), budget).upper;
    };

    std::vector<int> cur = ids, best = ids;
    int cur_cost = cost(cur), best_cost = cur_cost;
    for (int it = 0; it < iterations; ++it) {
        std::size_t a = rng.below(n), b = rng.below(n);
        if (a / k == b / k) continue; // same class: swap is a no-op coloring
        std::swap(cur[a], cur[b]);
        int c = cost(cur);
        double temp = 1.0 + 2.0 * (1.0 - double(it) / std::max(1, iterations));
        bool accept = c <= cur_cost ||
                      double(rng.below(1'000'000)) / 1e6 < std::exp((cur_cost - c) / temp);
        if (accept) {
            cur_cost = c;
            if (c < best_cost) {
                best_cost = c;
                best = cur;
            }
        } else {
            std::swap(cur[a], cur[b]);
        }
    }
    BalancedColoring col;
    col.k = k;
    col.classes = to_classes(best);
    return col;
}

} // namespace untangle::adversary
