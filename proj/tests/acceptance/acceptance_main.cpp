// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line. Run with --criterion N to filter.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <untangle/adversary.hpp>
#include <untangle/bounds.hpp>
#include <untangle/clustering.hpp>
#include <untangle/graphs.hpp>
#include <untangle/rng.hpp>
#include <untangle/sequences.hpp>
#include <untangle/untangler.hpp>
#include <untangle/visibility.hpp>

#include "../oracles.hpp"
#include "../unit/test_support.hpp"

using namespace untangle;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& msg) {
        if (cond) return;
        if (!ok) why << "; ";
        why << msg;
        ok = false;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << v;
    return os.str();
}

// ---- 1: mean longest increasing subsequence vs the inverse-root sum ----

bool crit_lis_mean(Check& c) {
    for (int N : {100, 400, 900}) {
        const int trials = 200;
        std::vector<int> vals;
        vals.reserve(trials);
        for (int t = 0; t < trials; ++t)
            vals.push_back(sequences::lis(sequences::random_permutation(N, 9000 + N + t)));
        double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / trials;
        double var = 0;
        for (int v : vals) var += (v - mean) * (v - mean);
        double se = std::sqrt(var / (trials - 1)) / std::sqrt(double(trials));
        double bound = 0;
        for (int i = 1; i <= N; ++i) bound += 1.0 / std::sqrt(double(i));
        c.expect(mean <= bound + 3 * se, "N=" + std::to_string(N) + " mean " + fmt(mean) +
                                             " above " + fmt(bound) + " + 3*" + fmt(se));
    }
    return c.ok;
}

// ---- 2: two-part circular measure of random permutations ----

bool crit_l2_tail(Check& c) {
    const int N = 400, trials = 100;
    double threshold = 2 * std::sqrt(2.0) * std::sqrt(double(N)) + 2 * std::pow(double(N), 0.3);
    int good = 0;
    for (int t = 0; t < trials; ++t)
        if (sequences::l2(sequences::random_permutation(N, 40000 + t)) < threshold) ++good;
    c.expect(good >= 95, "only " + std::to_string(good) + "/100 below " + fmt(threshold));
    return c.ok;
}

// ---- 3: two-part measure vs brute force on every small permutation ----

bool crit_l2_brute(Check& c) {
    long checked = 0;
    for (int N = 2; N <= 7 && c.ok; ++N) {
        std::vector<int> perm(N);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            ++checked;
            if (sequences::l2(perm) != oracles::l2_brute(perm)) {
                std::ostringstream os;
                for (int v : perm) os << v << ' ';
                c.expect(false, "mismatch on " + os.str());
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    c.expect(checked >= 5912, "covered only " + std::to_string(checked) + " permutations");
    return c.ok;
}

// ---- 4: four-term alternations in block stride sequences ----

bool crit_xyxy_cap(Check& c) {
    for (int k = 1; k <= 5; ++k)
        for (int s = 1; s <= 5; ++s) {
            auto r = sequences::max_alternation_free_subsequence(sequences::block_sequence(k, s), 2);
            std::string tag = "k=" + std::to_string(k) + ",s=" + std::to_string(s);
            c.expect(r.exact(), tag + " search did not close");
            c.expect(r.lower < k + s, tag + " reached " + std::to_string(r.lower));
        }
    return c.ok;
}

// ---- 5: six-term alternations vs the linear segment maximum ----

bool crit_xyxyxy_cap(Check& c) {
    for (int k = 1; k <= 4; ++k) {
        auto lam = sequences::ds_max_length(k, 4);
        c.expect(lam.exact(), "segment maximum open at k=" + std::to_string(k));
        for (int s = 1; s <= 4; ++s) {
            auto r = sequences::max_alternation_free_subsequence(sequences::block_sequence(k, s), 4);
            std::string tag = "k=" + std::to_string(k) + ",s=" + std::to_string(s);
            c.expect(r.exact(), tag + " search did not close");
            c.expect(r.lower < lam.lower + s, tag + " reached " + std::to_string(r.lower) +
                                                  " vs " + std::to_string(lam.lower + s));
        }
    }
    return c.ok;
}

// ---- 6: visibility classes from representatives vs heavy sampling ----

bool crit_visibility_classes(Check& c) {
    Rng rng(606);
    for (int t = 0; t < 14; ++t) {
        int n = 3 + t % 6;
        auto X = test_support::random_points(n, rng);
        auto reps = visibility_classes(X);
        auto sampled = visibility_classes_at(sample_standpoints(X, 10000, 5000 + t), X);
        std::string tag = "set " + std::to_string(t) + " (n=" + std::to_string(n) + ")";
        c.expect(sampled == reps, tag + ": sampling saw " + std::to_string(sampled.size()) +
                                      " of " + std::to_string(reps.size()) + " classes");
        long long n4 = 1LL * n * n * n * n;
        c.expect(4 * static_cast<long long>(reps.size()) < 3 * n4,
                 tag + ": " + std::to_string(reps.size()) + " classes exceeds 3n^4/4");
    }
    for (int t = 0; t < 6; ++t) {
        int n = 4 + t % 5;
        auto X = test_support::collinear_points(n, rng);
        auto reps = visibility_classes(X);
        c.expect(static_cast<int>(reps.size()) <= n,
                 "collinear n=" + std::to_string(n) + " gave " + std::to_string(reps.size()));
    }
    return c.ok;
}

// ---- 7: four-clique anchors, two kept on a line and three otherwise ----

bool crit_k4_anchors(Check& c) {
    graphs::Graph k4 = graphs::complete_graph(4);

    graphs::Drawing flat;
    flat.graph = k4;
    flat.placement = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    auto rl = untangler::fix_oracle(flat);
    c.expect(rl.exact() && rl.lower == 2, "line drawing resolved to [" + std::to_string(rl.lower) +
                                              "," + std::to_string(rl.upper) + "], want [2,2]");
    c.expect(rl.witness && graphs::is_plane_drawing(*rl.witness).plane &&
                 static_cast<int>(graphs::fixed_set(flat, *rl.witness).size()) >= 2,
             "line witness missing or too loose");

    Rng rng(707);
    std::vector<std::vector<Point>> sets;
    for (int t = 0; t < 10; ++t) sets.push_back(test_support::convex_points(4, rng));
    for (int t = 0; t < 10; ++t) {
        auto pts = test_support::collinear_points(3, rng);
        for (;;) {
            Point p{test_support::coord(rng, 4), test_support::coord(rng, 4)};
            if (orient(pts[0], pts[1], p) != 0) {
                pts.push_back(p);
                break;
            }
        }
        sets.push_back(pts);
    }

    for (std::size_t i = 0; i < sets.size() && c.ok; ++i) {
        std::vector<int> perm = {0, 1, 2, 3};
        do {
            graphs::Drawing d;
            d.graph = k4;
            for (int v : perm) d.placement.push_back(sets[i][v]);
            auto r = untangler::fix_oracle(d);
            if (r.lower < 3) {
                c.expect(false, "set " + std::to_string(i) + " has an assignment stuck at " +
                                    std::to_string(r.lower));
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return c.ok;
}

// ---- 8: family certificates dominate everything the oracle finds ----

bool crit_bound_soundness(Check& c) {
    Rng rng(808);
    for (int t = 0; t < 20; ++t) {
        int n = 6 + t % 5;
        auto X = test_support::random_points(n, rng);
        std::uint64_t seed = rng.next();
        bool wheel = t % 2 == 0;
        graphs::Drawing d =
            wheel ? adversary::wheel_adversary(X, seed) : adversary::fan_adversary(X, seed);
        bounds::BoundReport b = wheel ? bounds::wheel_upper(d) : bounds::fan_upper(d);

        untangler::FixOptions opt;
        opt.seed = seed;
        if (n <= 7) {
            opt.budget = 50'000;
            opt.random_tries = 20;
        } else {
            opt.max_free = 2;
            opt.budget = 3'000;
            opt.random_tries = 10;
        }
        auto r = untangler::fix_oracle(d, opt);
        std::string tag = (wheel ? std::string("wheel") : std::string("fan")) +
                          " n=" + std::to_string(n) + " trial " + std::to_string(t);
        c.expect(r.lower <= b.value, tag + ": oracle floor " + std::to_string(r.lower) +
                                         " beats bound " + std::to_string(b.value));
        if (r.witness) {
            int kept = static_cast<int>(graphs::fixed_set(d, *r.witness).size());
            c.expect(graphs::is_plane_drawing(*r.witness).plane, tag + ": witness not plane");
            c.expect(kept >= r.lower, tag + ": witness keeps " + std::to_string(kept) +
                                          " below floor " + std::to_string(r.lower));
            c.expect(kept <= b.value, tag + ": witness keeps " + std::to_string(kept) +
                                          " beating bound " + std::to_string(b.value));
        }
    }
    return c.ok;
}

// ---- 9: star forests on a line stay under seven roots ----

bool crit_stars_line(Check& c) {
    for (int k = 2; k <= 6; ++k) {
        std::vector<Point> X;
        for (int i = 0; i < k * k; ++i) X.push_back(Point{i, -i});
        graphs::Drawing d = adversary::stars_collinear_adversary(X, k);
        auto b = bounds::stars_collinear_upper(d);
        std::string tag = "k=" + std::to_string(k);
        c.expect(b.caps_exact, tag + " cap searches open");
        c.expect(b.value < 7 * k, tag + " bound " + std::to_string(b.value) + " not below " +
                                      std::to_string(7 * k));
    }
    return c.ok;
}

// ---- 10: grouped stacks on weakly convex points stay under three roots ----

bool crit_hn_bound(Check& c) {
    Rng rng(1010);
    for (int k : {3, 4, 5}) {
        auto X = test_support::weakly_convex_points(k * k, rng);
        auto col = adversary::interweaving_coloring(X, k);
        auto H = graphs::make_Hn(k, graphs::HnKind::fan_stack);
        auto b = bounds::hn_upper(X, col, H);
        std::string tag = "k=" + std::to_string(k);
        c.expect(b.caps_exact, tag + " clustering search open");
        c.expect(b.value < 3 * k, tag + " bound " + std::to_string(b.value) + " not below " +
                                      std::to_string(3 * k));
        int clustered = b.value - k;
        c.expect(clustered < 2 * k, tag + " clustered part " + std::to_string(clustered) +
                                        " not below " + std::to_string(2 * k));
    }
    return c.ok;
}

// ---- 11: line reduction keeps the untangler's fixed set bit-for-bit ----

graphs::Graph random_planar_graph(int n, Rng& rng) {
    graphs::Graph g(n);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    rng.shuffle(pairs);
    int want = static_cast<int>(rng.range(n - 1, std::max(n - 1, 3 * n - 6)));
    for (auto [a, b] : pairs) {
        if (static_cast<int>(g.edges.size()) >= want) break;
        graphs::Graph h = g;
        h.add_edge(a, b);
        if (graphs::is_planar(h)) g = h;
    }
    return g;
}

bool crit_line_reduction(Check& c) {
    Rng rng(1111);
    for (int t = 0; t < 50 && c.ok; ++t) {
        int n = 3 + t % 6;
        graphs::Drawing d;
        d.graph = random_planar_graph(n, rng);
        d.placement = test_support::random_points(n, rng);
        auto r = untangler::collinear_reduce(d, untangler::naive_collinear_untangler);
        std::string tag = "drawing " + std::to_string(t) + " (n=" + std::to_string(n) + ")";
        c.expect(graphs::is_plane_drawing(r.drawing).plane, tag + ": output not plane");
        auto kept = graphs::fixed_set(d, r.drawing);
        c.expect(std::includes(kept.begin(), kept.end(), r.fixed.begin(), r.fixed.end()),
                 tag + ": fixed set not preserved bit-for-bit");
    }
    return c.ok;
}

// ---- 12: grouped clique-grid construction ----

bool crit_hn_construction(Check& c) {
    for (int k = 3; k <= 6; ++k)
        for (auto kind : {graphs::HnKind::fan_stack, graphs::HnKind::bounded_degree}) {
            auto H = graphs::make_Hn(k, kind);
            std::string tag = "k=" + std::to_string(k) + " " + graphs::to_string(kind);
            c.expect(H.graph.n == k * k, tag + " has " + std::to_string(H.graph.n) + " vertices");
            c.expect(graphs::is_planar(H.graph), tag + " not planar");
            c.expect(graphs::is_3_connected(H.graph), tag + " not 3-connected");
            if (kind == graphs::HnKind::bounded_degree)
                c.expect(H.graph.max_degree() <= 8,
                         tag + " max degree " + std::to_string(H.graph.max_degree()));
        }
    return c.ok;
}

struct Criterion {
    int id;
    std::string what;
    std::function<bool(Check&)> run;
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    std::vector<Criterion> criteria = {
        {1, "mean longest increasing subsequence stays under the inverse-root sum", crit_lis_mean},
        {2, "two-part circular measure of random permutations stays in its tail bound", crit_l2_tail},
        {3, "two-part measure equals brute force on all permutations up to length 7", crit_l2_brute},
        {4, "four-term alternation-free subsequences of stride blocks stay below k+s", crit_xyxy_cap},
        {5, "six-term alternation-free subsequences stay below the segment maximum plus s", crit_xyxyxy_cap},
        {6, "standpoint representatives realize exactly the sampled visibility classes", crit_visibility_classes},
        {7, "four-clique keeps exactly two vertices on a line and three otherwise", crit_k4_anchors},
        {8, "family certificates dominate every redrawing the oracle finds", crit_bound_soundness},
        {9, "star forests on a line stay under seven roots", crit_stars_line},
        {10, "grouped stacks on weakly convex points stay under three roots", crit_hn_bound},
        {11, "line reduction preserves the fixed set bit-for-bit", crit_line_reduction},
        {12, "grouped clique-grids are planar, 3-connected squares of bounded degree", crit_hn_construction},
    };

    bool all_ok = true;
    for (const Criterion& cr : criteria) {
        if (only && cr.id != only) continue;
        Check c;
        bool ok = false;
        try {
            ok = cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("threw: ") + e.what());
        }
        ok = ok && c.ok;
        std::cout << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << " - " << cr.what;
        if (!ok) std::cout << " (" << c.why.str() << ")";
        std::cout << std::endl;
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
