#pragma once

// Simple graphs, the planar families used by the bounds, straight-line
// drawings with exact crossing tests, and exact decision procedures for
// planarity (incremental face embedding) and 3-connectivity (exhaustive
// pair removal) at desk scale.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace untangle::graphs {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized a < b, sorted, unique

    Graph() = default;
    explicit Graph(int vertices) : n(vertices) {
        if (vertices < 0) throw std::invalid_argument("negative vertex count");
    }

    void add_edge(int a, int b) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loops are not allowed");
        if (a > b) std::swap(a, b);
        auto e = std::make_pair(a, b);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) edges.insert(it, e);
    }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (const auto& [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        return deg;
    }

    int max_degree() const {
        auto deg = degrees();
        return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (const auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
    bool operator!=(const Graph& o) const { return !(*this == o); }
};

// --- families ---------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle wants n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// leaves 0..n-2, center n-1
inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star wants n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

// disjoint union plus all cross edges; h's vertices are shifted by g.n
inline Graph join_graphs(const Graph& g, const Graph& h) {
    Graph out(g.n + h.n);
    for (const auto& [a, b] : g.edges) out.add_edge(a, b);
    for (const auto& [a, b] : h.edges) out.add_edge(g.n + a, g.n + b);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) out.add_edge(u, g.n + v);
    return out;
}

// rim 0..n-2 in cycle order, hub n-1
inline Graph wheel_graph(int n) {
    if (n < 4) throw std::invalid_argument("wheel wants n >= 4");
    return join_graphs(cycle_graph(n - 1), Graph(1));
}

// path 0..n-2 in path order, center n-1
inline Graph fan_graph(int n) {
    if (n < 3) throw std::invalid_argument("fan wants n >= 3");
    return join_graphs(path_graph(n - 1), Graph(1));
}

// k disjoint stars of k vertices; component i occupies [i*k, (i+1)*k),
// center i*k + k - 1
inline Graph star_forest(int k) {
    if (k < 1) throw std::invalid_argument("star_forest wants k >= 1");
    Graph g(k * k);
    for (int i = 0; i < k; ++i) {
        int center = i * k + k - 1;
        for (int j = 0; j + 1 < k; ++j) g.add_edge(i * k + j, center);
    }
    return g;
}

inline Graph family(const std::string& kind, int param) {
    if (kind == "cycle") return cycle_graph(param);
    if (kind == "path") return path_graph(param);
    if (kind == "star") return star_graph(param);
    if (kind == "empty") return empty_graph(param);
    if (kind == "wheel") return wheel_graph(param);
    if (kind == "fan") return fan_graph(param);
    if (kind == "star_forest") return star_forest(param);
    throw std::invalid_argument("unknown graph family: " + kind);
}

// --- the H_n construction ----------------------------------------------

enum class HnKind { fan_stack, bounded_degree };

inline const char* to_string(HnKind k) {
    return k == HnKind::fan_stack ? "fan_stack" : "bounded_degree";
}

struct HnGraph {
    int k = 0;
    Graph graph;
    std::vector<std::vector<int>> groups;        // k groups of k vertices
    std::vector<std::pair<int, int>> connectors; // 2k edges between groups
};

namespace detail {

// triangulation with 3k-6 edges on base..base+k-1; two apexes base, base+1
// over the path base+2..base+k-1; the first three vertices form a triangle
inline void add_fan_stack(Graph& g, int base, int k) {
    g.add_edge(base, base + 1);
    for (int j = 2; j < k; ++j) {
        g.add_edge(base, base + j);
        g.add_edge(base + 1, base + j);
    }
    for (int j = 2; j + 1 < k; ++j) g.add_edge(base + j, base + j + 1);
}

// triangulation with 3k-6 edges and max degree 6: nested triangles joined by
// zigzag annuli, with one or two extra vertices stacked on the last triangle;
// the first three vertices form a triangle
inline void add_rings(Graph& g, int base, int k) {
    int m = k / 3, r = k % 3;
    for (int j = 0; j < m; ++j) {
        int a = base + 3 * j;
        g.add_edge(a, a + 1);
        g.add_edge(a + 1, a + 2);
        g.add_edge(a, a + 2);
    }
    for (int j = 0; j + 1 < m; ++j) {
        int a = base + 3 * j, b = base + 3 * (j + 1);
        for (int i = 0; i < 3; ++i) {
            g.add_edge(a + i, b + i);
            g.add_edge(a + i, b + (i + 1) % 3);
        }
    }
    if (r >= 1) {
        int last = base + 3 * (m - 1);
        int u = base + 3 * m;
        for (int i = 0; i < 3; ++i) g.add_edge(u, last + i);
        if (r == 2) {
            int w = u + 1;
            g.add_edge(w, last);
            g.add_edge(w, last + 1);
            g.add_edge(w, u);
        }
    }
}

} // namespace detail

// k triangulations of k vertices each arranged in a cycle; neighboring
// triangulations are connected by two vertex-disjoint edges so that the
// first connector family forms a C_k and the second one runs through a
// C_2k (using the internal edges between each group's second and third
// vertex)
inline HnGraph make_Hn(int k, HnKind kind) {
    if (k < 3) throw std::invalid_argument("make_Hn wants k >= 3");
    HnGraph h;
    h.k = k;
    h.graph = Graph(k * k);
    for (int i = 0; i < k; ++i) {
        int base = i * k;
        if (kind == HnKind::fan_stack)
            detail::add_fan_stack(h.graph, base, k);
        else
            detail::add_rings(h.graph, base, k);
        std::vector<int> grp(k);
        std::iota(grp.begin(), grp.end(), base);
        h.groups.push_back(std::move(grp));
    }
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        h.graph.add_edge(i * k, j * k);
        h.connectors.emplace_back(i * k, j * k);
        h.graph.add_edge(i * k + 1, j * k + 2);
        h.connectors.emplace_back(i * k + 1, j * k + 2);
    }
    return h;
}

// --- drawings ----------------------------------------------------------

struct Drawing {
    Graph graph;
    std::vector<Point> placement; // placement[v]

    void validate() const {
        if (static_cast<int>(placement.size()) != graph.n)
            throw std::invalid_argument("placement size does not match vertex count");
        require_distinct(placement);
    }
};

struct PlaneReport {
    bool plane = true;
    std::vector<std::pair<int, int>> crossing_pairs; // indices into graph.edges
    std::vector<std::pair<int, int>> vertex_hits;    // (vertex, edge index)
};

// plane iff every edge pair is disjoint or meets only at a shared endvertex
// and no vertex sits in the relative interior of a non-incident edge
inline PlaneReport is_plane_drawing(const Drawing& d) {
    d.validate();
    PlaneReport rep;
    const auto& E = d.graph.edges;
    const auto& P = d.placement;
    int m = static_cast<int>(E.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = E[i];
            auto [c, e] = E[j];
            bool share = (a == c || a == e || b == c || b == e);
            SegRelation rel = segments_relation(P[a], P[b], P[c], P[e]);
            bool ok = share ? rel == SegRelation::shared_endpoint_only
                            : rel == SegRelation::disjoint;
            if (!ok) rep.crossing_pairs.emplace_back(i, j);
        }
    for (int v = 0; v < d.graph.n; ++v)
        for (int i = 0; i < m; ++i) {
            auto [a, b] = E[i];
            if (v == a || v == b) continue;
            if (on_segment(P[v], P[a], P[b])) rep.vertex_hits.emplace_back(v, i);
        }
    rep.plane = rep.crossing_pairs.empty() && rep.vertex_hits.empty();
    return rep;
}

inline std::vector<int> fixed_set(const Drawing& pi, const Drawing& rho) {
    if (pi.graph != rho.graph) throw std::invalid_argument("fixed_set wants drawings of one graph");
    std::vector<int> fixed;
    for (int v = 0; v < pi.graph.n; ++v)
        if (pi.placement[v] == rho.placement[v]) fixed.push_back(v);
    return fixed;
}

// --- connectivity ------------------------------------------------------

namespace detail {

inline bool connected_excluding(const std::vector<std::vector<int>>& adj,
                                const std::vector<bool>& removed) {
    int n = static_cast<int>(adj.size());
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == alive;
}

} // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return detail::connected_excluding(g.adjacency(), std::vector<bool>(g.n, false));
}

// exhaustive: no single vertex and no vertex pair disconnects the graph
inline bool is_3_connected(const Graph& g) {
    if (g.n < 4) throw std::invalid_argument("is_3_connected wants n >= 4");
    auto adj = g.adjacency();
    if (!detail::connected_excluding(adj, std::vector<bool>(g.n, false))) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            std::vector<bool> removed(g.n, false);
            removed[u] = removed[v] = true;
            if (!detail::connected_excluding(adj, removed)) return false;
        }
    return true;
}

// --- planarity ---------------------------------------------------------

namespace detail {

// incremental face embedding on a biconnected graph: keep a plane subgraph
// with faces stored as simple vertex cycles, repeatedly pick a fragment with
// the fewest admissible faces and route one of its paths through such a face
inline bool embed_biconnected(int n, const std::vector<std::pair<int, int>>& edge_list) {
    int m = static_cast<int>(edge_list.size());
    if (m <= 8) return true; // the smallest non-planar graphs have 9 edges
    if (n >= 3 && m > 3 * n - 6) return false;

    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edge_list) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // seed with any cycle, found along a DFS back edge
    std::vector<int> cyc;
    {
        std::vector<int> parent(n, -2);
        std::vector<int> stack{0};
        parent[0] = -1;
        int from = -1, to = -1;
        while (!stack.empty() && from < 0) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (parent[w] == -2) {
                    parent[w] = u;
                    stack.push_back(w);
                } else if (w != parent[u] && parent[u] != -2) {
                    // w was visited: in the partial DFS tree this closes a cycle
                    from = u;
                    to = w;
                    break;
                }
            }
        }
        if (from < 0) return true; // no cycle found: forests are planar
        // walk up from both ends to the common ancestor
        std::vector<int> au{from}, aw{to};
        std::set<int> on_u{from};
        for (int x = from; parent[x] >= 0; x = parent[x]) {
            au.push_back(parent[x]);
            on_u.insert(parent[x]);
        }
        while (!on_u.count(aw.back())) aw.push_back(parent[aw.back()]);
        int meet = aw.back();
        for (int x : au) {
            cyc.push_back(x);
            if (x == meet) break;
        }
        for (int i = static_cast<int>(aw.size()) - 2; i >= 0; --i) cyc.push_back(aw[i]);
        if (cyc.size() < 3) return true; // defensive: should not happen at 9+ edges
    }

    std::set<std::pair<int, int>> remaining(edge_list.begin(), edge_list.end());
    auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    std::vector<bool> in_h(n, false);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        in_h[cyc[i]] = true;
        remaining.erase(norm(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
    std::vector<std::vector<int>> faces{cyc, cyc};

    struct Fragment {
        std::vector<std::pair<int, int>> edges;
        std::set<int> attachments;
    };

    while (!remaining.empty()) {
        // fragments: components of non-embedded vertices with their edges,
        // plus single leftover edges between two embedded vertices
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int v = 0; v < n; ++v) {
            if (in_h[v] || comp[v] != -1) continue;
            comp[v] = ncomp;
            std::queue<int> q;
            q.push(v);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj[u])
                    if (!in_h[w] && comp[w] == -1) {
                        comp[w] = ncomp;
                        q.push(w);
                    }
            }
            ++ncomp;
        }
        std::vector<Fragment> frags(ncomp);
        for (const auto& e : remaining) {
            auto [a, b] = e;
            if (!in_h[a] || !in_h[b]) {
                int c = in_h[a] ? comp[b] : comp[a];
                frags[c].edges.push_back(e);
                if (in_h[a]) frags[c].attachments.insert(a);
                if (in_h[b]) frags[c].attachments.insert(b);
            } else {
                Fragment f;
                f.edges.push_back(e);
                f.attachments = {a, b};
                frags.push_back(std::move(f));
            }
        }

        std::vector<std::set<int>> face_sets;
        face_sets.reserve(faces.size());
        for (const auto& f : faces) face_sets.emplace_back(f.begin(), f.end());

        int best = -1, best_count = -1, best_face = -1;
        for (int i = 0; i < static_cast<int>(frags.size()); ++i) {
            if (frags[i].edges.empty()) continue;
            int count = 0, first_face = -1;
            for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
                bool ok = true;
                for (int a : frags[i].attachments)
                    if (!face_sets[fi].count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    ++count;
                    if (first_face < 0) first_face = fi;
                }
            }
            if (count == 0) return false;
            if (best < 0 || count < best_count) {
                best = i;
                best_count = count;
                best_face = first_face;
            }
        }

        // route a path through the chosen fragment between two attachments
        const Fragment& fr = frags[best];
        std::map<int, std::vector<int>> fadj;
        for (const auto& [a, b] : fr.edges) {
            fadj[a].push_back(b);
            fadj[b].push_back(a);
        }
        int start = *fr.attachments.begin();
        std::map<int, int> par;
        par[start] = -1;
        std::queue<int> q;
        q.push(start);
        std::vector<int> path;
        while (!q.empty() && path.empty()) {
            int u = q.front();
            q.pop();
            for (int w : fadj[u]) {
                if (par.count(w)) continue;
                par[w] = u;
                if (in_h[w]) {
                    for (int x = w; x != -1; x = par[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    break;
                }
                q.push(w);
            }
        }

        // split the host face along the path
        std::vector<int>& face = faces[best_face];
        int ia = -1, ib = -1;
        for (int i = 0; i < static_cast<int>(face.size()); ++i) {
            if (face[i] == path.front()) ia = i;
            if (face[i] == path.back()) ib = i;
        }
        int fs = static_cast<int>(face.size());
        std::vector<int> f1, f2;
        for (int i = ia;; i = (i + 1) % fs) {
            f1.push_back(face[i]);
            if (i == ib) break;
        }
        for (int i = ib;; i = (i + 1) % fs) {
            f2.push_back(face[i]);
            if (i == ia) break;
        }
        for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i) f1.push_back(path[i]);
        for (int i = 1; i + 1 < static_cast<int>(path.size()); ++i) f2.push_back(path[i]);

        for (std::size_t i = 0; i + 1 < path.size(); ++i) remaining.erase(norm(path[i], path[i + 1]));
        for (int v : path) in_h[v] = true;
        faces[best_face] = std::move(f1);
        faces.push_back(std::move(f2));
    }
    return true;
}

// biconnected components by lowpoint DFS with an edge stack
inline std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> out;
    auto adj = g.adjacency();
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> stk;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v : adj[u]) {
            if (disc[v] == -1) {
                stk.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> comp;
                    while (true) {
                        auto e = stk.back();
                        stk.pop_back();
                        comp.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    out.push_back(std::move(comp));
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stk.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int u = 0; u < g.n; ++u)
        if (disc[u] == -1) dfs(u, -1);
    return out;
}

} // namespace detail

// planar iff every biconnected component embeds
inline bool is_planar(const Graph& g) {
    if (g.n <= 4) return true;
    if (static_cast<int>(g.edges.size()) > 3 * g.n - 6) return false;
    for (const auto& comp : detail::biconnected_components(g)) {
        std::vector<int> ids;
        for (const auto& [a, b] : comp) {
            ids.push_back(a);
            ids.push_back(b);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::map<int, int> remap;
        for (int i = 0; i < static_cast<int>(ids.size()); ++i) remap[ids[i]] = i;
        std::vector<std::pair<int, int>> edges;
        edges.reserve(comp.size());
        for (const auto& [a, b] : comp) {
            int x = remap[a], y = remap[b];
            edges.emplace_back(std::min(x, y), std::max(x, y));
        }
        if (!detail::embed_biconnected(static_cast<int>(ids.size()), edges)) return false;
    }
    return true;
}

} // namespace untangle::graphs
