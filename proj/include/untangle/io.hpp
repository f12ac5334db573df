#pragma once

// JSON/CSV serialization: point sets, graphs, drawings, experiment tables.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "graphs.hpp"
#include "rational.hpp"

namespace untangle::io {

using nlohmann::json;

inline json point_to_json(const Point& p) {
    return json::array({to_string(p.x), to_string(p.y)});
}

inline Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point wants [x, y]");
    auto coord = [](const json& c) {
        if (c.is_string()) return parse_rational(c.get<std::string>());
        if (c.is_number_integer()) return Rat(Int(c.get<long long>()));
        throw std::invalid_argument("coordinate wants a rational string or an integer");
    };
    return Point{coord(j[0]), coord(j[1])};
}

inline json point_set_to_json(const std::vector<Point>& pts) {
    json j;
    j["n"] = pts.size();
    j["points"] = json::array();
    for (const Point& p : pts) j["points"].push_back(point_to_json(p));
    return j;
}

inline std::vector<Point> point_set_from_json(const json& j) {
    if (!j.contains("points")) throw std::invalid_argument("point set wants a points field");
    std::vector<Point> pts;
    for (const json& e : j.at("points")) pts.push_back(point_from_json(e));
    if (j.contains("n") && j.at("n").get<std::size_t>() != pts.size())
        throw std::invalid_argument("point set n does not match points");
    return pts;
}

struct GraphFile {
    graphs::Graph graph;
    std::string family;                   // optional tag, empty when absent
    std::vector<std::vector<int>> groups; // optional partition, empty when absent
};

inline json graph_to_json(const GraphFile& gf) {
    json j;
    j["n"] = gf.graph.n;
    j["edges"] = json::array();
    for (auto [u, v] : gf.graph.edges) j["edges"].push_back(json::array({u, v}));
    if (!gf.family.empty()) j["family"] = gf.family;
    if (!gf.groups.empty()) j["groups"] = gf.groups;
    return j;
}

inline json graph_to_json(const graphs::Graph& g) { return graph_to_json(GraphFile{g, "", {}}); }

inline GraphFile graph_from_json(const json& j) {
    GraphFile gf;
    gf.graph.n = j.at("n").get<int>();
    if (gf.graph.n < 0) throw std::invalid_argument("graph wants n >= 0");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge wants [u, v]");
        gf.graph.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("family")) gf.family = j.at("family").get<std::string>();
    if (j.contains("groups")) gf.groups = j.at("groups").get<std::vector<std::vector<int>>>();
    return gf;
}

inline json drawing_to_json(const graphs::Drawing& d, const std::string& family = "") {
    json j;
    j["graph"] = graph_to_json(GraphFile{d.graph, family, {}});
    j["placement"] = json::array();
    for (const Point& p : d.placement) j["placement"].push_back(point_to_json(p));
    return j;
}

// placement entries are coordinate pairs, or indices into a points field
inline graphs::Drawing drawing_from_json(const json& j) {
    graphs::Drawing d;
    d.graph = graph_from_json(j.at("graph")).graph;
    std::vector<Point> pool;
    if (j.contains("points")) pool = point_set_from_json(j);
    for (const json& e : j.at("placement")) {
        if (e.is_number_integer()) {
            int idx = e.get<int>();
            if (idx < 0 || idx >= static_cast<int>(pool.size()))
                throw std::invalid_argument("placement index out of range of points");
            d.placement.push_back(pool[idx]);
        } else {
            d.placement.push_back(point_from_json(e));
        }
    }
    d.validate();
    return d;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

// CSV with a header row and optional trailing summary rows prefixed #summary
struct Csv {
    std::ostringstream body;
    std::size_t columns = 0;

    void header(const std::vector<std::string>& cols) {
        columns = cols.size();
        write(cols);
    }
    void row(const std::vector<std::string>& vals) {
        if (columns && vals.size() != columns) throw std::invalid_argument("csv row width mismatch");
        write(vals);
    }
    void summary(const std::vector<std::string>& vals) {
        std::vector<std::string> v = vals;
        v.insert(v.begin(), "#summary");
        write(v);
    }
    std::string str() const { return body.str(); }
    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << body.str();
    }

  private:
    void write(const std::vector<std::string>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i) body << (i ? "," : "") << vals[i];
        body << '\n';
    }
};

} // namespace untangle::io
