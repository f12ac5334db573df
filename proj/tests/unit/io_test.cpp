#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <untangle/io.hpp>

using namespace untangle;
using io::json;

TEST_CASE("rational strings round-trip") {
    CHECK(to_string(Rat(3, 7)) == "3/7");
    CHECK(to_string(Rat(-8, 4)) == "-2");
    CHECK(to_string(Rat(0)) == "0");
    CHECK(parse_rational("3/7") == Rat(3, 7));
    CHECK(parse_rational("-15") == Rat(-15));
    CHECK(parse_rational(to_string(Rat(-22, 6))) == Rat(-22, 6));
    CHECK_THROWS_AS(parse_rational("seven"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("points round-trip through json") {
    Point p{Rat(1, 3), Rat(-5)};
    json j = io::point_to_json(p);
    CHECK(j == json::array({"1/3", "-5"}));
    CHECK(io::point_from_json(j) == p);
    CHECK(io::point_from_json(json::array({4, -2})) == Point{4, -2});

    CHECK_THROWS_AS(io::point_from_json(json::array({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(io::point_from_json(json::object()), std::invalid_argument);
    CHECK_THROWS_AS(io::point_from_json(json::array({1.5, 2})), std::invalid_argument);
}

TEST_CASE("point sets round-trip through json") {
    std::vector<Point> pts = {{0, 0}, {Rat(7, 2), 1}, {-3, Rat(5, 9)}};
    json j = io::point_set_to_json(pts);
    CHECK(j["n"] == 3);
    CHECK(io::point_set_from_json(j) == pts);

    json bad = j;
    bad["n"] = 5;
    CHECK_THROWS_AS(io::point_set_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(io::point_set_from_json(json::object()), std::invalid_argument);

    json loose;
    loose["points"] = json::array({json::array({"1", "2"})});
    CHECK(io::point_set_from_json(loose) == std::vector<Point>{Point{1, 2}});
}

TEST_CASE("graphs round-trip through json") {
    graphs::Graph g = graphs::wheel_graph(6);
    io::GraphFile gf{g, "wheel", {{0, 1, 2}, {3, 4, 5}}};
    json j = io::graph_to_json(gf);
    io::GraphFile back = io::graph_from_json(j);
    CHECK(back.graph == g);
    CHECK(back.family == "wheel");
    CHECK(back.groups == gf.groups);

    json plain = io::graph_to_json(g);
    CHECK_FALSE(plain.contains("family"));
    io::GraphFile anon = io::graph_from_json(plain);
    CHECK(anon.graph == g);
    CHECK(anon.family.empty());
    CHECK(anon.groups.empty());

    json bad = plain;
    bad["edges"].push_back(json::array({1}));
    CHECK_THROWS_AS(io::graph_from_json(bad), std::invalid_argument);
    json neg;
    neg["n"] = -1;
    neg["edges"] = json::array();
    CHECK_THROWS_AS(io::graph_from_json(neg), std::invalid_argument);
}

TEST_CASE("drawings round-trip through json") {
    graphs::Drawing d;
    d.graph = graphs::complete_graph(4);
    d.placement = {{0, 0}, {6, 0}, {7, 5}, {Rat(1, 2), 6}};
    json j = io::drawing_to_json(d, "complete");
    CHECK(j["graph"]["family"] == "complete");
    graphs::Drawing back = io::drawing_from_json(j);
    CHECK(back.graph == d.graph);
    CHECK(back.placement == d.placement);
}

TEST_CASE("drawing placement can index a point pool") {
    json j;
    j["graph"] = io::graph_to_json(graphs::path_graph(3));
    j["points"] = json::array({json::array({"0", "0"}), json::array({"3", "1/2"})});
    j["placement"] = json::array({1, 0, json::array({"9", "9"})});
    graphs::Drawing d = io::drawing_from_json(j);
    CHECK(d.placement[0] == Point{3, Rat(1, 2)});
    CHECK(d.placement[1] == Point{0, 0});
    CHECK(d.placement[2] == Point{9, 9});

    json oob = j;
    oob["placement"] = json::array({2, 0, 1});
    CHECK_THROWS_AS(io::drawing_from_json(oob), std::invalid_argument);
    json dup = j;
    dup["placement"] = json::array({0, 0, 1});
    CHECK_THROWS_AS(io::drawing_from_json(dup), std::invalid_argument);
    json wide = j;
    wide["placement"] = json::array({0, 1});
    CHECK_THROWS_AS(io::drawing_from_json(wide), std::invalid_argument);
}

TEST_CASE("json files round-trip on disk") {
    const std::string path = "io_test_roundtrip.json";
    json j = io::point_set_to_json({{1, 2}, {Rat(3, 4), -1}});
    io::write_json_file(path, j);
    CHECK(io::read_json_file(path) == j);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_json_file("definitely/not/here.json"), std::runtime_error);
}

TEST_CASE("csv tables enforce their width") {
    io::Csv csv;
    csv.header({"family", "n", "value"});
    csv.row({"wheel", "8", "5"});
    csv.row({"fan", "8", "6"});
    csv.summary({"max", "6"});
    CHECK(csv.str() == "family,n,value\nwheel,8,5\nfan,8,6\n#summary,max,6\n");
    CHECK_THROWS_AS(csv.row({"too", "short"}), std::invalid_argument);

    io::Csv bare;
    bare.row({"a", "b"}); // no header, no width to enforce
    CHECK(bare.str() == "a,b\n");
}
