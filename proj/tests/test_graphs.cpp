#include <catch2/catch_amalgamated.hpp>

#include "tutte/graph.hpp"

using namespace tutte;

namespace {

MultiGraph triangle() {
    MultiGraph g({"1", "2", "3"});
    g.add_edge("1", "2");
    g.add_edge("1", "3");
    g.add_edge("2", "3");
    return g;
}

MultiGraph path4() {
    MultiGraph g({"1", "2", "3", "4"});
    g.add_edge("1", "2");
    g.add_edge("2", "3");
    g.add_edge("3", "4");
    return g;
}

}  // namespace

TEST_CASE("vertices, edges and default weights") {
    MultiGraph g = triangle();
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.vertex_ids() == std::vector<std::string>{"1", "2", "3"});
    CHECK(g.edges()[0].weight == MultiPoly::var("v:0"));
    CHECK(g.edges()[2].weight == MultiPoly::var("v:2"));
    CHECK(g.vertex_index("2") == 1);
    CHECK_THROWS_AS(g.vertex_index("7"), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph({"1", "1"}), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("loops and parallel edges are allowed") {
    MultiGraph g({"1", "2"});
    g.add_edge("1", "2");
    g.add_edge("1", "2");
    g.add_edge("2", "2");
    CHECK(g.m() == 3);
    CHECK(g.has_loops());
    CHECK(g.loop_at(1));
    CHECK_FALSE(g.loop_at(0));
}

TEST_CASE("component counting over edge subsets") {
    MultiGraph g = path4();
    CHECK(g.count_components(0) == 4);
    CHECK(g.count_components(0b111) == 1);
    CHECK(g.count_components(0b101) == 2);
    CHECK(g.cyclomatic(0b111) == 0);
    MultiGraph t = triangle();
    CHECK(t.cyclomatic(0b111) == 1);
    CHECK(t.cyclomatic(0b011) == 0);

    auto p = g.components_partition(0b101);
    CHECK(p.str() == "{1,2|3,4}");
    CHECK(g.components_partition(0).block_count() == 4);
}

TEST_CASE("induced subgraphs keep weights and order") {
    MultiGraph t = triangle();
    MultiGraph h = t.induced(0b101);  // vertices 1 and 3
    CHECK(h.vertex_ids() == std::vector<std::string>{"1", "3"});
    REQUIRE(h.m() == 1);
    CHECK(h.edges()[0].weight == MultiPoly::var("v:1"));
    CHECK(t.induced(0).n() == 0);
    CHECK(t.induced(0b111).m() == 3);

    MultiGraph l({"1"});
    l.add_edge("1", "1");
    CHECK(l.induced(0b1).m() == 1);
}

TEST_CASE("edges between a vertex set and one vertex") {
    MultiGraph g = path4();
    CHECK(g.edges_between(0b0011, 2) == std::vector<int>{1});
    CHECK(g.edges_between(0b0001, 2).empty());
    CHECK(g.edges_between(0b0101, 3) == std::vector<int>{2});
}

TEST_CASE("independent blow-up builds complete multipartite bundles") {
    MultiGraph k2({"1", "2"});
    k2.add_edge("1", "2", MultiPoly::var("v"));
    MultiGraph b = k2.blowup_independent({2, 3});
    CHECK(b.n() == 5);
    CHECK(b.m() == 6);
    CHECK(b.vertex_ids() ==
          std::vector<std::string>{"1#1", "1#2", "2#1", "2#2", "2#3"});
    for (const auto& e : b.edges()) CHECK(e.weight == MultiPoly::var("v"));
    CHECK_FALSE(b.has_loops());

    // count 1 everywhere reproduces the base graph shape
    MultiGraph same = k2.blowup_independent({1, 1});
    CHECK(same.m() == 1);
    CHECK(same.vertex_ids() == std::vector<std::string>{"1#1", "2#1"});

    CHECK(k2.blowup_independent({0, 2}).m() == 0);
    CHECK_THROWS_AS(k2.blowup_independent({1}), std::invalid_argument);
    CHECK_THROWS_AS(k2.blowup_independent({-1, 2}), std::invalid_argument);
    MultiGraph loop({"1"});
    loop.add_edge("1", "1");
    CHECK_THROWS_AS(loop.blowup_independent({2}), std::invalid_argument);
}

TEST_CASE("clique blow-up adds labeled internal edges") {
    MultiGraph k2({"1", "2"});
    k2.add_edge("1", "2", MultiPoly::var("v"));
    MultiGraph b = k2.blowup_clique({2, 2});
    CHECK(b.n() == 4);
    CHECK(b.m() == 4 + 1 + 1);
    int w1 = 0, w2 = 0;
    for (const auto& e : b.edges()) {
        if (e.weight == MultiPoly::var("w:1")) ++w1;
        if (e.weight == MultiPoly::var("w:2")) ++w2;
    }
    CHECK(w1 == 1);
    CHECK(w2 == 1);
}

TEST_CASE("json round trip") {
    auto j = nlohmann::json::parse(R"({
      "vertices": ["a", "b", "c"],
      "edges": [["a", "b"], ["b", "c", "u"], ["a", "c", "-1"], ["a", "c", 2]]
    })");
    MultiGraph g = MultiGraph::from_json(j);
    CHECK(g.n() == 3);
    CHECK(g.m() == 4);
    CHECK(g.edges()[0].weight == MultiPoly::var("v:0"));
    CHECK(g.edges()[1].weight == MultiPoly::var("u"));
    CHECK(g.edges()[2].weight == MultiPoly(-1));
    CHECK(g.edges()[3].weight == MultiPoly(2));

    auto out = g.to_json();
    CHECK(out["vertices"] == j["vertices"]);
    CHECK(out["edges"][1] == nlohmann::json({"b", "c", "u"}));
    CHECK(g.fingerprint() == g.fingerprint());

    CHECK_THROWS_AS(MultiGraph::from_json(nlohmann::json::parse(
                        R"({"vertices": ["a"], "edges": [["a", "z"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph::from_json(nlohmann::json::parse(
                        R"({"vertices": ["a", "b"], "edges": [["a"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph::from_json(nlohmann::json::parse(
                        R"({"vertices": ["a", "b"], "edges": [["a", "b", ""]]})")),
                    std::invalid_argument);
}
