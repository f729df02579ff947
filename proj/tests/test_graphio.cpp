#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridminor/graphio.hpp"

using namespace gridminor;

TEST_CASE("qubo reader") {
    ProblemGraph p = read_qubo("qubo 2\n1 2 0.5\n");
    CHECK(p.vertex_count() == 2);
    CHECK(p.graph.has_edge(1, 2));
    CHECK(p.edge_weights.at({1, 2}) == doctest::Approx(0.5));

    // Diagonal entries are vertex weights, not edges.
    ProblemGraph diag = read_qubo("qubo 3\n1 1 1.0\n");
    CHECK(diag.vertex_count() == 3);
    CHECK(diag.graph.edge_count() == 0);
    CHECK(diag.vertex_weights[1] == doctest::Approx(1.0));

    // Zero entries carry no edge.
    ProblemGraph zero = read_qubo("qubo 2\n1 2 0.0\n");
    CHECK(zero.graph.edge_count() == 0);

    // Mirrored entries are summed.
    ProblemGraph sym = read_qubo("qubo 2\n1 2 0.5\n2 1 0.25\n");
    CHECK(sym.edge_weights.at({1, 2}) == doctest::Approx(0.75));
    CHECK(sym.graph.has_edge(1, 2));

    CHECK_THROWS_AS(read_qubo("qubo 2\n1 3 1.0\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("qubo 2\n1 2 0.5\n1 2 0.5\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("qubo 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("graph 2\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("qubo 2\n1 2 zero\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        read_qubo("qubo 2\n\n1 2 bad\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("graph reader and writer") {
    ProblemGraph k3 = read_graph("graph 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.graph.edge_count() == 3);

    std::string text = "graph 4\ne 2 4\ne 1 3\n";
    ProblemGraph g = read_graph(text);
    ProblemGraph round = read_graph(write_graph(g));
    CHECK(round.graph == g.graph);

    CHECK_THROWS_AS(read_graph("graph 2\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(read_graph("graph 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(read_graph("graph 2\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_graph("graph 2\nedge 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_graph(""), ParseError);
}

TEST_CASE("fabric round trip") {
    Fabric f = Fabric(2, 2).with_dead({3, 9});
    std::string text = write_fabric(f);
    CHECK(text == "fabric 2 2\ndead 3\ndead 9\n");
    CHECK(read_fabric(text) == f);

    CHECK_THROWS_AS(read_fabric("fabric 2 2\ndead 3\ndead 3\n"), ParseError);
    CHECK_THROWS_AS(read_fabric("fabric 2 2\ndead 99\n"), ParseError);
    CHECK_THROWS_AS(read_fabric("fabric 0 2\n"), ParseError);
    CHECK_THROWS_AS(read_fabric("fabric 2\n"), ParseError);
}

TEST_CASE("embedding round trip") {
    EmbeddingRecord rec;
    rec.n_p = 5;
    rec.m = 1;
    rec.c = 4;
    rec.provenance = "clique";
    rec.chains = {{1, 5}, {2, 6}, {3, 7}, {4}, {8}};
    std::string text = write_embedding(rec);
    CHECK(text == "embedding 5 1 4 clique\n"
                  "node 1: 1 5\n"
                  "node 2: 2 6\n"
                  "node 3: 3 7\n"
                  "node 4: 4\n"
                  "node 5: 8\n");
    CHECK(read_embedding(text) == rec);

    // Chain sizes 2,2,2,1,1 for the in-cell K_5.
    std::vector<size_t> sizes;
    for (const auto& ch : rec.chains) sizes.push_back(ch.size());
    CHECK(sizes == std::vector<size_t>{2, 2, 2, 1, 1});

    CHECK_THROWS_AS(read_embedding("embedding 1 1 4 x\nnode 1:\n"), ParseError);
    CHECK_THROWS_AS(read_embedding("embedding 1 1 4 x\n"), ParseError);  // missing node
    CHECK_THROWS_AS(read_embedding("embedding 1 1 4 x\nnode 1: 1\nnode 1: 2\n"),
                    ParseError);
    CHECK_THROWS_AS(read_embedding("embedding 1 1 4 x\nnode 2: 1\n"), ParseError);
    CHECK_THROWS_AS(read_embedding("embedding 1 1 4 x\nnode 1: 9\n"), ParseError);
    CHECK_THROWS_AS(read_embedding("embedding 1 1 4\nnode 1: 1\n"), ParseError);
}

TEST_CASE("node lines accepted in any order") {
    EmbeddingRecord rec = read_embedding(
        "embedding 2 1 1 greedy,UL,0\nnode 2: 2\nnode 1: 1\n");
    CHECK(rec.chains == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(rec.provenance == "greedy,UL,0");
}
