#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "gridminor/embedding.hpp"
#include "gridminor/fabric.hpp"
#include "gridminor/verify.hpp"

using namespace gridminor;

namespace {

// Chain-size census: exactly two chains of m vertices, cm-1 of 2m, total 2cm^2.
void check_census(const CliqueEmbedding& e) {
    int m = e.m, c = e.c;
    REQUIRE(e.order() == c * m + 1);
    std::map<size_t, int> sizes;
    std::set<int> used;
    size_t total = 0;
    for (const Chain& ch : e.chains) {
        ++sizes[ch.vertices.size()];
        total += ch.vertices.size();
        used.insert(ch.vertices.begin(), ch.vertices.end());
    }
    CHECK(sizes[static_cast<size_t>(m)] == 2);
    if (c * m - 1 > 0) CHECK(sizes[static_cast<size_t>(2 * m)] == c * m - 1);
    CHECK(total == static_cast<size_t>(2 * c * m * m));
    CHECK(used.size() == total);  // full coverage, no overlap
}

}  // namespace

TEST_CASE("single cell K_5") {
    CliqueEmbedding e = embed_clique_perfect(1, 4);
    REQUIRE(e.order() == 5);
    CHECK(e.chains[0].vertices == std::vector<int>{1, 5});
    CHECK(e.chains[1].vertices == std::vector<int>{2, 6});
    CHECK(e.chains[2].vertices == std::vector<int>{3, 7});
    CHECK(e.chains[3].vertices == std::vector<int>{4});
    CHECK(e.chains[4].vertices == std::vector<int>{8});
    CHECK(e.chains[3].kind == ChainKind::VerticalHalf);
    CHECK(e.chains[4].kind == ChainKind::HorizontalHalf);
    CHECK(verify_minor_embedding(Fabric(1, 4), complete_graph(5), chain_vertex_lists(e)).pass);
}

TEST_CASE("K_17 on the 4x4 grid") {
    CliqueEmbedding e = embed_clique_perfect(4, 4);
    check_census(e);
    CHECK(verify_minor_embedding(Fabric(4, 4), complete_graph(17), chain_vertex_lists(e)).pass);
}

TEST_CASE("K_3 on F(2,1)") {
    CliqueEmbedding e = embed_clique_perfect(2, 1);
    REQUIRE(e.order() == 3);
    check_census(e);  // sizes: one of 4, two of 2
    CHECK(verify_minor_embedding(Fabric(2, 1), complete_graph(3), chain_vertex_lists(e)).pass);
}

TEST_CASE("census and validity across the family") {
    for (auto [m, c] : {std::pair{1, 1}, {1, 4}, {2, 2}, {3, 4}, {5, 2}, {2, 5}}) {
        CAPTURE(m);
        CAPTURE(c);
        CliqueEmbedding e = embed_clique_perfect(m, c);
        check_census(e);
        CHECK(verify_minor_embedding(Fabric(m, c), complete_graph(c * m + 1),
                                     chain_vertex_lists(e))
                  .pass);
    }
    CHECK_THROWS_AS(embed_clique_perfect(0, 1), std::invalid_argument);
}

TEST_CASE("extension matches the fresh construction") {
    for (auto [m, c] : {std::pair{1, 4}, {2, 2}, {3, 4}}) {
        CliqueEmbedding grown = extend_embedding(embed_clique_perfect(m, c));
        CHECK(grown == embed_clique_perfect(m + 1, c));
    }
}

TEST_CASE("extension from K_13 on 3x3 reaches K_17") {
    CliqueEmbedding base = embed_clique_perfect(3, 4);
    REQUIRE(base.order() == 13);
    CliqueEmbedding grown = extend_embedding(base);
    CHECK(grown.order() == 17);
    CHECK(grown == embed_clique_perfect(4, 4));
}

TEST_CASE("extension from the single cell: new chains have 4 vertices") {
    CliqueEmbedding grown = extend_embedding(embed_clique_perfect(1, 4));
    REQUIRE(grown.order() == 9);
    CHECK(grown == embed_clique_perfect(2, 4));
    for (size_t k = 5; k < 9; ++k) CHECK(grown.chains[k].vertices.size() == 4);
}

TEST_CASE("extension is conservative on labels") {
    int m = 3, c = 2;
    CliqueEmbedding base = embed_clique_perfect(m, c);
    CliqueEmbedding grown = extend_embedding(base);
    for (size_t k = 0; k < base.chains.size(); ++k) {
        std::set<std::tuple<int, int, int>> before, after;
        for (int v : base.chains[k].vertices) {
            CellLabel l = index_to_label(v, m, c);
            before.insert({l.row, l.col, l.pos});
        }
        for (int v : grown.chains[k].vertices) {
            CellLabel l = index_to_label(v, m + 1, c);
            after.insert({l.row, l.col, l.pos});
        }
        for (const auto& lbl : before) CHECK(after.count(lbl) == 1);
        CHECK(after.size() == before.size() + (base.chains[k].kind == ChainKind::Full ? 2 : 1));
    }
}

TEST_CASE("extension rejects non-canonical input") {
    CliqueEmbedding e = embed_clique_perfect(2, 2);
    e.chains[0].vertices.pop_back();
    CHECK_THROWS_AS(extend_embedding(e), std::invalid_argument);
}

TEST_CASE("adjacency witnesses sit in crossing cells") {
    int m = 3, c = 2;
    CliqueEmbedding e = embed_clique_perfect(m, c);
    Fabric f(m, c);
    // For two full chains on diagonals i and j, a witnessing edge must exist
    // inside cell (i,j) or (j,i).
    for (size_t a = 0; a < e.chains.size(); ++a)
        for (size_t b = a + 1; b < e.chains.size(); ++b) {
            const Chain& x = e.chains[a];
            const Chain& y = e.chains[b];
            std::set<int> xs(x.vertices.begin(), x.vertices.end());
            bool witness_in_expected_cell = false;
            for (int v : y.vertices)
                for (int w : f.neighbors(v))
                    if (xs.count(w)) {
                        CellLabel lw = index_to_label(w, m, c);
                        CellLabel lv = index_to_label(v, m, c);
                        if (lw.row == lv.row && lw.col == lv.col) {
                            int xd = x.kind == ChainKind::HorizontalHalf ? x.h_diag : x.v_diag;
                            int yd = y.kind == ChainKind::HorizontalHalf ? y.h_diag : y.v_diag;
                            bool crossing = (lw.row == xd && lw.col == yd) ||
                                            (lw.row == yd && lw.col == xd) ||
                                            (lw.row == 1 && lw.col == 1);
                            if (crossing) witness_in_expected_cell = true;
                        }
                    }
            CHECK(witness_in_expected_cell);
        }
}
