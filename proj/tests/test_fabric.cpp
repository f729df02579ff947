#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gridminor/fabric.hpp"
#include "gridminor/rng.hpp"
#include "support/oracles.hpp"

using namespace gridminor;
namespace oracle = gridminor::testing;

TEST_CASE("fabric construction and edge counts") {
    Fabric f44(4, 4);
    CHECK(f44.vertex_count() == 128);
    CHECK(f44.edge_count() == 352);  // frozen from the brute-force count below
    CHECK(oracle::brute_edge_count(4, 4) == 352);

    Fabric f11(1, 1);
    CHECK(f11.vertex_count() == 2);
    CHECK(f11.edge_count() == 1);

    Fabric f14(1, 4);
    CHECK(f14.vertex_count() == 8);
    CHECK(f14.edge_count() == 16);

    CHECK_THROWS_AS(Fabric(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Fabric(4, 0), std::invalid_argument);
}

TEST_CASE("edge count formula matches brute enumeration") {
    for (auto [m, c] : {std::pair{1, 1}, {1, 3}, {2, 2}, {3, 2}, {4, 4}, {2, 5}}) {
        Fabric f(m, c);
        long long expected = static_cast<long long>(m) * m * c * c +
                             2LL * c * m * (m - 1);
        CHECK(f.edge_count() == expected);
        CHECK(oracle::brute_edge_count(m, c) == expected);
    }
}

TEST_CASE("label/index bijection") {
    CHECK(label_to_index({1, 1, 1}, 4, 4) == 1);
    CHECK(label_to_index({2, 3, 5}, 4, 4) == 53);  // 32 + 16 + 5
    CHECK(label_to_index({4, 4, 8}, 4, 4) == 128);
    CHECK(index_to_label(53, 4, 4) == CellLabel{2, 3, 5});

    for (auto [m, c] : {std::pair{1, 1}, {2, 2}, {3, 4}, {5, 3}})
        for (int n = 1; n <= 2 * c * m * m; ++n)
            CHECK(label_to_index(index_to_label(n, m, c), m, c) == n);

    CHECK_THROWS_AS(label_to_index({0, 1, 1}, 4, 4), std::out_of_range);
    CHECK_THROWS_AS(label_to_index({1, 5, 1}, 4, 4), std::out_of_range);
    CHECK_THROWS_AS(label_to_index({1, 1, 9}, 4, 4), std::out_of_range);
    CHECK_THROWS_AS(index_to_label(0, 4, 4), std::out_of_range);
    CHECK_THROWS_AS(index_to_label(129, 4, 4), std::out_of_range);
}

TEST_CASE("neighbors") {
    Fabric f(2, 2);
    // v_{1,1}^1: two intra-cell partners plus its image one row below.
    int v111 = label_to_index({1, 1, 1}, 2, 2);
    std::vector<int> expected{label_to_index({1, 1, 3}, 2, 2),
                              label_to_index({1, 1, 4}, 2, 2),
                              label_to_index({2, 1, 1}, 2, 2)};
    CHECK(f.neighbors(v111) == expected);

    Fabric cell(1, 3);
    CHECK(cell.neighbors(1) == std::vector<int>{4, 5, 6});

    Fabric faulty = f.with_dead({label_to_index({1, 1, 3}, 2, 2)});
    CHECK(faulty.neighbors(v111) == std::vector<int>{label_to_index({1, 1, 4}, 2, 2),
                                                     label_to_index({2, 1, 1}, 2, 2)});
    CHECK(faulty.neighbors(label_to_index({1, 1, 3}, 2, 2)).empty());

    CHECK_THROWS_AS(f.neighbors(0), std::out_of_range);
    CHECK_THROWS_AS(f.neighbors(17), std::out_of_range);
}

TEST_CASE("neighbors agree with the coupling-rule oracle") {
    SplitMix64 rng(7);
    for (auto [m, c] : {std::pair{2, 2}, {3, 3}, {4, 4}}) {
        Fabric f = Fabric(m, c).with_random_faults(0.15, rng.next());
        for (int v = 1; v <= f.vertex_count(); ++v) {
            std::set<int> expected;
            if (f.is_alive(v))
                for (int w = 1; w <= f.vertex_count(); ++w)
                    if (w != v && f.is_alive(w) &&
                        oracle::spec_adjacent(index_to_label(v, m, c),
                                              index_to_label(w, m, c), c))
                        expected.insert(w);
            auto got = f.neighbors(v);
            CHECK(std::set<int>(got.begin(), got.end()) == expected);
        }
    }
}

TEST_CASE("degree bounds") {
    for (auto [m, c] : {std::pair{2, 2}, {3, 4}, {4, 1}}) {
        Fabric f(m, c);
        for (int v = 1; v <= f.vertex_count(); ++v) {
            int deg = static_cast<int>(f.neighbors(v).size());
            CHECK(deg >= c);
            CHECK(deg <= c + 2);
        }
    }
    Fabric cell(1, 5);
    for (int v = 1; v <= cell.vertex_count(); ++v)
        CHECK(cell.neighbors(v).size() == 5);
}

TEST_CASE("fault injection") {
    Fabric f(2, 2);
    CHECK(f.with_dead({}) == f);

    Fabric big(32, 4);
    Fabric faulted = big.with_random_faults(0.02, 99);
    CHECK(big.vertex_count() - faulted.alive_count() == 164);  // round(0.02 * 8192)

    CHECK(big.with_random_faults(0.02, 99) == faulted);
    CHECK(big.with_random_faults(0.02, 100) != faulted);

    CHECK_THROWS_AS(f.with_random_faults(-0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.with_random_faults(1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.with_dead({17}), std::out_of_range);

    // Monotone: a second fault pass never resurrects anything.
    Fabric once = f.with_dead({1, 5});
    Fabric twice = once.with_random_faults(0.5, 3);
    for (int v : {1, 5}) CHECK_FALSE(twice.is_alive(v));
    CHECK(once.with_dead({1, 5}) == once);  // idempotent
}

TEST_CASE("flips") {
    SplitMix64 rng(11);
    for (auto [m, c] : {std::pair{2, 2}, {3, 2}, {4, 4}}) {
        Fabric f = Fabric(m, c).with_random_faults(0.2, rng.next());
        CHECK(f.flipped(true, false).flipped(true, false) == f);
        CHECK(f.flipped(false, true).flipped(false, true) == f);
        CHECK(f.flipped(true, true).flipped(true, true) == f);
        CHECK(f.flipped(true, true) == f.flipped(true, false).flipped(false, true));
        CHECK(f.flipped(true, false).alive_count() == f.alive_count());
        CHECK(f.flipped(true, false).edge_count() == f.edge_count());
        CHECK(f.flipped(false, true).edge_count() == f.edge_count());
    }

    Fabric perfect(3, 2);
    CHECK(perfect.flipped(true, false) == perfect);
    CHECK(perfect.flipped(false, true) == perfect);

    Fabric f(2, 2);
    Fabric dead11 = f.with_dead({label_to_index({1, 1, 1}, 2, 2)});
    Fabric flipped = dead11.flipped(true, false);
    CHECK(flipped.dead_vertices() == std::vector<int>{label_to_index({1, 2, 1}, 2, 2)});
}

TEST_CASE("subgrid") {
    Fabric f(4, 4);
    CHECK(f.subgrid(0) == f);

    Fabric sub = f.subgrid(1);
    CHECK(sub.m() == 3);
    CHECK(sub.vertex_count() == 72);
    CHECK(sub.is_perfect());

    // An entirely dead first cell row is excised by one drop.
    std::vector<int> row1;
    for (int b = 1; b <= 4; ++b)
        for (int d = 1; d <= 8; ++d) row1.push_back(label_to_index({1, b, d}, 4, 4));
    Fabric damaged = f.with_dead(row1);
    CHECK_FALSE(damaged.subgrid(0).is_perfect());
    // Dropping row+column 1 leaves dead cells only if they sit deeper.
    Fabric trimmed = damaged.subgrid(1);
    CHECK(trimmed.is_perfect());
    CHECK(trimmed.vertex_count() == 72);

    // Aliveness is carried over at shifted coordinates.
    Fabric deep = f.with_dead({label_to_index({3, 4, 5}, 4, 4)});
    CHECK(deep.subgrid(1).dead_vertices() ==
          std::vector<int>{label_to_index({2, 3, 5}, 3, 4)});
    CHECK(deep.subgrid(1).alive_count() <= deep.alive_count());

    CHECK_THROWS_AS(f.subgrid(4), std::invalid_argument);
    CHECK_THROWS_AS(f.subgrid(-1), std::invalid_argument);
}

TEST_CASE("adjacency symmetry") {
    SplitMix64 rng(5);
    Fabric f = Fabric(3, 3).with_random_faults(0.2, rng.next());
    for (int v = 1; v <= f.vertex_count(); ++v)
        for (int w : f.neighbors(v)) {
            auto back = f.neighbors(w);
            CHECK(std::binary_search(back.begin(), back.end(), v));
        }
}
