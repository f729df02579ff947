#pragma once

// Test-side oracles, kept independent of the implementation paths they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <vector>

#include "gridminor/fabric.hpp"
#include "gridminor/graph.hpp"
#include "gridminor/rng.hpp"

namespace gridminor::testing {

// Coupling rule stated directly: intra-cell complete bipartite, left halves
// vertically adjacent between rows, right halves horizontally between columns.
inline bool spec_adjacent(const CellLabel& u, const CellLabel& v, int c) {
    bool u_left = u.pos <= c, v_left = v.pos <= c;
    if (u.row == v.row && u.col == v.col) return u_left != v_left;
    if (u_left && v_left && u.pos == v.pos && u.col == v.col)
        return std::abs(u.row - v.row) == 1;
    if (!u_left && !v_left && u.pos == v.pos && u.row == v.row)
        return std::abs(u.col - v.col) == 1;
    return false;
}

inline long long brute_edge_count(int m, int c) {
    int total = 2 * c * m * m;
    long long edges = 0;
    for (int a = 1; a <= total; ++a)
        for (int b = a + 1; b <= total; ++b)
            if (spec_adjacent(index_to_label(a, m, c), index_to_label(b, m, c), c)) ++edges;
    return edges;
}

// Exact treewidth by dynamic programming over elimination prefixes:
// Q(S, v) = vertices outside S+v reachable from v through S. Hosts <= ~14.
class TreewidthOracle {
public:
    explicit TreewidthOracle(const Graph& g) : g_(g), n_(g.vertex_count()) {
        adj_.assign(static_cast<size_t>(n_), 0);
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<size_t>(u - 1)] |= uint32_t{1} << (v - 1);
            adj_[static_cast<size_t>(v - 1)] |= uint32_t{1} << (u - 1);
        }
    }

    int treewidth() {
        if (n_ == 0) return -1;
        memo_.assign(size_t{1} << n_, -2);
        return solve((uint32_t{1} << n_) - 1);
    }

private:
    int fill_degree(uint32_t eliminated, int v) const {
        // Reach from v through eliminated vertices only.
        uint32_t vbit = uint32_t{1} << (v - 1);
        uint32_t grow = vbit;
        for (;;) {
            uint32_t nb = 0;
            for (uint32_t rest = grow; rest;) {
                int x = std::countr_zero(rest);
                rest &= rest - 1;
                nb |= adj_[static_cast<size_t>(x)];
            }
            uint32_t next = grow | (nb & eliminated) | vbit;
            if (next == grow) break;
            grow = next;
        }
        uint32_t nb = 0;
        for (uint32_t rest = grow; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            nb |= adj_[static_cast<size_t>(x)];
        }
        return std::popcount(nb & ~grow & ~eliminated);
    }

    int solve(uint32_t s) {
        if (s == 0) return -1;
        int& slot = memo_[s];
        if (slot != -2) return slot;
        int best = n_;
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            uint32_t prev = s & ~(uint32_t{1} << (v - 1));
            best = std::min(best, std::max(solve(prev), fill_degree(prev, v)));
        }
        return slot = best;
    }

    const Graph& g_;
    int n_;
    std::vector<uint32_t> adj_;
    std::vector<int> memo_;
};

inline int brute_treewidth(const Graph& g) { return TreewidthOracle(g).treewidth(); }

inline Graph random_graph(SplitMix64& rng, int n, double edge_prob) {
    Graph g(n);
    uint64_t cut = static_cast<uint64_t>(edge_prob * double(uint64_t{1} << 32));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if ((rng.next() >> 32) < cut) g.add_edge(u, v);
    return g;
}

// Random contraction/deletion minor of g, with at least one vertex left.
inline Graph random_minor(SplitMix64& rng, const Graph& g) {
    Graph cur = g;
    int steps = static_cast<int>(rng.below(static_cast<uint64_t>(g.vertex_count())));
    for (int s = 0; s < steps; ++s) {
        auto edges = cur.edges();
        if (edges.empty() || cur.vertex_count() <= 1) break;
        uint64_t pick = rng.below(edges.size() + 1);
        if (pick == edges.size()) {
            // delete a random edge
            auto [u, v] = edges[rng.below(edges.size())];
            Graph next(cur.vertex_count());
            for (auto [x, y] : edges)
                if (!(x == u && y == v)) next.add_edge(x, y);
            cur = next;
        } else {
            auto [u, v] = edges[pick];
            Graph next(cur.vertex_count() - 1);
            auto renum = [v = v](int w) { return w > v ? w - 1 : w; };
            for (auto [x, y] : edges) {
                if (x == v) x = u;
                if (y == v) y = u;
                if (x != y) next.add_edge(renum(x), renum(y));
            }
            cur = next;
        }
    }
    return cur;
}

}  // namespace gridminor::testing
