#pragma once

#include <utility>
#include <vector>

namespace gridminor {

/// Simple undirected graph. Vertices are the integers 1..n, matching the
/// labeling used by every text format in the toolkit; there is no vertex 0.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    /// Inserts {u,v}. Loops and out-of-range endpoints throw; duplicate
    /// insertions are ignored, keeping the graph simple.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;  // adj_[v] sorted ascending; index 0 unused
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);

bool is_connected(const Graph& g);

}  // namespace gridminor
