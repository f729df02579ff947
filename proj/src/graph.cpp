#include "gridminor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gridminor {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1," +
                                std::to_string(n_) + "]");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid sides must be positive");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

}  // namespace gridminor
