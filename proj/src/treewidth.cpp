#include "gridminor/treewidth.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "gridminor/fabric.hpp"

namespace gridminor {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::pair<int, int> treewidth_bounds(int m, int c) {
    if (m < 1 || c < 1) throw std::invalid_argument("treewidth_bounds requires m, c >= 1");
    if (m == 1) return {c, c};
    return {c * m, c * m + c - 1};
}

namespace {

// Right (left) half of cell (row, col), ascending vertex ids.
void push_half(std::vector<int>& bag, int row, int col, bool left, int m, int c) {
    int lo = left ? 1 : c + 1;
    for (int d = lo; d < lo + c; ++d) bag.push_back(label_to_index({row, col, d}, m, c));
}

}  // namespace

TreeDecomposition build_tree_decomposition(int m, int c) {
    if (m < 1 || c < 1)
        throw std::invalid_argument("build_tree_decomposition requires m, c >= 1");
    TreeDecomposition td;

    if (m == 1) {
        // Width-c path decomposition of the single K_{c,c}: all left vertices
        // plus one right vertex per bag.
        for (int t = 1; t <= c; ++t) {
            std::vector<int> bag;
            push_half(bag, 1, 1, true, m, c);
            bag.push_back(label_to_index({1, 1, c + t}, m, c));
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(std::move(bag));
            if (t > 1) td.tree_edges.emplace_back(t - 1, t);
        }
        return td;
    }

    // Per column j: a walk-down family W_j^i holding the right halves of
    // cells i..m and left halves of cells 1..i (cell i appears whole), then,
    // between columns, a transition family T_j^i holding the right halves of
    // cells i..m in column j and 1..i in column j+1. Every bag has exactly
    // (m+1)c = cm+c vertices; the families chain into the tree shape of the
    // construction: transitions hang off the column's head bag, and the next
    // column's head continues from the last transition bag.
    std::vector<int> column_head(static_cast<size_t>(m) + 1, 0);
    int id = 0;
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= m; ++i) {
            std::vector<int> bag;
            for (int r = i; r <= m; ++r) push_half(bag, r, j, false, m, c);
            for (int r = 1; r <= i; ++r) push_half(bag, r, j, true, m, c);
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(std::move(bag));
            ++id;
            if (i == 1)
                column_head[static_cast<size_t>(j)] = id;
            else
                td.tree_edges.emplace_back(id - 1, id);
        }
        if (j < m) {
            for (int i = 1; i <= m; ++i) {
                std::vector<int> bag;
                for (int r = i; r <= m; ++r) push_half(bag, r, j, false, m, c);
                for (int r = 1; r <= i; ++r) push_half(bag, r, j + 1, false, m, c);
                std::sort(bag.begin(), bag.end());
                td.bags.push_back(std::move(bag));
                ++id;
                td.tree_edges.emplace_back(i == 1 ? column_head[static_cast<size_t>(j)] : id - 1,
                                           id);
            }
        }
        if (j > 1)
            td.tree_edges.emplace_back(column_head[static_cast<size_t>(j)] - 1,
                                       column_head[static_cast<size_t>(j)]);
    }
    return td;
}

namespace {

// Min-degree peel; returns the max degree seen at removal time.
int degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n) + 1);
    std::vector<char> removed(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int v = 0;
        for (int u = 1; u <= n; ++u)
            if (!removed[static_cast<size_t>(u)] &&
                (v == 0 || deg[static_cast<size_t>(u)] < deg[static_cast<size_t>(v)]))
                v = u;
        best = std::max(best, deg[static_cast<size_t>(v)]);
        removed[static_cast<size_t>(v)] = 1;
        for (int w : g.neighbors(v))
            if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    return best;
}

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

int degeneracy_lower_bound(const Graph& g) { return degeneracy(g); }
int degeneracy_lower_bound(const ProblemGraph& p) { return degeneracy(p.graph); }

std::optional<std::pair<int, int>> recognize_grid(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return g.edge_count() == 0 ? std::make_optional(std::make_pair(1, 1))
                                           : std::nullopt;
    if (!is_connected(g)) return std::nullopt;

    auto bfs_dist = [&](int from) {
        std::vector<int> dist(static_cast<size_t>(n) + 1, -1);
        std::queue<int> q;
        dist[static_cast<size_t>(from)] = 0;
        q.push(from);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    q.push(v);
                }
        }
        return dist;
    };

    int min_deg = n;
    for (int v = 1; v <= n; ++v) min_deg = std::min(min_deg, g.degree(v));

    if (min_deg <= 1) {
        // Candidate 1-by-n path.
        if (g.edge_count() != n - 1) return std::nullopt;
        int ends = 0, end = 0;
        for (int v = 1; v <= n; ++v) {
            if (g.degree(v) > 2) return std::nullopt;
            if (g.degree(v) == 1) {
                ++ends;
                end = v;
            }
        }
        if (ends != 2) return std::nullopt;
        auto dist = bfs_dist(end);
        for (int v = 1; v <= n; ++v)
            if (dist[static_cast<size_t>(v)] >= n) return std::nullopt;
        return std::make_pair(1, n);
    }

    // Grids with both sides >= 2 have exactly four degree-2 corners.
    std::vector<int> corners;
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) == 2) corners.push_back(v);
    if (corners.size() != 4) return std::nullopt;

    int u = corners[0];
    auto du = bfs_dist(u);
    std::sort(corners.begin() + 1, corners.end(), [&](int a, int b) {
        return du[static_cast<size_t>(a)] < du[static_cast<size_t>(b)];
    });
    // corners[1], corners[2] sit at the ends of u's row and column.
    for (int pick = 1; pick <= 2; ++pick) {
        int v2 = corners[static_cast<size_t>(pick)];
        int rows = du[static_cast<size_t>(v2)] + 1;
        if (rows < 2 || n % rows != 0) continue;
        int cols = n / rows;
        auto dv = bfs_dist(v2);
        std::vector<char> taken(static_cast<size_t>(n) + 1, 0);
        std::vector<std::pair<int, int>> coord(static_cast<size_t>(n) + 1);
        bool ok = true;
        for (int x = 1; x <= n && ok; ++x) {
            int sum = du[static_cast<size_t>(x)] - dv[static_cast<size_t>(x)] + rows - 1;
            if (sum < 0 || sum % 2 != 0) { ok = false; break; }
            int a = sum / 2;
            int b = du[static_cast<size_t>(x)] - a;
            if (a < 0 || a >= rows || b < 0 || b >= cols) { ok = false; break; }
            int slot = a * cols + b + 1;
            if (taken[static_cast<size_t>(slot)]) { ok = false; break; }
            taken[static_cast<size_t>(slot)] = 1;
            coord[static_cast<size_t>(x)] = {a, b};
        }
        if (!ok) continue;
        if (g.edge_count() != 2 * rows * cols - rows - cols) continue;
        for (int x = 1; x <= n && ok; ++x)
            for (int y : g.neighbors(x)) {
                auto [ax, bx] = coord[static_cast<size_t>(x)];
                auto [ay, by] = coord[static_cast<size_t>(y)];
                if (std::abs(ax - ay) + std::abs(bx - by) != 1) { ok = false; break; }
            }
        if (ok) return std::make_pair(rows, cols);
    }
    return std::nullopt;
}

ScreeningVerdict screen_problem(const ProblemGraph& p, int m, int c) {
    if (m < 1 || c < 1) throw std::invalid_argument("screen_problem requires m, c >= 1");
    int n = p.vertex_count();
    int capacity = c * m + 1;    // largest clique the construction embeds
    int tw_cutoff = c * m + c;   // problems at or above this treewidth never embed

    int lb = degeneracy_lower_bound(p);
    if (lb >= tw_cutoff)
        return {Screening::Rejected, "cor1 degeneracy=" + std::to_string(lb) +
                                         " >= " + std::to_string(tw_cutoff)};
    if (n >= tw_cutoff + 1 && is_complete(p.graph))
        return {Screening::Rejected, "cor2 complete-order=" + std::to_string(n) +
                                         " >= " + std::to_string(tw_cutoff + 1)};
    if (auto grid = recognize_grid(p.graph)) {
        int side = std::min(grid->first, grid->second);
        if (side >= c * (m + 1))
            return {Screening::Rejected, "cor3 grid-side=" + std::to_string(side) +
                                             " >= " + std::to_string(c * (m + 1))};
    }
    if (n <= capacity)
        return {Screening::EmbeddableByConstruction,
                "construction order=" + std::to_string(n) +
                    " <= " + std::to_string(capacity)};
    return {Screening::Unknown, "band order=" + std::to_string(n) +
                                    " degeneracy=" + std::to_string(lb)};
}

std::string write_tree_decomposition(const TreeDecomposition& td) {
    std::string out =
        "td " + std::to_string(td.bag_count()) + " " + std::to_string(td.width()) + "\n";
    for (int i = 1; i <= td.bag_count(); ++i) {
        out += "bag " + std::to_string(i) + ":";
        for (int v : td.bags[static_cast<size_t>(i - 1)]) out += " " + std::to_string(v);
        out += "\n";
    }
    for (auto [x, y] : td.tree_edges)
        out += "tedge " + std::to_string(x) + " " + std::to_string(y) + "\n";
    return out;
}

}  // namespace gridminor
