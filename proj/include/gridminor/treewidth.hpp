#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridminor/graph.hpp"
#include "gridminor/problem_graph.hpp"

namespace gridminor {

/// Tree of vertex bags. Bag ids are 1-based: bags[i] holds bag i+1.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;            // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;   // 1-based bag ids

    int bag_count() const { return static_cast<int>(bags.size()); }
    int width() const;
};

/// (lower, upper) bounds on the treewidth of F(m,c): exactly c for a single
/// cell, otherwise cm <= treewidth <= cm+c-1.
std::pair<int, int> treewidth_bounds(int m, int c);

/// Explicit width-(cm+c-1) decomposition of F(m,c) for m >= 2: per column, a
/// walk-down family keeping one whole cell per bag, then a transition family
/// swapping right halves of horizontally adjacent cells one row at a time.
/// Exactly 2m^2 - m bags of exactly cm+c vertices. For m = 1 the standard
/// width-c path decomposition of K_{c,c} is returned instead.
TreeDecomposition build_tree_decomposition(int m, int c);

/// Max over the min-degree peel sequence; a sound treewidth lower bound.
int degeneracy_lower_bound(const Graph& g);
int degeneracy_lower_bound(const ProblemGraph& p);

enum class Screening { EmbeddableByConstruction, Rejected, Unknown };

struct ScreeningVerdict {
    Screening verdict = Screening::Unknown;
    std::string reason;  // cites the rule applied, e.g. "cor1 degeneracy=24 >= 20"
};

/// Screens a problem graph against F(m,c): rejects when the degeneracy bound
/// certifies too-large treewidth, when the graph is a complete graph or exact
/// grid beyond the fabric's capacity, and accepts by construction when it
/// fits inside K_{cm+1}. Everything else is Unknown.
ScreeningVerdict screen_problem(const ProblemGraph& p, int m, int c);

/// Exact-structure grid recognition: (rows, cols) if g is precisely a grid
/// graph, otherwise nullopt. Detecting grid *minors* is out of scope.
std::optional<std::pair<int, int>> recognize_grid(const Graph& g);

std::string write_tree_decomposition(const TreeDecomposition& td);

}  // namespace gridminor
