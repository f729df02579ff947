#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gridminor/graph.hpp"

namespace gridminor {

/// Problem graph derived from a QUBO instance: simple, undirected, vertices
/// 1..n matching QUBO variables. Weights are carried for pass-through but are
/// not consumed by any embedding algorithm (parameter setting is a separate
/// concern).
struct ProblemGraph {
    Graph graph;
    std::vector<double> vertex_weights;                 // index 0 unused
    std::map<std::pair<int, int>, double> edge_weights;  // keyed (min,max)

    int vertex_count() const { return graph.vertex_count(); }

    friend bool operator==(const ProblemGraph&, const ProblemGraph&) = default;
};

}  // namespace gridminor
