#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridminor/fabric.hpp"
#include "gridminor/graph.hpp"
#include "gridminor/treewidth.hpp"

namespace gridminor {

enum class Rule {
    Disjointness,
    Connectivity,
    EdgeCoverage,
    Aliveness,
    BagCoverVertex,
    BagCoverEdge,
    BagPathConnectivity,
};

const char* rule_name(Rule r);

struct Violation {
    Rule rule;
    std::string witness;
};

/// Validation outcome. At most one violation (the first witness found) is
/// recorded per rule. All checks recompute from raw adjacency; producer
/// metadata is never trusted.
struct VerificationReport {
    bool pass = true;
    std::vector<Violation> violations;
    int width = -1;  // tree decompositions only

    /// One line per violation ("FAIL <rule> <witness>"), or a PASS summary.
    std::string render() const;
};

/// Checks a minor embedding: chains nonempty and pairwise disjoint, each
/// chain inducing a connected alive subgraph of the host, and every problem
/// edge witnessed by a host edge between the two chains (both endpoints
/// alive). Dead fabric vertices are excluded from the usable host.
VerificationReport verify_minor_embedding(const Graph& host, const Graph& problem,
                                          const std::vector<std::vector<int>>& chains);
VerificationReport verify_minor_embedding(const Fabric& host, const Graph& problem,
                                          const std::vector<std::vector<int>>& chains);

/// Checks a subgraph embedding: injectivity plus edge preservation.
/// `map[u]` is the host vertex for problem vertex u (index 0 unused).
VerificationReport verify_subgraph_embedding(const Graph& host, const Graph& problem,
                                             const std::vector<int>& map);
VerificationReport verify_subgraph_embedding(const Fabric& host, const Graph& problem,
                                             const std::vector<int>& map);

/// Checks vertex coverage, edge coverage, and the running-intersection
/// property, and reports width = max bag size - 1. A malformed tree
/// (bad indices, disconnected, cyclic) throws.
VerificationReport verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);
VerificationReport verify_tree_decomposition(const Fabric& f, const TreeDecomposition& td);

/// Exhaustive minor-containment oracle: does h embed in g as a minor?
/// Searches all assignments of g's vertices to connected, disjoint branch
/// sets covering h's edges; returns witness chains on success. Exponential;
/// guarded at 12 host vertices.
std::optional<std::vector<std::vector<int>>> is_minor_bruteforce(const Graph& h,
                                                                 const Graph& g);

Graph fabric_graph(const Fabric& f);  // alive-induced host graph

}  // namespace gridminor
