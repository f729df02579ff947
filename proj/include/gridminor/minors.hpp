#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridminor/graph.hpp"

namespace gridminor {

/// One maximal minor plus its contraction history: catalog vertex k maps to
/// the set of original host vertices merged into it.
struct CatalogEntry {
    Graph graph;
    std::vector<std::vector<int>> history;  // history[k-1] sorted ascending
};

/// Antichain of maximal minors: no entry is a subgraph of another, and every
/// contraction-only minor of the host is a subgraph of some entry. Entries
/// are ordered by decreasing order, then canonical form.
struct MinorCatalog {
    std::vector<CatalogEntry> entries;
};

/// Breadth-first edge contraction with per-level isomorphism dedup; a
/// candidate survives only if it is not a subgraph of a graph already kept.
/// Stops at the first level contributing nothing new. Exponential by nature;
/// guarded at 10 vertices.
MinorCatalog enumerate_maximal_minors(const Graph& g);

/// Injective edge-preserving map of p into g (1-based, index 0 unused), or
/// nullopt. Backtracking with degree pruning, lexicographic candidate order.
/// Guarded at 16 vertices.
std::optional<std::vector<int>> subgraph_iso(const Graph& p, const Graph& g);

/// Embeds p through the catalog: the first entry admitting a subgraph
/// isomorphism yields chains by composing the map with the entry's
/// contraction history. nullopt means p is not a minor of the host.
std::optional<std::vector<std::vector<int>>> embed_via_catalog(const Graph& p,
                                                               const MinorCatalog& cat);

/// Isomorphism test via canonical forms (degree-refined exhaustive
/// permutation). Guarded at 10 vertices.
bool isomorphic(const Graph& a, const Graph& b);

std::string write_catalog(const MinorCatalog& cat);

}  // namespace gridminor
