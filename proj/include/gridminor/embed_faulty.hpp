#pragma once

#include <string>
#include <vector>

#include "gridminor/embedding.hpp"
#include "gridminor/fabric.hpp"

namespace gridminor {

/// Per-diagonal cleanliness of canonical half-chains. A vertical half-chain
/// (column i, height s) is clean iff all m of its left-half vertices are
/// alive; horizontal half-chains (row i, height t) likewise over right-half
/// vertices. On a perfect fabric every set is full.
struct CleanTable {
    int m = 0;
    int c = 0;
    std::vector<std::vector<int>> clean_v;  // clean_v[i], i in 1..m; heights ascending
    std::vector<std::vector<int>> clean_h;

    friend bool operator==(const CleanTable&, const CleanTable&) = default;
};

CleanTable half_chain_status(const Fabric& f);

enum class EmbedSource { Fallback, Greedy, CellScan };
enum class Corner { UpperLeft, UpperRight, LowerLeft, LowerRight };
enum class FaultAlgorithm { Fallback, Greedy };
enum class Scheme { Single, FlipDrop };

const char* source_name(EmbedSource s);   // "fallback", "greedy", "cell-scan"
const char* corner_name(Corner c);        // "UL", "UR", "LL", "LR"

struct Provenance {
    EmbedSource algorithm = EmbedSource::Greedy;
    Corner corner = Corner::UpperLeft;
    int drops = 0;
};

std::string provenance_string(const Provenance& p);  // "greedy,UL,0"

/// Embedding found on a faulty fabric: n = achieved clique order = number of
/// chains; every chain vertex is alive.
struct FaultyResult {
    CliqueEmbedding embedding;
    int order = 0;
    Provenance provenance;
};

/// Greedy failure algorithm: per diagonal, pairs clean vertical half-chains
/// with clean horizontal ones regardless of height (joins live in the
/// diagonal cell), so failures concentrate in few logical nodes. Leftover
/// clean halves contribute at most one vertical and one horizontal lone node;
/// with no spares at all, one pair is split into two lone halves at the
/// lowest diagonal (bottom height), mirroring the canonical split node.
///
/// cross_diagonal lifts the same-diagonal restriction (any clean vertical
/// with any clean horizontal, joined in the crossing cell); never worse, but
/// excluded from paper-reproduction runs.
FaultyResult greedy_embed(const Fabric& f, bool cross_diagonal = false);

/// Fallback: find the largest c_o <= c such that a complete m-by-m grid of
/// K_{c_o,c_o} survives (selecting heights per column for left halves and per
/// row for right halves), renumber, and run the perfect-grid construction.
/// c_o = 0 yields an empty result.
FaultyResult fallback_embed(const Fabric& f);

/// Largest K_n embeddable inside a single cell, over all cells: a cell with
/// l alive left and r alive right vertices carries min(l,r)+1 when both sides
/// are populated, 1 when one side is, 0 when dead.
FaultyResult single_cell_best(const Fabric& f);

/// Runs the chosen algorithm under a scheme. Single: one attempt from the
/// upper-left corner, maxed with the single-cell scan. FlipDrop: all four
/// corner orientations, each dropping k = 0..m-1 leading rows+columns until
/// the best found already beats everything a smaller grid could hold, maxed
/// with the scan. Ties prefer corner attempts over the scan, then fewer
/// drops, then corner order UL, UR, LL, LR. Chains come back in
/// original-fabric coordinates.
FaultyResult orchestrate(const Fabric& f, FaultAlgorithm algorithm, Scheme scheme,
                         bool greedy_cross = false);

}  // namespace gridminor
