#pragma once

#include <vector>

namespace gridminor {

enum class ChainKind {
    Full,            // vertical half-chain joined to a horizontal one
    VerticalHalf,    // left-half vertices of one column, one height
    HorizontalHalf,  // right-half vertices of one row, one height
    CellLocal,       // vertices inside a single cell
};

/// The fabric vertex set representing one logical node, plus orientation
/// metadata. The induced subgraph of the chain is connected by construction;
/// validators recheck that from raw adjacency and never trust these fields.
struct Chain {
    ChainKind kind = ChainKind::Full;
    int v_diag = 0;    // column of the vertical part (Full, VerticalHalf)
    int v_height = 0;  // left-half height s in [1, c]
    int h_diag = 0;    // row of the horizontal part (Full, HorizontalHalf)
    int h_height = 0;  // right-half height t in [1, c]
    int cell_row = 0;  // CellLocal only
    int cell_col = 0;
    std::vector<int> vertices;  // vertical part top-to-bottom, then horizontal left-to-right

    friend bool operator==(const Chain&, const Chain&) = default;
};

struct CliqueEmbedding {
    int m = 0;
    int c = 0;
    std::vector<Chain> chains;  // chains[k] hosts logical node u_{k+1}

    int order() const { return static_cast<int>(chains.size()); }

    friend bool operator==(const CliqueEmbedding&, const CliqueEmbedding&) = default;
};

/// Plain vertex lists, for handing to validators and writers.
std::vector<std::vector<int>> chain_vertex_lists(const CliqueEmbedding& e);

/// Chain builders over a perfect coordinate frame. A Full chain joins the
/// left-half vertices of column v_diag at height v_height with the right-half
/// vertices of row h_diag at height h_height; the two parts meet through the
/// intra-cell edge of cell (h_diag, v_diag).
Chain make_full_chain(int m, int c, int v_diag, int v_height, int h_diag, int h_height);
Chain make_vertical_half(int m, int c, int diag, int height);
Chain make_horizontal_half(int m, int c, int diag, int height);

/// Canonical K_{cm+1} minor embedding into a perfect F(m,c).
///
/// For diagonal i and height s, the Full chain takes the left-half vertex at
/// height s in every cell of column i plus the right-half vertex at height s
/// in every cell of row i, joined through the intra-cell edge of diagonal
/// cell (i,i). The (i,s) = (1,c) chain is split into two half-chains, giving
/// cm-1 chains of 2m vertices, 2 chains of m, and full coverage of all 2cm^2
/// vertices. Nodes u_1..u_{c+1} start in cell (1,1); layer i contributes
/// nodes c(i-1)+2 .. c(i-1)+c+1 ordered by height.
CliqueEmbedding embed_clique_perfect(int m, int c);

/// Grows the canonical (m,c) embedding into the canonical (m+1,c) one: every
/// Full chain gains one vertex in row m+1 and one in column m+1, the two half
/// chains gain one each, and c new nodes appear on diagonal m+1. Throws if
/// the input is not canonical.
CliqueEmbedding extend_embedding(const CliqueEmbedding& e);

}  // namespace gridminor
