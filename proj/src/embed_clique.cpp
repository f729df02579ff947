#include "gridminor/embedding.hpp"

#include <stdexcept>

#include "gridminor/fabric.hpp"

namespace gridminor {

Chain make_full_chain(int m, int c, int v_diag, int v_height, int h_diag, int h_height) {
    Chain ch;
    ch.kind = ChainKind::Full;
    ch.v_diag = v_diag;
    ch.v_height = v_height;
    ch.h_diag = h_diag;
    ch.h_height = h_height;
    ch.vertices.reserve(static_cast<size_t>(2 * m));
    for (int r = 1; r <= m; ++r)
        ch.vertices.push_back(label_to_index({r, v_diag, v_height}, m, c));
    for (int j = 1; j <= m; ++j)
        ch.vertices.push_back(label_to_index({h_diag, j, c + h_height}, m, c));
    return ch;
}

Chain make_vertical_half(int m, int c, int diag, int height) {
    Chain ch;
    ch.kind = ChainKind::VerticalHalf;
    ch.v_diag = diag;
    ch.v_height = height;
    ch.vertices.reserve(static_cast<size_t>(m));
    for (int r = 1; r <= m; ++r) ch.vertices.push_back(label_to_index({r, diag, height}, m, c));
    return ch;
}

Chain make_horizontal_half(int m, int c, int diag, int height) {
    Chain ch;
    ch.kind = ChainKind::HorizontalHalf;
    ch.h_diag = diag;
    ch.h_height = height;
    ch.vertices.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j)
        ch.vertices.push_back(label_to_index({diag, j, c + height}, m, c));
    return ch;
}

std::vector<std::vector<int>> chain_vertex_lists(const CliqueEmbedding& e) {
    std::vector<std::vector<int>> out;
    out.reserve(e.chains.size());
    for (const Chain& ch : e.chains) out.push_back(ch.vertices);
    return out;
}

CliqueEmbedding embed_clique_perfect(int m, int c) {
    if (m < 1 || c < 1) throw std::invalid_argument("embed_clique_perfect requires m, c >= 1");
    CliqueEmbedding e;
    e.m = m;
    e.c = c;
    e.chains.reserve(static_cast<size_t>(c * m + 1));
    // Cell (1,1) seeds u_1..u_{c+1}: c-1 paired chains plus the split node.
    for (int s = 1; s <= c - 1; ++s) e.chains.push_back(make_full_chain(m, c, 1, s, 1, s));
    e.chains.push_back(make_vertical_half(m, c, 1, c));
    e.chains.push_back(make_horizontal_half(m, c, 1, c));
    for (int i = 2; i <= m; ++i)
        for (int s = 1; s <= c; ++s) e.chains.push_back(make_full_chain(m, c, i, s, i, s));
    return e;
}

CliqueEmbedding extend_embedding(const CliqueEmbedding& e) {
    if (e != embed_clique_perfect(e.m, e.c))
        throw std::invalid_argument("extend_embedding requires the canonical clique embedding");
    int m = e.m, mm = e.m + 1, c = e.c;
    CliqueEmbedding out;
    out.m = mm;
    out.c = c;
    out.chains.reserve(static_cast<size_t>(c * mm + 1));
    for (const Chain& ch : e.chains) {
        Chain grown = ch;
        grown.vertices.clear();
        // Renumber surviving vertices for the larger grid and splice in the
        // two (one, for half chains) new vertices reachable from row/column m+1.
        switch (ch.kind) {
            case ChainKind::Full:
                for (int r = 1; r <= m; ++r)
                    grown.vertices.push_back(label_to_index({r, ch.v_diag, ch.v_height}, mm, c));
                grown.vertices.push_back(label_to_index({mm, ch.v_diag, ch.v_height}, mm, c));
                for (int j = 1; j <= m; ++j)
                    grown.vertices.push_back(label_to_index({ch.h_diag, j, c + ch.h_height}, mm, c));
                grown.vertices.push_back(label_to_index({ch.h_diag, mm, c + ch.h_height}, mm, c));
                break;
            case ChainKind::VerticalHalf:
                for (int r = 1; r <= mm; ++r)
                    grown.vertices.push_back(label_to_index({r, ch.v_diag, ch.v_height}, mm, c));
                break;
            case ChainKind::HorizontalHalf:
                for (int j = 1; j <= mm; ++j)
                    grown.vertices.push_back(label_to_index({ch.h_diag, j, c + ch.h_height}, mm, c));
                break;
            case ChainKind::CellLocal:
                throw std::invalid_argument("canonical embeddings have no cell-local chains");
        }
        out.chains.push_back(std::move(grown));
    }
    for (int s = 1; s <= c; ++s) out.chains.push_back(make_full_chain(mm, c, mm, s, mm, s));
    return out;
}

}  // namespace gridminor
