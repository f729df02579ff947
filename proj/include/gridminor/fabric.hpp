#pragma once

#include <cstdint>
#include <vector>

namespace gridminor {

/// Position of a qubit inside the cell grid: cell (row, col) with
/// 1 <= row, col <= m, and in-cell position pos with 1 <= pos <= 2c.
/// pos <= c is the left half of the K_{c,c}, pos > c the right half.
struct CellLabel {
    int row = 0;
    int col = 0;
    int pos = 0;
    friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Linear vertex index in [1, 2cm^2]: 2cm(row-1) + 2c(col-1) + pos.
int label_to_index(const CellLabel& label, int m, int c);
CellLabel index_to_label(int n, int m, int c);

/// Hardware graph F(m,c): an m-by-m grid of K_{c,c} unit cells. Each left-half
/// qubit couples to its image in the cells directly above and below; each
/// right-half qubit couples to its image in the cells to the left and right.
///
/// Hard faults remove vertices together with all incident edges, never single
/// edges. Aliveness is a mask over the structurally perfect graph; adjacency
/// is always computed from (m, c, label), never stored.
///
/// Fabric values are immutable: every mutating operation returns a new value,
/// so concurrent reads are unrestricted.
class Fabric {
public:
    Fabric(int m, int c);

    int m() const { return m_; }
    int c() const { return c_; }
    int vertex_count() const { return 2 * c_ * m_ * m_; }
    int alive_count() const { return alive_count_; }
    bool is_perfect() const { return alive_count_ == vertex_count(); }

    bool is_alive(int v) const;

    /// Alive neighbors of an alive vertex, ascending; empty if v is dead.
    std::vector<int> neighbors(int v) const;

    /// Number of edges between alive vertices.
    long long edge_count() const;

    /// Kills the listed vertices. Idempotent; never resurrects.
    Fabric with_dead(const std::vector<int>& ids) const;

    /// Kills round(rate * 2cm^2) distinct vertices chosen uniformly without
    /// replacement. Identical (rate, seed, m, c) give identical masks.
    Fabric with_random_faults(double rate, uint64_t seed) const;

    /// Grid automorphism: horizontal mirrors columns (col -> m+1-col),
    /// vertical mirrors rows. Aliveness is transported along.
    Fabric flipped(bool horizontal, bool vertical) const;

    /// The (m-k)-by-(m-k) fabric induced by cells with row > k and col > k,
    /// renumbered from 1. Aliveness preserved.
    Fabric subgrid(int k) const;

    std::vector<int> dead_vertices() const;

    friend bool operator==(const Fabric&, const Fabric&) = default;

private:
    bool bit(int v) const {  // unchecked, v in [1, N]
        return (alive_[static_cast<size_t>(v - 1) >> 6] >>
                (static_cast<unsigned>(v - 1) & 63u)) & 1u;
    }
    void clear_bit(int v);

    int m_;
    int c_;
    int alive_count_;
    std::vector<uint64_t> alive_;
};

}  // namespace gridminor
