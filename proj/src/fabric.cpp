#include "gridminor/fabric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gridminor/rng.hpp"

namespace gridminor {

namespace {

void check_dims(int m, int c) {
    if (m < 1) throw std::invalid_argument("grid dimension m must be >= 1");
    if (c < 1) throw std::invalid_argument("half-cell size c must be >= 1");
}

void check_label(const CellLabel& l, int m, int c) {
    if (l.row < 1 || l.row > m || l.col < 1 || l.col > m || l.pos < 1 || l.pos > 2 * c)
        throw std::out_of_range("cell label (" + std::to_string(l.row) + "," +
                                std::to_string(l.col) + ")^" + std::to_string(l.pos) +
                                " outside F(" + std::to_string(m) + "," +
                                std::to_string(c) + ")");
}

void check_index(int n, int m, int c) {
    int total = 2 * c * m * m;
    if (n < 1 || n > total)
        throw std::out_of_range("vertex index " + std::to_string(n) + " outside [1," +
                                std::to_string(total) + "]");
}

// Calls fn for every structural neighbor of `l` in a perfect F(m,c).
template <class Fn>
void for_each_structural_neighbor(const CellLabel& l, int m, int c, Fn&& fn) {
    if (l.pos <= c) {
        for (int d = c + 1; d <= 2 * c; ++d) fn(CellLabel{l.row, l.col, d});
        if (l.row > 1) fn(CellLabel{l.row - 1, l.col, l.pos});
        if (l.row < m) fn(CellLabel{l.row + 1, l.col, l.pos});
    } else {
        for (int d = 1; d <= c; ++d) fn(CellLabel{l.row, l.col, d});
        if (l.col > 1) fn(CellLabel{l.row, l.col - 1, l.pos});
        if (l.col < m) fn(CellLabel{l.row, l.col + 1, l.pos});
    }
}

}  // namespace

int label_to_index(const CellLabel& label, int m, int c) {
    check_dims(m, c);
    check_label(label, m, c);
    return 2 * c * m * (label.row - 1) + 2 * c * (label.col - 1) + label.pos;
}

CellLabel index_to_label(int n, int m, int c) {
    check_dims(m, c);
    check_index(n, m, c);
    int row_block = 2 * c * m;
    int a = (n + row_block - 1) / row_block;  // ceil(n / 2cm)
    int rest = n - row_block * (a - 1);
    int b = (rest + 2 * c - 1) / (2 * c);
    int d = n % (2 * c);
    if (d == 0) d = 2 * c;
    return CellLabel{a, b, d};
}

Fabric::Fabric(int m, int c) : m_(m), c_(c) {
    check_dims(m, c);
    int total = vertex_count();
    alive_count_ = total;
    alive_.assign(static_cast<size_t>((total + 63) / 64), ~uint64_t{0});
    int spare = total % 64;
    if (spare != 0) alive_.back() = (uint64_t{1} << spare) - 1;
}

void Fabric::clear_bit(int v) {
    uint64_t& word = alive_[static_cast<size_t>(v - 1) >> 6];
    uint64_t mask = uint64_t{1} << (static_cast<unsigned>(v - 1) & 63u);
    if (word & mask) {
        word &= ~mask;
        --alive_count_;
    }
}

bool Fabric::is_alive(int v) const {
    check_index(v, m_, c_);
    return bit(v);
}

std::vector<int> Fabric::neighbors(int v) const {
    check_index(v, m_, c_);
    std::vector<int> out;
    if (!bit(v)) return out;
    CellLabel l = index_to_label(v, m_, c_);
    for_each_structural_neighbor(l, m_, c_, [&](const CellLabel& nb) {
        int id = label_to_index(nb, m_, c_);
        if (bit(id)) out.push_back(id);
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long Fabric::edge_count() const {
    long long twice = 0;
    for (int v = 1; v <= vertex_count(); ++v)
        if (bit(v)) twice += static_cast<long long>(neighbors(v).size());
    return twice / 2;
}

Fabric Fabric::with_dead(const std::vector<int>& ids) const {
    Fabric out = *this;
    for (int v : ids) {
        check_index(v, m_, c_);
        out.clear_bit(v);
    }
    return out;
}

Fabric Fabric::with_random_faults(double rate, uint64_t seed) const {
    if (!(rate >= 0.0 && rate <= 1.0))
        throw std::invalid_argument("fault rate must lie in [0,1]");
    int total = vertex_count();
    int kill = static_cast<int>(std::llround(rate * total));
    SplitMix64 rng(seed);
    return with_dead(sample_distinct(rng, total, kill));
}

Fabric Fabric::flipped(bool horizontal, bool vertical) const {
    if (!horizontal && !vertical) return *this;
    Fabric out(m_, c_);
    for (int v = 1; v <= vertex_count(); ++v) {
        if (bit(v)) continue;
        CellLabel l = index_to_label(v, m_, c_);
        if (horizontal) l.col = m_ + 1 - l.col;
        if (vertical) l.row = m_ + 1 - l.row;
        out.clear_bit(label_to_index(l, m_, c_));
    }
    return out;
}

Fabric Fabric::subgrid(int k) const {
    if (k < 0 || k >= m_)
        throw std::invalid_argument("subgrid drop count must lie in [0, m-1]");
    if (k == 0) return *this;
    int mm = m_ - k;
    Fabric out(mm, c_);
    for (int a = 1; a <= mm; ++a)
        for (int b = 1; b <= mm; ++b)
            for (int d = 1; d <= 2 * c_; ++d)
                if (!bit(label_to_index({a + k, b + k, d}, m_, c_)))
                    out.clear_bit(label_to_index({a, b, d}, mm, c_));
    return out;
}

std::vector<int> Fabric::dead_vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(vertex_count() - alive_count_));
    for (int v = 1; v <= vertex_count(); ++v)
        if (!bit(v)) out.push_back(v);
    return out;
}

}  // namespace gridminor
