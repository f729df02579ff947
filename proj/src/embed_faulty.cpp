#include "gridminor/embed_faulty.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gridminor {

namespace {

struct HalfRef {
    int diag = 0;
    int height = 0;
};

bool vertical_clean(const Fabric& f, int col, int height) {
    int m = f.m(), c = f.c();
    int id = 2 * c * (col - 1) + height;  // row 1
    int stride = 2 * c * m;
    for (int r = 1; r <= m; ++r, id += stride)
        if (!f.is_alive(id)) return false;
    return true;
}

bool horizontal_clean(const Fabric& f, int row, int height) {
    int m = f.m(), c = f.c();
    int id = 2 * c * m * (row - 1) + c + height;  // column 1
    int stride = 2 * c;
    for (int j = 1; j <= m; ++j, id += stride)
        if (!f.is_alive(id)) return false;
    return true;
}

struct GreedyPlan {
    std::vector<std::pair<HalfRef, HalfRef>> pairs;  // sorted by vertical (diag, height)
    std::optional<HalfRef> lone_v;
    std::optional<HalfRef> lone_h;
    std::optional<size_t> split_pair;

    int order() const {
        return static_cast<int>(pairs.size()) + (lone_v ? 1 : 0) + (lone_h ? 1 : 0) +
               (split_pair ? 1 : 0);
    }
};

// Pairs clean halves and decides the lone/split extras. With no spares at
// all, the pair at the lowest diagonal, bottom height, is marked for
// splitting into two lone halves; on a perfect fabric this reproduces the
// canonical split node exactly.
GreedyPlan plan_greedy(const CleanTable& ct, bool cross_diagonal) {
    GreedyPlan plan;
    std::vector<HalfRef> spare_v, spare_h;
    if (!cross_diagonal) {
        for (int i = 1; i <= ct.m; ++i) {
            const auto& vs = ct.clean_v[static_cast<size_t>(i)];
            const auto& hs = ct.clean_h[static_cast<size_t>(i)];
            size_t k = std::min(vs.size(), hs.size());
            for (size_t x = 0; x < k; ++x)
                plan.pairs.push_back({{i, vs[x]}, {i, hs[x]}});
            for (size_t x = k; x < vs.size(); ++x) spare_v.push_back({i, vs[x]});
            for (size_t x = k; x < hs.size(); ++x) spare_h.push_back({i, hs[x]});
        }
    } else {
        std::vector<HalfRef> all_v, all_h;
        for (int i = 1; i <= ct.m; ++i) {
            for (int s : ct.clean_v[static_cast<size_t>(i)]) all_v.push_back({i, s});
            for (int t : ct.clean_h[static_cast<size_t>(i)]) all_h.push_back({i, t});
        }
        size_t k = std::min(all_v.size(), all_h.size());
        for (size_t x = 0; x < k; ++x) plan.pairs.push_back({all_v[x], all_h[x]});
        spare_v.assign(all_v.begin() + static_cast<long>(k), all_v.end());
        spare_h.assign(all_h.begin() + static_cast<long>(k), all_h.end());
    }

    // Two lone halves of the same kind are never fabric-adjacent, so at most
    // one spare of each kind can join the clique.
    if (!spare_v.empty()) plan.lone_v = spare_v.front();
    if (!spare_h.empty()) plan.lone_h = spare_h.front();
    if (!plan.lone_v && !plan.lone_h && !plan.pairs.empty()) {
        size_t best = 0;
        for (size_t x = 1; x < plan.pairs.size(); ++x) {
            const HalfRef& cand = plan.pairs[x].first;
            const HalfRef& cur = plan.pairs[best].first;
            if (cand.diag < cur.diag ||
                (cand.diag == cur.diag && cand.height > cur.height))
                best = x;
        }
        plan.split_pair = best;
    }
    return plan;
}

CliqueEmbedding chains_from_plan(const GreedyPlan& plan, int m, int c) {
    CliqueEmbedding e;
    e.m = m;
    e.c = c;
    e.chains.reserve(static_cast<size_t>(plan.order()));
    size_t next = 0;
    for (int d = 1; d <= m; ++d) {
        while (next < plan.pairs.size() && plan.pairs[next].first.diag == d) {
            const auto& [v, h] = plan.pairs[next];
            if (plan.split_pair && *plan.split_pair == next) {
                e.chains.push_back(make_vertical_half(m, c, v.diag, v.height));
                e.chains.push_back(make_horizontal_half(m, c, h.diag, h.height));
            } else {
                e.chains.push_back(make_full_chain(m, c, v.diag, v.height, h.diag, h.height));
            }
            ++next;
        }
        if (plan.lone_v && plan.lone_v->diag == d)
            e.chains.push_back(make_vertical_half(m, c, d, plan.lone_v->height));
        if (plan.lone_h && plan.lone_h->diag == d)
            e.chains.push_back(make_horizontal_half(m, c, d, plan.lone_h->height));
    }
    return e;
}

// Count-only twins of the embedding routines, for the orchestrator's scan.

int greedy_order_count(const Fabric& f, bool cross_diagonal) {
    int m = f.m(), c = f.c();
    int full = 0, spare_v = 0, spare_h = 0;
    if (!cross_diagonal) {
        for (int i = 1; i <= m; ++i) {
            int nv = 0, nh = 0;
            for (int s = 1; s <= c; ++s) {
                if (vertical_clean(f, i, s)) ++nv;
                if (horizontal_clean(f, i, s)) ++nh;
            }
            full += std::min(nv, nh);
            spare_v += nv - std::min(nv, nh);
            spare_h += nh - std::min(nv, nh);
        }
    } else {
        int tv = 0, th = 0;
        for (int i = 1; i <= m; ++i)
            for (int s = 1; s <= c; ++s) {
                if (vertical_clean(f, i, s)) ++tv;
                if (horizontal_clean(f, i, s)) ++th;
            }
        full = std::min(tv, th);
        spare_v = tv - full;
        spare_h = th - full;
    }
    if (spare_v > 0 && spare_h > 0) return full + 2;
    if (spare_v > 0 || spare_h > 0) return full + 1;
    return full >= 1 ? full + 1 : 0;
}

int fallback_cell_size(const Fabric& f) {
    int m = f.m(), c = f.c();
    int c_o = c;
    for (int i = 1; i <= m && c_o > 0; ++i) {
        int nv = 0, nh = 0;
        for (int s = 1; s <= c; ++s) {
            if (vertical_clean(f, i, s)) ++nv;
            if (horizontal_clean(f, i, s)) ++nh;
        }
        c_o = std::min({c_o, nv, nh});
    }
    return c_o;
}

int fallback_order_count(const Fabric& f) {
    int c_o = fallback_cell_size(f);
    return c_o > 0 ? c_o * f.m() + 1 : 0;
}

struct CellCensus {
    int row = 0, col = 0;
    std::vector<int> left, right;  // alive in-cell positions, ascending
    int value() const {
        if (!left.empty() && !right.empty())
            return static_cast<int>(std::min(left.size(), right.size())) + 1;
        return (left.empty() && right.empty()) ? 0 : 1;
    }
};

CellCensus census_cell(const Fabric& f, int a, int b) {
    int c = f.c();
    CellCensus out;
    out.row = a;
    out.col = b;
    for (int d = 1; d <= 2 * c; ++d)
        if (f.is_alive(label_to_index({a, b, d}, f.m(), c)))
            (d <= c ? out.left : out.right).push_back(d);
    return out;
}

int single_cell_count(const Fabric& f) {
    int best = 0;
    for (int a = 1; a <= f.m(); ++a)
        for (int b = 1; b <= f.m(); ++b)
            best = std::max(best, census_cell(f, a, b).value());
    return best;
}

struct Candidate {
    int n = -1;
    int rank = 0;  // 0 = corner attempt, 1 = cell scan
    int drops = 0;
    int corner = 0;
};

bool improves(const Candidate& a, const Candidate& b) {
    if (a.n != b.n) return a.n > b.n;
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.drops != b.drops) return a.drops < b.drops;
    return a.corner < b.corner;
}

constexpr Corner kCorners[] = {Corner::UpperLeft, Corner::UpperRight, Corner::LowerLeft,
                               Corner::LowerRight};

bool flips_columns(Corner c) { return c == Corner::UpperRight || c == Corner::LowerRight; }
bool flips_rows(Corner c) { return c == Corner::LowerLeft || c == Corner::LowerRight; }

// Transports chains found on flipped(corner).subgrid(drops) back into the
// coordinate frame of the original fabric.
CliqueEmbedding map_to_original(const CliqueEmbedding& sub, int m_orig, int drops,
                                Corner corner) {
    bool h = flips_columns(corner), v = flips_rows(corner);
    auto to_row = [&](int row) {
        int r = row + drops;
        return v ? m_orig + 1 - r : r;
    };
    auto to_col = [&](int col) {
        int b = col + drops;
        return h ? m_orig + 1 - b : b;
    };
    CliqueEmbedding out;
    out.m = m_orig;
    out.c = sub.c;
    out.chains.reserve(sub.chains.size());
    for (const Chain& ch : sub.chains) {
        Chain moved = ch;
        if (moved.v_diag != 0) moved.v_diag = to_col(moved.v_diag);
        if (moved.h_diag != 0) moved.h_diag = to_row(moved.h_diag);
        if (moved.cell_row != 0) moved.cell_row = to_row(moved.cell_row);
        if (moved.cell_col != 0) moved.cell_col = to_col(moved.cell_col);
        for (int& id : moved.vertices) {
            CellLabel l = index_to_label(id, sub.m, sub.c);
            id = label_to_index({to_row(l.row), to_col(l.col), l.pos}, m_orig, sub.c);
        }
        out.chains.push_back(std::move(moved));
    }
    return out;
}

}  // namespace

const char* source_name(EmbedSource s) {
    switch (s) {
        case EmbedSource::Fallback: return "fallback";
        case EmbedSource::Greedy: return "greedy";
        case EmbedSource::CellScan: return "cell-scan";
    }
    return "?";
}

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::UpperLeft: return "UL";
        case Corner::UpperRight: return "UR";
        case Corner::LowerLeft: return "LL";
        case Corner::LowerRight: return "LR";
    }
    return "?";
}

std::string provenance_string(const Provenance& p) {
    return std::string(source_name(p.algorithm)) + "," + corner_name(p.corner) + "," +
           std::to_string(p.drops);
}

CleanTable half_chain_status(const Fabric& f) {
    CleanTable t;
    t.m = f.m();
    t.c = f.c();
    t.clean_v.assign(static_cast<size_t>(t.m) + 1, {});
    t.clean_h.assign(static_cast<size_t>(t.m) + 1, {});
    for (int i = 1; i <= t.m; ++i)
        for (int s = 1; s <= t.c; ++s) {
            if (vertical_clean(f, i, s)) t.clean_v[static_cast<size_t>(i)].push_back(s);
            if (horizontal_clean(f, i, s)) t.clean_h[static_cast<size_t>(i)].push_back(s);
        }
    return t;
}

FaultyResult greedy_embed(const Fabric& f, bool cross_diagonal) {
    GreedyPlan plan = plan_greedy(half_chain_status(f), cross_diagonal);
    FaultyResult res;
    res.embedding = chains_from_plan(plan, f.m(), f.c());
    res.order = res.embedding.order();
    res.provenance = {EmbedSource::Greedy, Corner::UpperLeft, 0};
    return res;
}

FaultyResult fallback_embed(const Fabric& f) {
    int m = f.m(), c = f.c();
    CleanTable ct = half_chain_status(f);
    int c_o = c;
    for (int i = 1; i <= m; ++i)
        c_o = std::min({c_o, static_cast<int>(ct.clean_v[static_cast<size_t>(i)].size()),
                        static_cast<int>(ct.clean_h[static_cast<size_t>(i)].size())});

    FaultyResult res;
    res.provenance = {EmbedSource::Fallback, Corner::UpperLeft, 0};
    res.embedding.m = m;
    res.embedding.c = c;
    if (c_o == 0) return res;

    // Perfect-grid construction on the surviving m-by-m grid of K_{c_o,c_o},
    // renumbering heights per column (left halves) and per row (right halves).
    auto vh = [&](int i, int s) { return ct.clean_v[static_cast<size_t>(i)][static_cast<size_t>(s - 1)]; };
    auto hh = [&](int i, int s) { return ct.clean_h[static_cast<size_t>(i)][static_cast<size_t>(s - 1)]; };
    auto& chains = res.embedding.chains;
    chains.reserve(static_cast<size_t>(c_o * m + 1));
    for (int s = 1; s <= c_o - 1; ++s)
        chains.push_back(make_full_chain(m, c, 1, vh(1, s), 1, hh(1, s)));
    chains.push_back(make_vertical_half(m, c, 1, vh(1, c_o)));
    chains.push_back(make_horizontal_half(m, c, 1, hh(1, c_o)));
    for (int i = 2; i <= m; ++i)
        for (int s = 1; s <= c_o; ++s)
            chains.push_back(make_full_chain(m, c, i, vh(i, s), i, hh(i, s)));
    res.order = res.embedding.order();
    return res;
}

FaultyResult single_cell_best(const Fabric& f) {
    int m = f.m(), c = f.c();
    CellCensus best;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            CellCensus cand = census_cell(f, a, b);
            if (cand.value() > best.value()) best = cand;
        }

    FaultyResult res;
    res.provenance = {EmbedSource::CellScan, Corner::UpperLeft, 0};
    res.embedding.m = m;
    res.embedding.c = c;
    if (best.value() == 0) return res;

    auto cell_chain = [&](std::vector<int> positions) {
        Chain ch;
        ch.kind = ChainKind::CellLocal;
        ch.cell_row = best.row;
        ch.cell_col = best.col;
        for (int d : positions) {
            if (d <= c) ch.v_height = d;
            else ch.h_height = d - c;
            ch.vertices.push_back(label_to_index({best.row, best.col, d}, m, c));
        }
        return ch;
    };
    auto& chains = res.embedding.chains;
    if (best.left.empty() || best.right.empty()) {
        const auto& side = best.left.empty() ? best.right : best.left;
        chains.push_back(cell_chain({side.front()}));
    } else {
        int k = static_cast<int>(std::min(best.left.size(), best.right.size()));
        for (int x = 0; x < k - 1; ++x)
            chains.push_back(cell_chain({best.left[static_cast<size_t>(x)],
                                         best.right[static_cast<size_t>(x)]}));
        chains.push_back(cell_chain({best.left[static_cast<size_t>(k - 1)]}));
        chains.push_back(cell_chain({best.right[static_cast<size_t>(k - 1)]}));
    }
    res.order = res.embedding.order();
    return res;
}

FaultyResult orchestrate(const Fabric& f, FaultAlgorithm algorithm, Scheme scheme,
                         bool greedy_cross) {
    int m = f.m(), c = f.c();
    auto count = [&](const Fabric& fab) {
        return algorithm == FaultAlgorithm::Greedy ? greedy_order_count(fab, greedy_cross)
                                                   : fallback_order_count(fab);
    };

    Candidate best;
    if (scheme == Scheme::Single) {
        Candidate cand{count(f), 0, 0, 0};
        if (improves(cand, best)) best = cand;
    } else {
        for (int ci = 0; ci < 4; ++ci) {
            Corner corner = kCorners[ci];
            Fabric oriented = f.flipped(flips_columns(corner), flips_rows(corner));
            int corner_best = -1;
            for (int k = 0; k < m; ++k) {
                Candidate cand{count(oriented.subgrid(k)), 0, k, ci};
                if (improves(cand, best)) best = cand;
                corner_best = std::max(corner_best, cand.n);
                // A deeper drop can never beat the largest clique the next
                // smaller grid could hold.
                if (corner_best >= c * (m - k - 1) + 1) break;
            }
        }
    }
    Candidate scan{single_cell_count(f), 1, 0, 0};
    if (improves(scan, best)) best = scan;

    if (best.rank == 1) return single_cell_best(f);

    Corner corner = kCorners[best.corner];
    Fabric attempt = f.flipped(flips_columns(corner), flips_rows(corner)).subgrid(best.drops);
    FaultyResult res = algorithm == FaultAlgorithm::Greedy ? greedy_embed(attempt, greedy_cross)
                                                           : fallback_embed(attempt);
    res.embedding = map_to_original(res.embedding, m, best.drops, corner);
    res.provenance = {algorithm == FaultAlgorithm::Greedy ? EmbedSource::Greedy
                                                          : EmbedSource::Fallback,
                      corner, best.drops};
    return res;
}

}  // namespace gridminor
