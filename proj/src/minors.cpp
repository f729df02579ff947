#include "gridminor/minors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace gridminor {

namespace {

// Packed upper-triangle adjacency under one vertex ordering; 45 bits at the
// n <= 10 guard, so a single word holds it.
uint64_t pack_adjacency(const Graph& g, const std::vector<int>& perm) {
    uint64_t key = 0;
    int bit = 0;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                key |= uint64_t{1} << bit;
    return key;
}

// Iso-invariant refinement key: (degree, sorted neighbor degrees).
std::vector<std::vector<int>> refinement_classes(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<std::vector<int>, int>> keyed;
    keyed.reserve(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) {
        std::vector<int> key{g.degree(v)};
        for (int w : g.neighbors(v)) key.push_back(g.degree(w));
        std::sort(key.begin() + 1, key.end());
        keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back();
        classes.back().push_back(keyed[i].second);
    }
    return classes;
}

void minimize_over_class_perms(const Graph& g, std::vector<std::vector<int>>& classes,
                               size_t idx, std::vector<int>& perm, uint64_t& best) {
    if (idx == classes.size()) {
        best = std::min(best, pack_adjacency(g, perm));
        return;
    }
    auto& cls = classes[idx];
    std::sort(cls.begin(), cls.end());
    do {
        size_t base = perm.size();
        perm.insert(perm.end(), cls.begin(), cls.end());
        minimize_over_class_perms(g, classes, idx + 1, perm, best);
        perm.resize(base);
    } while (std::next_permutation(cls.begin(), cls.end()));
}

uint64_t canonical_form(const Graph& g) {
    if (g.vertex_count() > 10)
        throw std::invalid_argument("canonical form guarded at 10 vertices");
    auto classes = refinement_classes(g);
    std::vector<int> perm;
    uint64_t best = ~uint64_t{0};
    minimize_over_class_perms(g, classes, 0, perm, best);
    return best;
}

struct Entry {
    Graph graph;
    std::vector<std::vector<int>> history;
    uint64_t canon = 0;
};

// Contracts edge (u,v), u < v: v merges into u, ids above v shift down.
Entry contract_edge(const Entry& e, int u, int v) {
    int n = e.graph.vertex_count();
    auto renum = [v](int w) { return w > v ? w - 1 : w; };
    Entry out;
    out.graph = Graph(n - 1);
    for (auto [x, y] : e.graph.edges()) {
        if (x == v) x = u;
        if (y == v) y = u;
        if (x == y) continue;
        out.graph.add_edge(renum(x), renum(y));
    }
    out.history = e.history;
    auto& hu = out.history[static_cast<size_t>(u - 1)];
    const auto& hv = out.history[static_cast<size_t>(v - 1)];
    hu.insert(hu.end(), hv.begin(), hv.end());
    std::sort(hu.begin(), hu.end());
    out.history.erase(out.history.begin() + (v - 1));
    return out;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> subgraph_iso(const Graph& p, const Graph& g) {
    if (p.vertex_count() > 16 || g.vertex_count() > 16)
        throw std::invalid_argument("subgraph search guarded at 16 vertices");
    int np = p.vertex_count(), ng = g.vertex_count();
    if (np > ng || p.edge_count() > g.edge_count()) return std::nullopt;
    if (np == 0) return std::vector<int>{0};

    // Most-constrained-first pattern order: placed neighbors, then degree.
    std::vector<int> order;
    std::vector<char> placed(static_cast<size_t>(np) + 1, 0);
    for (int step = 0; step < np; ++step) {
        int best = 0, best_links = -1, best_deg = -1;
        for (int u = 1; u <= np; ++u) {
            if (placed[static_cast<size_t>(u)]) continue;
            int links = 0;
            for (int w : p.neighbors(u))
                if (placed[static_cast<size_t>(w)]) ++links;
            if (links > best_links || (links == best_links && p.degree(u) > best_deg)) {
                best = u;
                best_links = links;
                best_deg = p.degree(u);
            }
        }
        placed[static_cast<size_t>(best)] = 1;
        order.push_back(best);
    }

    std::vector<int> map(static_cast<size_t>(np) + 1, 0);
    std::vector<char> used(static_cast<size_t>(ng) + 1, 0);
    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) return true;
        int u = order[idx];
        for (int v = 1; v <= ng; ++v) {  // ascending: deterministic witness
            if (used[static_cast<size_t>(v)] || g.degree(v) < p.degree(u)) continue;
            bool ok = true;
            for (int w : p.neighbors(u)) {
                int mw = map[static_cast<size_t>(w)];
                if (mw != 0 && !g.has_edge(v, mw)) { ok = false; break; }
            }
            if (!ok) continue;
            map[static_cast<size_t>(u)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (self(self, idx + 1)) return true;
            map[static_cast<size_t>(u)] = 0;
            used[static_cast<size_t>(v)] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

MinorCatalog enumerate_maximal_minors(const Graph& g) {
    if (g.vertex_count() > 10)
        throw std::invalid_argument("maximal-minor enumeration guarded at 10 vertices");

    Entry root;
    root.graph = g;
    root.history.reserve(static_cast<size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) root.history.push_back({v});
    root.canon = canonical_form(g);

    std::vector<Entry> kept{root};  // the host itself is the first maximal minor
    std::vector<Entry> level{root};
    while (!level.empty()) {
        // All single contractions of the previous level's keepers, deduped by
        // isomorphism (first generated representative wins).
        std::vector<Entry> candidates;
        for (const Entry& e : level)
            for (auto [u, v] : e.graph.edges()) {
                Entry cand = contract_edge(e, u, v);
                cand.canon = canonical_form(cand.graph);
                bool fresh = true;
                for (const Entry& seen : candidates)
                    if (seen.canon == cand.canon) { fresh = false; break; }
                if (fresh) candidates.push_back(std::move(cand));
            }
        // Same-order subgraphs have no more edges than their supergraph, so
        // processing by descending edge count settles within-level maximality.
        std::sort(candidates.begin(), candidates.end(), [](const Entry& a, const Entry& b) {
            if (a.graph.edge_count() != b.graph.edge_count())
                return a.graph.edge_count() > b.graph.edge_count();
            return a.canon < b.canon;
        });
        std::vector<Entry> fresh_keeps;
        for (Entry& cand : candidates) {
            bool dominated = false;
            for (const Entry& k : kept)
                if (subgraph_iso(cand.graph, k.graph)) { dominated = true; break; }
            if (dominated) continue;
            kept.push_back(cand);
            fresh_keeps.push_back(std::move(cand));
        }
        level = std::move(fresh_keeps);
    }

    std::sort(kept.begin(), kept.end(), [](const Entry& a, const Entry& b) {
        if (a.graph.vertex_count() != b.graph.vertex_count())
            return a.graph.vertex_count() > b.graph.vertex_count();
        return a.canon < b.canon;
    });
    MinorCatalog cat;
    for (Entry& e : kept) cat.entries.push_back({std::move(e.graph), std::move(e.history)});
    return cat;
}

std::optional<std::vector<std::vector<int>>> embed_via_catalog(const Graph& p,
                                                               const MinorCatalog& cat) {
    for (const CatalogEntry& entry : cat.entries) {
        if (p.vertex_count() > entry.graph.vertex_count()) continue;
        if (auto map = subgraph_iso(p, entry.graph)) {
            std::vector<std::vector<int>> chains;
            chains.reserve(static_cast<size_t>(p.vertex_count()));
            for (int u = 1; u <= p.vertex_count(); ++u)
                chains.push_back(entry.history[static_cast<size_t>((*map)[static_cast<size_t>(u)] - 1)]);
            return chains;
        }
    }
    return std::nullopt;
}

std::string write_catalog(const MinorCatalog& cat) {
    std::string out;
    bool first = true;
    for (const CatalogEntry& e : cat.entries) {
        if (!first) out += "\n";
        first = false;
        out += "graph " + std::to_string(e.graph.vertex_count()) + "\n";
        for (auto [u, v] : e.graph.edges())
            out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
        for (size_t k = 0; k < e.history.size(); ++k) {
            out += "history " + std::to_string(k + 1) + ":";
            for (int v : e.history[k]) out += " " + std::to_string(v);
            out += "\n";
        }
    }
    return out;
}

}  // namespace gridminor
