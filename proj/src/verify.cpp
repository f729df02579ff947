#include "gridminor/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace gridminor {

namespace {

std::string node_word(int u) { return "node " + std::to_string(u); }

struct GraphHost {
    const Graph& g;
    int vertex_count() const { return g.vertex_count(); }
    bool alive(int v) const { (void)v; return true; }
    std::vector<int> alive_neighbors(int v) const { return g.neighbors(v); }
    bool has_alive_edge(int u, int v) const { return g.has_edge(u, v); }
};

struct FabricHost {
    const Fabric& f;
    int vertex_count() const { return f.vertex_count(); }
    bool alive(int v) const { return f.is_alive(v); }
    std::vector<int> alive_neighbors(int v) const { return f.neighbors(v); }
    bool has_alive_edge(int u, int v) const {
        auto nb = f.neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }
};

class ReportBuilder {
public:
    void violate(Rule rule, std::string witness) {
        for (const Violation& v : report_.violations)
            if (v.rule == rule) return;  // keep the first witness per rule
        report_.pass = false;
        report_.violations.push_back({rule, std::move(witness)});
    }
    VerificationReport take() { return std::move(report_); }

private:
    VerificationReport report_;
};

template <class Host>
VerificationReport verify_minor_impl(const Host& host, const Graph& problem,
                                     const std::vector<std::vector<int>>& chains) {
    const int n_p = problem.vertex_count();
    const int n_h = host.vertex_count();
    if (static_cast<int>(chains.size()) != n_p)
        throw std::invalid_argument("embedding maps " + std::to_string(chains.size()) +
                                    " nodes but the problem graph has " +
                                    std::to_string(n_p));
    for (const auto& chain : chains)
        for (int v : chain)
            if (v < 1 || v > n_h)
                throw std::out_of_range("chain references host vertex " +
                                        std::to_string(v) + " outside [1," +
                                        std::to_string(n_h) + "]");

    ReportBuilder rep;

    // Disjointness (and nonemptiness) via a single ownership pass.
    std::vector<int> owner(static_cast<size_t>(n_h) + 1, 0);
    for (int u = 1; u <= n_p; ++u) {
        const auto& chain = chains[static_cast<size_t>(u - 1)];
        if (chain.empty()) {
            rep.violate(Rule::Disjointness, node_word(u) + " has an empty chain");
            continue;
        }
        for (int v : chain) {
            if (owner[static_cast<size_t>(v)] == u)
                rep.violate(Rule::Disjointness, node_word(u) + " lists vertex " +
                                                    std::to_string(v) + " twice");
            else if (owner[static_cast<size_t>(v)] != 0)
                rep.violate(Rule::Disjointness,
                            "vertex " + std::to_string(v) + " shared by " +
                                node_word(owner[static_cast<size_t>(v)]) + " and " +
                                node_word(u));
            else
                owner[static_cast<size_t>(v)] = u;
        }
    }

    // Aliveness: no chain may use a failed vertex.
    for (int u = 1; u <= n_p; ++u)
        for (int v : chains[static_cast<size_t>(u - 1)])
            if (!host.alive(v))
                rep.violate(Rule::Aliveness,
                            node_word(u) + " uses dead vertex " + std::to_string(v));

    // Connectivity of each chain's alive induced subgraph.
    std::vector<char> in_chain(static_cast<size_t>(n_h) + 1, 0);
    for (int u = 1; u <= n_p; ++u) {
        const auto& chain = chains[static_cast<size_t>(u - 1)];
        int alive_total = 0;
        int start = 0;
        for (int v : chain) {
            if (!host.alive(v)) continue;
            if (!in_chain[static_cast<size_t>(v)]) {
                in_chain[static_cast<size_t>(v)] = 1;
                ++alive_total;
                if (start == 0) start = v;
            }
        }
        if (alive_total > 0) {
            std::vector<int> stack{start};
            in_chain[static_cast<size_t>(start)] = 2;
            int reached = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : host.alive_neighbors(v))
                    if (in_chain[static_cast<size_t>(w)] == 1) {
                        in_chain[static_cast<size_t>(w)] = 2;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            if (reached != alive_total)
                rep.violate(Rule::Connectivity,
                            node_word(u) + " chain is disconnected in the host");
        }
        for (int v : chain) in_chain[static_cast<size_t>(v)] = 0;
    }

    // Edge coverage: one sweep over host edges incident to chain vertices.
    std::vector<char> covered(static_cast<size_t>(n_p) * static_cast<size_t>(n_p), 0);
    for (int v = 1; v <= n_h; ++v) {
        int u = owner[static_cast<size_t>(v)];
        if (u == 0 || !host.alive(v)) continue;
        for (int w : host.alive_neighbors(v)) {
            int x = owner[static_cast<size_t>(w)];
            if (x != 0 && x != u)
                covered[static_cast<size_t>(u - 1) * n_p + static_cast<size_t>(x - 1)] = 1;
        }
    }
    for (auto [u, v] : problem.edges())
        if (!covered[static_cast<size_t>(u - 1) * n_p + static_cast<size_t>(v - 1)]) {
            rep.violate(Rule::EdgeCoverage,
                        "no host edge between chains of " + node_word(u) + " and " +
                            node_word(v));
            break;
        }

    return rep.take();
}

template <class Host>
VerificationReport verify_subgraph_impl(const Host& host, const Graph& problem,
                                        const std::vector<int>& map) {
    const int n_p = problem.vertex_count();
    if (static_cast<int>(map.size()) != n_p + 1)
        throw std::invalid_argument("vertex map must have size n_P + 1 (index 0 unused)");
    for (int u = 1; u <= n_p; ++u) {
        int v = map[static_cast<size_t>(u)];
        if (v < 1 || v > host.vertex_count())
            throw std::out_of_range("map sends " + node_word(u) + " outside the host");
    }

    ReportBuilder rep;
    std::vector<int> owner(static_cast<size_t>(host.vertex_count()) + 1, 0);
    for (int u = 1; u <= n_p; ++u) {
        int v = map[static_cast<size_t>(u)];
        if (owner[static_cast<size_t>(v)] != 0)
            rep.violate(Rule::Disjointness, "map is not injective: " +
                                                node_word(owner[static_cast<size_t>(v)]) +
                                                " and " + node_word(u) + " share vertex " +
                                                std::to_string(v));
        owner[static_cast<size_t>(v)] = u;
        if (!host.alive(v))
            rep.violate(Rule::Aliveness,
                        node_word(u) + " maps to dead vertex " + std::to_string(v));
    }
    for (auto [u, v] : problem.edges())
        if (!host.has_alive_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) {
            rep.violate(Rule::EdgeCoverage,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") is not preserved");
            break;
        }
    return rep.take();
}

template <class Host>
VerificationReport verify_td_impl(const Host& host, const TreeDecomposition& td) {
    const int n_h = host.vertex_count();
    const int bags = td.bag_count();
    if (bags < 1) throw std::invalid_argument("malformed tree: no bags");
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 1 || v > n_h)
                throw std::out_of_range("bag contains vertex " + std::to_string(v) +
                                        " outside the host");
    std::vector<std::vector<int>> tree_adj(static_cast<size_t>(bags) + 1);
    for (auto [x, y] : td.tree_edges) {
        if (x < 1 || x > bags || y < 1 || y > bags || x == y)
            throw std::invalid_argument("malformed tree: bad edge (" + std::to_string(x) +
                                        "," + std::to_string(y) + ")");
        tree_adj[static_cast<size_t>(x)].push_back(y);
        tree_adj[static_cast<size_t>(y)].push_back(x);
    }
    // Connected with bags-1 edges <=> a tree.
    if (static_cast<int>(td.tree_edges.size()) != bags - 1)
        throw std::invalid_argument("malformed tree: edge count is not bags-1");
    {
        std::vector<char> seen(static_cast<size_t>(bags) + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree_adj[static_cast<size_t>(x)])
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    ++count;
                    stack.push_back(y);
                }
        }
        if (count != bags) throw std::invalid_argument("malformed tree: disconnected");
    }

    ReportBuilder rep;

    std::vector<std::vector<int>> bags_of(static_cast<size_t>(n_h) + 1);
    int width = 0;
    for (int i = 1; i <= bags; ++i) {
        std::vector<int> bag = td.bags[static_cast<size_t>(i - 1)];
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        width = std::max(width, static_cast<int>(bag.size()) - 1);
        for (int v : bag) {
            if (!host.alive(v))
                rep.violate(Rule::Aliveness, "bag " + std::to_string(i) +
                                                 " contains dead vertex " +
                                                 std::to_string(v));
            bags_of[static_cast<size_t>(v)].push_back(i);
        }
    }

    for (int v = 1; v <= n_h; ++v)
        if (host.alive(v) && bags_of[static_cast<size_t>(v)].empty()) {
            rep.violate(Rule::BagCoverVertex,
                        "vertex " + std::to_string(v) + " appears in no bag");
            break;
        }

    for (int v = 1; v <= n_h; ++v) {
        if (!host.alive(v)) continue;
        for (int w : host.alive_neighbors(v)) {
            if (w < v) continue;
            const auto& bv = bags_of[static_cast<size_t>(v)];
            const auto& bw = bags_of[static_cast<size_t>(w)];
            bool together = false;
            auto it = bv.begin();
            for (int b : bw) {
                while (it != bv.end() && *it < b) ++it;
                if (it != bv.end() && *it == b) { together = true; break; }
            }
            if (!together) {
                rep.violate(Rule::BagCoverEdge, "edge (" + std::to_string(v) + "," +
                                                    std::to_string(w) +
                                                    ") lies in no bag");
                v = n_h;  // first witness is enough
                break;
            }
        }
    }

    // Running intersection: the bags holding v must form a subtree.
    std::vector<char> mark(static_cast<size_t>(bags) + 1, 0);
    for (int v = 1; v <= n_h; ++v) {
        const auto& holders = bags_of[static_cast<size_t>(v)];
        if (holders.size() <= 1) continue;
        for (int b : holders) mark[static_cast<size_t>(b)] = 1;
        std::vector<int> stack{holders.front()};
        mark[static_cast<size_t>(holders.front())] = 2;
        size_t reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree_adj[static_cast<size_t>(x)])
                if (mark[static_cast<size_t>(y)] == 1) {
                    mark[static_cast<size_t>(y)] = 2;
                    ++reached;
                    stack.push_back(y);
                }
        }
        for (int b : holders) mark[static_cast<size_t>(b)] = 0;
        if (reached != holders.size()) {
            rep.violate(Rule::BagPathConnectivity,
                        "bags holding vertex " + std::to_string(v) +
                            " do not form a subtree");
            break;
        }
    }

    VerificationReport out = rep.take();
    out.width = width;
    return out;
}

}  // namespace

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Disjointness: return "disjointness";
        case Rule::Connectivity: return "connectivity";
        case Rule::EdgeCoverage: return "edge-coverage";
        case Rule::Aliveness: return "aliveness";
        case Rule::BagCoverVertex: return "bag-cover-vertex";
        case Rule::BagCoverEdge: return "bag-cover-edge";
        case Rule::BagPathConnectivity: return "bag-path-connectivity";
    }
    return "?";
}

std::string VerificationReport::render() const {
    if (pass) {
        std::string line = "PASS";
        if (width >= 0) line += " width=" + std::to_string(width);
        return line + "\n";
    }
    std::string out;
    for (const Violation& v : violations)
        out += std::string("FAIL ") + rule_name(v.rule) + " " + v.witness + "\n";
    return out;
}

VerificationReport verify_minor_embedding(const Graph& host, const Graph& problem,
                                          const std::vector<std::vector<int>>& chains) {
    return verify_minor_impl(GraphHost{host}, problem, chains);
}

VerificationReport verify_minor_embedding(const Fabric& host, const Graph& problem,
                                          const std::vector<std::vector<int>>& chains) {
    return verify_minor_impl(FabricHost{host}, problem, chains);
}

VerificationReport verify_subgraph_embedding(const Graph& host, const Graph& problem,
                                             const std::vector<int>& map) {
    return verify_subgraph_impl(GraphHost{host}, problem, map);
}

VerificationReport verify_subgraph_embedding(const Fabric& host, const Graph& problem,
                                             const std::vector<int>& map) {
    return verify_subgraph_impl(FabricHost{host}, problem, map);
}

VerificationReport verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    return verify_td_impl(GraphHost{g}, td);
}

VerificationReport verify_tree_decomposition(const Fabric& f, const TreeDecomposition& td) {
    return verify_td_impl(FabricHost{f}, td);
}

Graph fabric_graph(const Fabric& f) {
    Graph g(f.vertex_count());
    for (int v = 1; v <= f.vertex_count(); ++v)
        for (int w : f.neighbors(v))
            if (v < w) g.add_edge(v, w);
    return g;
}

namespace {

// Branch-set search state for the exhaustive minor oracle. Host vertices are
// bits 0..n-1 of a mask; all connected subsets are precomputed once.
struct MinorSearch {
    const Graph& h;
    const Graph& g;
    int k = 0;                              // pattern order
    std::vector<uint32_t> host_adj;          // bit masks, 0-based
    std::vector<uint32_t> connected_subsets; // ascending
    std::vector<int> order;                  // pattern vertices, most-constrained first
    std::vector<uint32_t> sets;              // sets[u] for pattern vertex u (1-based)
    uint32_t free_mask = 0;

    uint32_t neighborhood(uint32_t s) const {
        uint32_t nb = 0;
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            nb |= host_adj[static_cast<size_t>(v)];
        }
        return nb & ~s;
    }

    bool connected(uint32_t s) const {
        uint32_t grow = s & (~s + 1);
        for (;;) {
            uint32_t next = (grow | (neighborhood(grow) & s)) | grow;
            if (next == grow) break;
            grow = next;
        }
        return grow == s;
    }

    bool assign(size_t idx) {
        if (idx == order.size()) return true;
        int u = order[idx];
        int remaining = static_cast<int>(order.size() - idx);
        for (uint32_t s : connected_subsets) {
            if (s & ~free_mask) continue;
            if (std::popcount(free_mask) - std::popcount(s) < remaining - 1) continue;
            bool compatible = true;
            uint32_t nb = neighborhood(s);
            for (size_t j = 0; j < idx && compatible; ++j) {
                int w = order[j];
                if (h.has_edge(u, w) && (nb & sets[static_cast<size_t>(w)]) == 0)
                    compatible = false;
            }
            if (!compatible) continue;
            sets[static_cast<size_t>(u)] = s;
            free_mask &= ~s;
            if (assign(idx + 1)) return true;
            free_mask |= s;
            sets[static_cast<size_t>(u)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> is_minor_bruteforce(const Graph& h,
                                                                 const Graph& g) {
    if (g.vertex_count() > 12)
        throw std::invalid_argument("minor oracle guarded at 12 host vertices");
    int k = h.vertex_count();
    int n = g.vertex_count();
    if (k == 0) return std::vector<std::vector<int>>{};
    if (k > n || h.edge_count() > g.edge_count()) return std::nullopt;

    MinorSearch s{h, g, k, {}, {}, {}, {}, 0};
    s.host_adj.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        s.host_adj[static_cast<size_t>(u - 1)] |= uint32_t{1} << (v - 1);
        s.host_adj[static_cast<size_t>(v - 1)] |= uint32_t{1} << (u - 1);
    }
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask)
        if (s.connected(mask)) s.connected_subsets.push_back(mask);

    // Most-constrained-first: prefer vertices with many already-ordered
    // neighbors, then high degree.
    std::vector<char> placed(static_cast<size_t>(k) + 1, 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int u = 1; u <= k; ++u) {
            if (placed[static_cast<size_t>(u)]) continue;
            int links = 0;
            for (int w : h.neighbors(u))
                if (placed[static_cast<size_t>(w)]) ++links;
            if (links > best_links || (links == best_links && h.degree(u) > best_deg)) {
                best = u;
                best_links = links;
                best_deg = h.degree(u);
            }
        }
        placed[static_cast<size_t>(best)] = 1;
        s.order.push_back(best);
    }

    s.sets.assign(static_cast<size_t>(k) + 1, 0);
    s.free_mask = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
    if (!s.assign(0)) return std::nullopt;

    std::vector<std::vector<int>> witness(static_cast<size_t>(k));
    for (int u = 1; u <= k; ++u)
        for (uint32_t rest = s.sets[static_cast<size_t>(u)]; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            witness[static_cast<size_t>(u - 1)].push_back(v + 1);
        }
    return witness;
}

}  // namespace gridminor
