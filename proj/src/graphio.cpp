#include "gridminor/graphio.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace gridminor {

namespace {

// Splits text into (line number, tokens), skipping blank lines.
struct Lines {
    struct Line {
        int number;
        std::vector<std::string> tokens;
    };
    std::vector<Line> items;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            std::vector<std::string> tokens;
            std::istringstream ls(raw);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) items.push_back({number, std::move(tokens)});
        }
    }
};

int parse_int(const Lines::Line& line, size_t field, const char* what) {
    const std::string& tok = line.tokens[field];
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

double parse_double(const Lines::Line& line, size_t field, const char* what) {
    const std::string& tok = line.tokens[field];
    char* end = nullptr;
    double value = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || tok.empty())
        throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

void expect_fields(const Lines::Line& line, size_t count, const char* shape) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, std::string("expected '") + shape + "'");
}

const Lines::Line& header_line(const Lines& lines, const char* keyword) {
    if (lines.items.empty())
        throw ParseError(1, std::string("missing '") + keyword + "' header");
    const auto& first = lines.items.front();
    if (first.tokens[0] != keyword)
        throw ParseError(first.number, std::string("expected '") + keyword + "' header");
    return first;
}

int check_vertex_token(const Lines::Line& line, size_t field, int n, const char* what) {
    int v = parse_int(line, field, what);
    if (v < 1 || v > n)
        throw ParseError(line.number, std::string(what) + " " + std::to_string(v) +
                                          " outside [1," + std::to_string(n) + "]");
    return v;
}

}  // namespace

ProblemGraph read_qubo(const std::string& text) {
    Lines lines(text);
    const auto& header = header_line(lines, "qubo");
    expect_fields(header, 2, "qubo <n>");
    int n = parse_int(header, 1, "variable count");
    if (n < 0) throw ParseError(header.number, "variable count must be non-negative");

    ProblemGraph p;
    p.graph = Graph(n);
    p.vertex_weights.assign(static_cast<size_t>(n) + 1, 0.0);

    std::set<std::pair<int, int>> seen;              // ordered pairs already given
    std::map<std::pair<int, int>, bool> any_nonzero;  // unordered pair -> nonzero entry seen
    for (size_t idx = 1; idx < lines.items.size(); ++idx) {
        const auto& line = lines.items[idx];
        expect_fields(line, 3, "<i> <j> <value>");
        int i = check_vertex_token(line, 0, n, "variable index");
        int j = check_vertex_token(line, 1, n, "variable index");
        double value = parse_double(line, 2, "matrix entry");
        if (!seen.insert({i, j}).second)
            throw ParseError(line.number, "duplicate entry for (" + std::to_string(i) + "," +
                                              std::to_string(j) + ")");
        if (i == j) {
            p.vertex_weights[static_cast<size_t>(i)] = value;
            continue;
        }
        std::pair<int, int> key{std::min(i, j), std::max(i, j)};
        p.edge_weights[key] += value;
        any_nonzero[key] = any_nonzero[key] || value != 0.0;
    }
    for (const auto& [key, nonzero] : any_nonzero) {
        if (nonzero)
            p.graph.add_edge(key.first, key.second);
        else
            p.edge_weights.erase(key);  // zero entries make no edge
    }
    return p;
}

ProblemGraph read_graph(const std::string& text) {
    Lines lines(text);
    const auto& header = header_line(lines, "graph");
    expect_fields(header, 2, "graph <n>");
    int n = parse_int(header, 1, "vertex count");
    if (n < 0) throw ParseError(header.number, "vertex count must be non-negative");

    ProblemGraph p;
    p.graph = Graph(n);
    p.vertex_weights.assign(static_cast<size_t>(n) + 1, 0.0);
    for (size_t idx = 1; idx < lines.items.size(); ++idx) {
        const auto& line = lines.items[idx];
        if (line.tokens[0] != "e")
            throw ParseError(line.number, "expected 'e <u> <v>'");
        expect_fields(line, 3, "e <u> <v>");
        int u = check_vertex_token(line, 1, n, "vertex");
        int v = check_vertex_token(line, 2, n, "vertex");
        if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
        if (p.graph.has_edge(u, v))
            throw ParseError(line.number, "duplicate edge (" + std::to_string(u) + "," +
                                              std::to_string(v) + ")");
        p.graph.add_edge(u, v);
    }
    return p;
}

std::string write_graph(const ProblemGraph& g) {
    std::string out = "graph " + std::to_string(g.graph.vertex_count()) + "\n";
    for (auto [u, v] : g.graph.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Fabric read_fabric(const std::string& text) {
    Lines lines(text);
    const auto& header = header_line(lines, "fabric");
    expect_fields(header, 3, "fabric <m> <c>");
    int m = parse_int(header, 1, "grid dimension");
    int c = parse_int(header, 2, "half-cell size");
    if (m < 1 || c < 1) throw ParseError(header.number, "fabric requires m >= 1 and c >= 1");

    Fabric f(m, c);
    std::set<int> dead;
    for (size_t idx = 1; idx < lines.items.size(); ++idx) {
        const auto& line = lines.items[idx];
        if (line.tokens[0] != "dead")
            throw ParseError(line.number, "expected 'dead <n>'");
        expect_fields(line, 2, "dead <n>");
        int v = check_vertex_token(line, 1, f.vertex_count(), "vertex index");
        if (!dead.insert(v).second)
            throw ParseError(line.number, "duplicate dead vertex " + std::to_string(v));
    }
    return f.with_dead({dead.begin(), dead.end()});
}

std::string write_fabric(const Fabric& f) {
    std::string out = "fabric " + std::to_string(f.m()) + " " + std::to_string(f.c()) + "\n";
    for (int v : f.dead_vertices()) out += "dead " + std::to_string(v) + "\n";
    return out;
}

EmbeddingRecord read_embedding(const std::string& text) {
    Lines lines(text);
    const auto& header = header_line(lines, "embedding");
    expect_fields(header, 5, "embedding <n_P> <m> <c> <provenance>");
    EmbeddingRecord rec;
    rec.n_p = parse_int(header, 1, "node count");
    rec.m = parse_int(header, 2, "grid dimension");
    rec.c = parse_int(header, 3, "half-cell size");
    rec.provenance = header.tokens[4];
    if (rec.n_p < 0 || rec.m < 1 || rec.c < 1)
        throw ParseError(header.number, "embedding requires n_P >= 0, m >= 1, c >= 1");
    int total = 2 * rec.c * rec.m * rec.m;

    rec.chains.assign(static_cast<size_t>(rec.n_p), {});
    std::vector<char> filled(static_cast<size_t>(rec.n_p) + 1, 0);
    for (size_t idx = 1; idx < lines.items.size(); ++idx) {
        const auto& line = lines.items[idx];
        if (line.tokens[0] != "node" || line.tokens.size() < 2)
            throw ParseError(line.number, "expected 'node <k>: <v1> <v2> ...'");
        std::string label = line.tokens[1];
        if (label.empty() || label.back() != ':')
            throw ParseError(line.number, "node id must be followed by ':'");
        label.pop_back();
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(label, &used);
            if (used != label.size()) throw std::invalid_argument(label);
        } catch (const std::exception&) {
            throw ParseError(line.number, "bad node id '" + label + "'");
        }
        if (k < 1 || k > rec.n_p)
            throw ParseError(line.number, "node id " + std::to_string(k) + " outside [1," +
                                              std::to_string(rec.n_p) + "]");
        if (filled[static_cast<size_t>(k)])
            throw ParseError(line.number, "node " + std::to_string(k) + " listed twice");
        filled[static_cast<size_t>(k)] = 1;
        if (line.tokens.size() == 2)
            throw ParseError(line.number, "node " + std::to_string(k) + " has an empty chain");
        for (size_t field = 2; field < line.tokens.size(); ++field) {
            int v = check_vertex_token(line, field, total, "fabric vertex");
            rec.chains[static_cast<size_t>(k - 1)].push_back(v);
        }
    }
    for (int k = 1; k <= rec.n_p; ++k)
        if (!filled[static_cast<size_t>(k)])
            throw ParseError(lines.items.empty() ? 1 : lines.items.back().number,
                             "missing chain for node " + std::to_string(k));
    return rec;
}

std::string write_embedding(const EmbeddingRecord& e) {
    std::string out = "embedding " + std::to_string(e.n_p) + " " + std::to_string(e.m) + " " +
                      std::to_string(e.c) + " " + e.provenance + "\n";
    for (size_t k = 0; k < e.chains.size(); ++k) {
        out += "node " + std::to_string(k + 1) + ":";
        for (int v : e.chains[k]) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

EmbeddingRecord to_record(const CliqueEmbedding& e, const std::string& provenance) {
    EmbeddingRecord rec;
    rec.n_p = e.order();
    rec.m = e.m;
    rec.c = e.c;
    rec.provenance = provenance;
    rec.chains = chain_vertex_lists(e);
    return rec;
}

}  // namespace gridminor
