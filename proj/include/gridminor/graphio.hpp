#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gridminor/embedding.hpp"
#include "gridminor/fabric.hpp"
#include "gridminor/problem_graph.hpp"

namespace gridminor {

/// Raised by every reader on malformed input, carrying the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// QUBO text: `qubo <n>` then `<i> <j> <value>` triplets. Diagonal entries
/// are vertex weights; off-diagonal entries produce an edge when any entry
/// for the pair is nonzero. Both (i,j) and (j,i) are accepted and their
/// values summed; repeating the same ordered pair is an error.
ProblemGraph read_qubo(const std::string& text);

/// Graph text: `graph <n>` then `e <u> <v>` lines.
ProblemGraph read_graph(const std::string& text);
std::string write_graph(const ProblemGraph& g);

/// Fabric text: `fabric <m> <c>` then `dead <n>` lines, duplicates rejected.
Fabric read_fabric(const std::string& text);
std::string write_fabric(const Fabric& f);

/// Serialized embedding: problem node -> ordered fabric vertex list, plus
/// provenance (algorithm, corner, drops — or "clique" for the canonical
/// construction).
struct EmbeddingRecord {
    int n_p = 0;
    int m = 0;
    int c = 0;
    std::string provenance;
    std::vector<std::vector<int>> chains;  // chains[k] for node k+1

    friend bool operator==(const EmbeddingRecord&, const EmbeddingRecord&) = default;
};

/// Embedding text: `embedding <n_P> <m> <c> <provenance>` then one
/// `node <k>: <v1> <v2> ...` line per logical node.
EmbeddingRecord read_embedding(const std::string& text);
std::string write_embedding(const EmbeddingRecord& e);

EmbeddingRecord to_record(const CliqueEmbedding& e, const std::string& provenance);

}  // namespace gridminor
