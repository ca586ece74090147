#pragma once

#include "outerturan/certifier.hpp"
#include "outerturan/embedding.hpp"
#include "outerturan/turan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace outerturan::io {

/// {"n": N, "edges": [[u,v],...]}, edges sorted.
std::string graph_to_json(const Graph &g);
/// Accepts Graph JSON, or graph6 text (with or without the >>graph6<< header).
/// Throws GraphError(Malformed) on unreadable input.
Graph read_graph(const std::string &text);

std::string to_graph6(const Graph &g);
Graph from_graph6(const std::string &text);

/// {"blocks":[{"outer":[...],"chords":[[i,j],...]}],"bridges":[[u,v],...],"isolated":[...]}
std::string embedding_to_json(const OuterplaneEmbedding &emb);
/// The vertex count is one more than the largest id mentioned. Throws
/// NotOuterplanarError when the described drawing is inconsistent.
OuterplaneEmbedding embedding_from_json(const std::string &text);

/// Reads Embedding JSON when the text has "blocks", otherwise any graph
/// format accepted by read_graph followed by recognize_outerplanar.
OuterplaneEmbedding read_embedding_or_graph(const std::string &text);

std::string certificate_to_json(const Certificate &cert);
Certificate certificate_from_json(const std::string &text);

/// DOT with `// outer:` comments listing each block's boundary in convex order.
std::string embedding_to_dot(const OuterplaneEmbedding &emb, const std::string &name = "G");
std::string weak_dual_to_dot(const OuterplaneEmbedding &emb);
std::string incidence_to_dot(const OuterplaneEmbedding &emb);

struct ComparisonRow {
    int n = 0;
    int k = 0;
    BoundValue bound;
    bool sharp = false;
    FangFormulaResult fang;
    std::optional<int> oracle_value;
    /// Edge count of the chain construction when n is a sharp residue.
    std::optional<long long> construction_edges;

    /// Fang value differs from the oracle; false when no oracle value is known.
    bool fang_divergent() const { return oracle_value && fang.value != *oracle_value; }
};

ComparisonRow comparison_row(int k, int n, std::optional<int> oracle_value);
std::string comparison_csv(const std::vector<ComparisonRow> &rows);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace outerturan::io
