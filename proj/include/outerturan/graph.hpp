#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace outerturan {

using Vertex = int;

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Edges are kept sorted and canonical, so two graphs compare equal exactly
/// when they are structurally identical. Instances are immutable.
class Graph {
  public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool has_edge(Vertex a, Vertex b) const;
    /// Position of the edge in `edges()`, or -1.
    int edge_index(Vertex a, Vertex b) const;

    /// Subgraph on `vertices` (in the given order, relabelled 0..k-1) keeping
    /// the listed edges whose endpoints are both selected.
    Graph induced(std::span<const Vertex> vertices) const;
    /// Same vertex set, only the edges selected by `keep` (indexed like edges()).
    Graph edge_subgraph(const std::vector<bool> &keep) const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

    friend Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list);
    friend Graph make_graph_from_edges(int n, std::vector<Edge> edges);

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;

    void build_adjacency();
};

/// Validates and canonicalises. Throws GraphError on loops, duplicate
/// edges and out-of-range ids.
Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);
/// Same validation, for callers that already hold Edge values.
Graph make_graph_from_edges(int n, std::vector<Edge> edges);

struct BiconnectedBlock {
    std::vector<Vertex> vertices; // sorted
    std::vector<Edge> edges;      // sorted, at least two
};

struct BlockCutDecomposition {
    std::vector<BiconnectedBlock> blocks;
    std::vector<Edge> bridges;
    std::vector<Vertex> cut_vertices;
    std::vector<Vertex> isolated;
};

/// Tarjan's lowpoint decomposition. Single-edge biconnected components are
/// reported as bridges, not blocks. Blocks are ordered by their smallest edge.
BlockCutDecomposition biconnected_decomposition(const Graph &g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

/// True iff g contains a cycle on exactly `length` vertices (not necessarily
/// induced). Exhaustive path extension; intended for small graphs and used as
/// the independent reference for the face-based cycle spectrum.
bool has_cycle_of_length(const Graph &g, int length);

/// Like has_cycle_of_length but returns the cycle's vertex sequence.
std::optional<std::vector<Vertex>> find_cycle_by_search(const Graph &g, int length);

} // namespace outerturan
