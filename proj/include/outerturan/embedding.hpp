#pragma once

#include "outerturan/graph.hpp"

#include <optional>
#include <set>
#include <vector>

namespace outerturan {

/// One 2-connected block drawn as a polygon: `outer` is the Hamiltonian
/// boundary cycle and every chord is a pair of positions i < j in `outer`.
struct BlockEmbedding {
    std::vector<Vertex> outer;
    std::vector<std::pair<int, int>> chords; // sorted

    int size() const { return static_cast<int>(outer.size()); }
    bool operator==(const BlockEmbedding &) const = default;
};

/// Combinatorial outerplane embedding of a (possibly disconnected) graph.
struct OuterplaneEmbedding {
    Graph graph;
    std::vector<BlockEmbedding> blocks;
    std::vector<Edge> bridges;
    std::vector<Vertex> isolated;

    int vertex_count() const { return graph.vertex_count(); }
    int edge_count() const { return graph.edge_count(); }
    bool operator==(const OuterplaneEmbedding &) const = default;
};

/// Bounded face. Vertices are listed in boundary order, starting at the
/// vertex with the smallest position on its block's outer cycle.
struct Face {
    std::vector<Vertex> vertices;
    int block = 0; // index into OuterplaneEmbedding::blocks

    int size() const { return static_cast<int>(vertices.size()); }
    std::vector<Edge> edges() const;
    /// Rotation/reflection starting at the smallest id, heading to its smaller neighbour.
    std::vector<Vertex> canonical() const;
    bool operator==(const Face &) const = default;
};

/// Throws NotOuterplanarError. For each block the outer cycle is recovered
/// from the separation-pair test (an edge ab of a 2-connected outerplanar
/// block is a chord iff removing a and b disconnects the block), then checked
/// to be Hamiltonian with pairwise non-crossing chords.
OuterplaneEmbedding recognize_outerplanar(const Graph &g);

/// Builds the embedding induced by drawing g's vertices on a circle in the
/// cyclic order `order` (a permutation of 0..n-1). Throws
/// NotOuterplanarError if two edges cross in that drawing.
OuterplaneEmbedding embed_in_convex_position(const Graph &g, const std::vector<Vertex> &order);

/// A cyclic order of all vertices in which no two edges cross; the inverse
/// of embed_in_convex_position.
std::vector<Vertex> convex_order(const OuterplaneEmbedding &emb);

/// Throws NotOuterplanarError when an invariant of the embedding is broken.
void validate_embedding(const OuterplaneEmbedding &emb);

/// All bounded faces, block by block. A block with c chords has c + 1 faces.
std::vector<Face> inner_faces(const OuterplaneEmbedding &emb);

/// Checks the three characterisations of edge-maximality (2-connected with
/// triangular faces; e = 2n - 3; no insertable edge) and throws
/// ConsistencyError if they ever disagree.
bool is_edge_maximal(const OuterplaneEmbedding &emb);

/// Lengths of all u-v paths. (u, v) must be an outer edge of an edge-maximal
/// embedding; throws InvalidArgument otherwise.
std::set<int> path_length_set(const OuterplaneEmbedding &emb, Vertex u, Vertex v);

/// Exact set of cycle lengths, from connected subtrees of the weak dual.
std::set<int> cycle_length_set(const OuterplaneEmbedding &emb);

/// A cycle of exactly `length` vertices found through the weak dual, as a
/// vertex sequence in boundary order, or nullopt.
std::optional<std::vector<Vertex>> find_cycle_via_faces(const OuterplaneEmbedding &emb, int length);

struct ContractionResult {
    OuterplaneEmbedding embedding;
    int collapsed_parallels = 0;
    /// old vertex id -> new vertex id; u and v both map to the merged vertex.
    std::vector<Vertex> vertex_map;
};

/// Merges the endpoints of an outer edge (block boundary edge or bridge).
/// The merged vertex takes min(u, v)'s place; higher ids shift down by one.
ContractionResult contract_outer_edge(const OuterplaneEmbedding &emb, Vertex u, Vertex v);

/// True iff (u, v) is an edge lying on the outer face.
bool is_outer_edge(const OuterplaneEmbedding &emb, Vertex u, Vertex v);

bool is_two_connected(const Graph &g);

} // namespace outerturan
