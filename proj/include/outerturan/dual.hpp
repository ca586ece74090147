#pragma once

#include "outerturan/embedding.hpp"

#include <optional>
#include <vector>

namespace outerturan {

/// Weak dual: one node per inner face (same order as inner_faces), one edge
/// per chord. Always a forest.
struct WeakDualForest {
    std::vector<Face> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
};

enum class BlockKind { Trivial, Nontrivial };

/// Maximal edge-maximal outerplane subgraph. Trivial blocks are a single edge.
struct TriangularBlock {
    std::vector<Edge> edges;      // sorted
    std::vector<Vertex> vertices; // sorted
    BlockKind kind = BlockKind::Trivial;
    bool terminal = false;
    std::vector<int> triangles; // inner-face indices, empty when trivial

    bool operator==(const TriangularBlock &) const = default;
};

/// Blocks are ordered by their smallest edge.
struct BlockPartition {
    std::vector<TriangularBlock> blocks;

    /// Index of the block holding edge e, or -1.
    int block_of(Edge e) const;
};

/// Bipartite forest between (4+)-faces and the triangular blocks they touch.
struct FaceBlockIncidence {
    std::vector<int> face_nodes;  // inner-face indices of the (4+)-faces
    std::vector<int> block_nodes; // indices into BlockPartition::blocks
    /// (position in face_nodes, position in block_nodes)
    std::vector<std::pair<int, int>> edges;
};

struct LemmaFace {
    Face face;
    int face_index = -1;
    /// Partition indices of the blocks on the face's edges, one per edge in
    /// face order (edge i joins vertices[i] and vertices[i+1]).
    std::vector<int> edge_blocks;
    /// The terminal ones among edge_blocks; at least face.size() - 1.
    std::vector<TriangularBlock> terminal_blocks;
};

WeakDualForest weak_dual(const OuterplaneEmbedding &emb);

/// Triangle-connected components of the weak dual become nontrivial blocks;
/// every edge outside all triangles is its own trivial block.
BlockPartition triangular_blocks(const OuterplaneEmbedding &emb);

/// A block is terminal iff it shares edges with at most one (4+)-face.
BlockPartition classify_terminal(BlockPartition partition, const OuterplaneEmbedding &emb);

/// Throws ConsistencyError if the result is not acyclic.
FaceBlockIncidence face_block_incidence(const OuterplaneEmbedding &emb);

/// A (4+)-face whose surrounding blocks are all terminal except at most one,
/// found as a leaf once terminal blocks are deleted from the incidence
/// forest. Ties go to the lexicographically smallest canonical vertex list.
/// nullopt when every inner face is a triangle.
std::optional<LemmaFace> find_lemma_face(const OuterplaneEmbedding &emb);

} // namespace outerturan
