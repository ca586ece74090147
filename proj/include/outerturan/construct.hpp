#pragma once

#include "outerturan/embedding.hpp"

#include <vector>

namespace outerturan {

/// Fan triangulation: outer cycle 0..p-1, chords (0,2)..(0,p-2). p >= 2.
OuterplaneEmbedding fan(int p);

/// Seed of the extremal family: fan(k - 1), with k - 1 vertices and 2k - 5 edges.
OuterplaneEmbedding build_G0(int k);

struct GadgetH {
    OuterplaneEmbedding embedding;
    /// The (k+1)-face edge that carries no copy of G0; later merged onto the chain.
    Edge distinguished;
    /// The (k+1)-face in boundary order, starting at one end of `distinguished`.
    std::vector<Vertex> big_face;
};

/// A (k+1)-face with a copy of G0 glued onto each face edge except one.
/// Vertex ids follow the outer cycle, so the embedding's outer cycle is 0..N-1.
GadgetH build_H(int k);

struct ChainParams {
    int k = 3;
    int merges = 0;

    /// (k - 1) + m (k^2 - 2k - 1)
    long long expected_vertices() const;
    /// (2k - 5)(1 + m k)
    long long expected_edges() const;
};

/// Grows G0 by gluing copies of H, one merge at a time. Each copy's
/// distinguished edge is laid onto the boundary edge of the previous copy
/// that lies farthest along the boundary from where that copy was attached
/// (for the first merge: G0's closing edge).
class ChainBuilder {
  public:
    explicit ChainBuilder(int k);

    void merge_next();
    int merges() const { return merges_; }
    int vertex_count() const { return static_cast<int>(order_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    OuterplaneEmbedding embedding() const;

  private:
    int k_;
    int merges_ = 0;
    GadgetH gadget_;
    std::vector<Vertex> order_; // convex (outer) order of all vertices
    std::vector<Edge> edges_;
    Edge target_; // boundary edge for the next merge, consecutive in order_
};

/// G0 followed by `merges` H-merges.
OuterplaneEmbedding build_chain(int k, int merges);

} // namespace outerturan
