#pragma once

#include "outerturan/embedding.hpp"

#include <vector>

namespace outerturan::detail {

struct FaceAdjacency {
    /// Per face, the faces sharing one of its edges.
    std::vector<std::vector<int>> neighbors;
    /// Per graph edge (indexed like Graph::edges()), the inner faces containing it.
    std::vector<std::vector<int>> faces_of_edge;
    /// Dual edges (a < b), one per chord.
    std::vector<std::pair<int, int>> dual_edges;
};

FaceAdjacency face_adjacency(const Graph &g, const std::vector<Face> &faces);

/// Subset-sum sets over connected subtrees of a forest: for each node, the
/// attainable totals of (weight) over subtrees whose topmost node (w.r.t. the
/// DFS rooting) is that node. Values above `cap` are dropped.
struct SubtreeSums {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    /// prefix[v][j] = attainable totals at v using only its first j children.
    std::vector<std::vector<std::vector<char>>> prefix;

    const std::vector<char> &sums(int v) const { return prefix[v].back(); }
    /// Nodes of one subtree topped at v with the given total.
    std::vector<int> reconstruct(int v, int total) const;
};

SubtreeSums subtree_sums(const std::vector<std::vector<int>> &adjacency, const std::vector<int> &weight, int cap);

} // namespace outerturan::detail
