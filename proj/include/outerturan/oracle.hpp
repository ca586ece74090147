#pragma once

#include "outerturan/embedding.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace outerturan {

/// Triangulation of the convex polygon 0..n-1 as its sorted chord list.
using ChordSet = std::vector<Edge>;

/// Calls `visit` once per triangulation of the convex n-gon, Catalan(n-2)
/// times in total, in a fixed order. n >= 3.
void for_each_triangulation(int n, const std::function<void(const ChordSet &)> &visit);
std::vector<ChordSet> triangulations(int n);

/// Embedding of the polygon 0..n-1 plus the given chords.
OuterplaneEmbedding triangulation_embedding(int n, const ChordSet &chords);

/// Smallest image of the chord set under the 2n rotations/reflections.
ChordSet canonical_triangulation(int n, const ChordSet &chords);

std::uint64_t catalan(int m);

struct CkFreeResult {
    int count = 0;
    std::vector<Edge> witness; // sorted
};

/// Largest C_k-free edge subset of a triangulation. Branch and bound: find
/// one k-cycle through the weak dual, branch on deleting each of its edges
/// (earlier siblings' edges are kept in later branches), prune on edge
/// count. Only subsets with at least `at_least` edges are reported; returns
/// nullopt when none reaches it. Among maximum subsets the first one in the
/// deterministic branching order is returned.
std::optional<CkFreeResult> max_ckfree_edges(const OuterplaneEmbedding &triangulation, int k, int at_least = 0);

enum class SymmetryMode { Off, On, Auto };

struct OracleOptions {
    int cap = 11;
    int jobs = 1;
    SymmetryMode symmetry = SymmetryMode::Off;
    /// Called after each triangulation is scanned with (done, total).
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct OracleResult {
    int n = 0;
    int k = 0;
    int value = 0;
    Graph witness;
    std::uint64_t triangulations_scanned = 0;
    std::chrono::duration<double> elapsed{};
};

/// ex_OP(n, C_k) by sweeping all triangulations of the n-gon. Throws
/// ResourceRefusal (with a cost estimate) when n exceeds options.cap.
OracleResult exact_ex(int n, int k, const OracleOptions &options = {});

} // namespace outerturan
