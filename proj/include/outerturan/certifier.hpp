#pragma once

#include "outerturan/embedding.hpp"
#include "outerturan/turan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace outerturan {

/// One step of the inductive argument for e(k^2-2k-1) <= (2k-5)(kn-k-1).
enum class NodeKind {
    Edgeless,      // e = 0
    StripIsolated, // drop isolated vertices, one child
    BaseSmall,     // n = 2, e <= 1
    CutSplit,      // not 2-connected: two children sharing at most one vertex
    BigFaceSplit,  // inner face of size >= k+1: one child per face edge
    LemmaStep,     // (4+)-face with terminal blocks: children G' and H*
    MaximalLeaf,   // edge-maximal, n <= k-1
};

std::string to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(const std::string &name);

/// A graph together with how its vertices sit inside the parent node's graph.
struct CertificateNode {
    NodeKind kind = NodeKind::Edgeless;
    /// Declared counts; the verifier checks them against `graph`.
    int n = 0;
    int e = 0;
    Graph graph;
    /// Child vertex id -> parent vertex id. Empty at the root.
    std::vector<Vertex> vertex_map;

    /// BigFaceSplit: face v1..vl; child i carries face edge (v_i, v_{i+1}).
    /// LemmaStep: face v1..vl; edge (vl, v1) stays in G', the blocks on the
    /// other face edges form H, and H* merges vl into v1.
    std::vector<Vertex> face;
    /// CutSplit at a cut vertex; absent when the graph is disconnected.
    std::optional<Vertex> cut_vertex;
    /// LemmaStep only: H as a subgraph of this node's graph.
    Graph lemma_h;
    std::vector<Vertex> lemma_h_map;

    std::vector<CertificateNode> children;
};

struct Certificate {
    int k = 3;
    CertificateNode root;
};

/// Replays the induction on a C_k-free outerplane graph with n >= 2.
/// Dispatch order: edgeless, isolated vertices, n <= 2, cut structure,
/// face of size >= k+1, (4+)-face via find_lemma_face, edge-maximal leaf.
/// Throws ContainsCycleError when the graph has a k-cycle.
Certificate build_certificate(const OuterplaneEmbedding &emb, int k);

enum class Relation { Equal, LessEqual, Less };

struct AuditLine {
    std::string node_path;
    std::string label;
    Int lhs = 0;
    Relation relation = Relation::LessEqual;
    Int rhs = 0;
    bool holds = false;
};

struct AuditReport {
    bool verdict = false;
    std::vector<AuditLine> lines;
    /// Structural failures, each prefixed with its node path.
    std::vector<std::string> failures;
    Int root_lhs = 0; // e (k^2-2k-1)
    Int root_rhs = 0; // (2k-5)(kn-k-1)
    Int root_slack = 0;

    std::string to_text() const;
};

/// Independent audit: rechecks every node's graph (outerplanar, no k-cycle
/// by exhaustive search), every vertex/edge bookkeeping identity and every
/// inequality in the chain. Never throws on a bad certificate; reports it.
AuditReport verify_certificate(const Certificate &cert, int k);

} // namespace outerturan
