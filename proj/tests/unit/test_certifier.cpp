#include "outerturan/certifier.hpp"
#include "outerturan/construct.hpp"
#include "outerturan/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace outerturan;

namespace {

bool mentions(const AuditReport &r, const std::string &needle)
{
    for (const auto &f : r.failures)
        if (f.find(needle) != std::string::npos)
            return true;
    return false;
}

int count_kind(const CertificateNode &node, NodeKind kind)
{
    int c = node.kind == kind;
    for (const auto &ch : node.children)
        c += count_kind(ch, kind);
    return c;
}

/// Deletes edges of k-cycles until none is left.
Graph break_cycles(Graph g, int k, std::mt19937 &rng)
{
    while (auto cyc = find_cycle_by_search(g, k)) {
        const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
        std::vector<bool> keep(g.edge_count(), true);
        keep[g.edge_index((*cyc)[i], (*cyc)[(i + 1) % k])] = false;
        g = g.edge_subgraph(keep);
    }
    return g;
}

} // namespace

TEST_CASE("node kind names round trip")
{
    for (auto kind : {NodeKind::Edgeless, NodeKind::StripIsolated, NodeKind::BaseSmall, NodeKind::CutSplit,
                      NodeKind::BigFaceSplit, NodeKind::LemmaStep, NodeKind::MaximalLeaf})
        CHECK(node_kind_from_string(to_string(kind)) == kind);
    CHECK_FALSE(node_kind_from_string("case-5").has_value());
}

TEST_CASE("single edge is the base case")
{
    auto cert = build_certificate(fan(2), 3);
    CHECK(cert.root.kind == NodeKind::BaseSmall);
    auto rep = verify_certificate(cert, 3);
    CHECK(rep.verdict);
    CHECK(rep.root_lhs == 2);
    CHECK(rep.root_rhs == 2);
    CHECK(rep.root_slack == 0);
}

TEST_CASE("fan(4) with k=5 is a maximal leaf with equality")
{
    auto cert = build_certificate(fan(4), 5);
    CHECK(cert.root.kind == NodeKind::MaximalLeaf);
    auto rep = verify_certificate(cert, 5);
    CHECK(rep.verdict);
    CHECK(rep.root_lhs == 70);
    CHECK(rep.root_rhs == 70);
    CHECK(rep.root_slack == 0);
}

TEST_CASE("chain(5,1) splits on the hexagon into six fans")
{
    auto cert = build_certificate(build_chain(5, 1), 5);
    REQUIRE(cert.root.kind == NodeKind::BigFaceSplit);
    CHECK(cert.root.face.size() == 6);
    REQUIRE(cert.root.children.size() == 6);
    int total = 0;
    for (const auto &c : cert.root.children) {
        CHECK(c.kind == NodeKind::MaximalLeaf);
        CHECK(c.n == 4);
        CHECK(c.e == 5);
        total += c.n;
    }
    CHECK(total == 24);
    auto rep = verify_certificate(cert, 5);
    CHECK(rep.verdict);
    CHECK(rep.root_lhs == 420);
    CHECK(rep.root_rhs == 420);
    CHECK(rep.root_slack == 0);
}

TEST_CASE("graphs containing C_k are rejected")
{
    auto c5 = recognize_outerplanar(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
    CHECK_THROWS_AS(build_certificate(c5, 5), ContainsCycleError);
    CHECK_NOTHROW(build_certificate(c5, 4));
    CHECK_THROWS_AS(build_certificate(fan(5), 2), InvalidArgument);
}

TEST_CASE("dispatch covers every node kind")
{
    // Isolated vertex plus two disjoint edges.
    auto strip = build_certificate(recognize_outerplanar(make_graph(5, {{0, 1}, {3, 4}})), 4);
    CHECK(strip.root.kind == NodeKind::StripIsolated);
    CHECK(count_kind(strip.root, NodeKind::CutSplit) == 1);
    CHECK(verify_certificate(strip, 4).verdict);

    auto empty = build_certificate(recognize_outerplanar(make_graph(3, {})), 3);
    CHECK(empty.root.kind == NodeKind::Edgeless);
    CHECK(verify_certificate(empty, 3).verdict);

    auto path = build_certificate(recognize_outerplanar(make_graph(3, {{0, 1}, {1, 2}})), 3);
    CHECK(path.root.kind == NodeKind::CutSplit);
    CHECK(path.root.cut_vertex == 1);
    CHECK(verify_certificate(path, 3).verdict);

    // Two 4-cycles sharing an edge: 6-face absent, lemma applies for k = 5.
    auto squares = recognize_outerplanar(make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}));
    auto lemma = build_certificate(squares, 5);
    CHECK(lemma.root.kind == NodeKind::LemmaStep);
    CHECK(lemma.root.children.size() == 2);
    CHECK(lemma.root.children[0].n + lemma.root.children[1].n == 7);
    CHECK(lemma.root.children[0].e + lemma.root.children[1].e == 7);
    auto rep = verify_certificate(lemma, 5);
    CHECK(rep.verdict);
    CHECK(rep.root_slack > 0);
}

TEST_CASE("tampered certificates are caught at the right node")
{
    auto good = build_certificate(build_chain(5, 1), 5);

    auto leaf = good;
    leaf.root.children[2].graph = fan(5).graph;
    leaf.root.children[2].n = 5;
    leaf.root.children[2].e = 7;
    auto r1 = verify_certificate(leaf, 5);
    CHECK_FALSE(r1.verdict);
    CHECK(mentions(r1, "root/2: maximal leaf needs n <= k-1"));

    auto counts = good;
    counts.root.children[0].e = 4;
    auto r2 = verify_certificate(counts, 5);
    CHECK_FALSE(r2.verdict);
    CHECK(mentions(r2, "root/0: declared"));

    auto map = good;
    map.root.children[1].vertex_map[0] = map.root.children[1].vertex_map[1];
    CHECK_FALSE(verify_certificate(map, 5).verdict);

    auto dropped = good;
    dropped.root.children.pop_back();
    auto r3 = verify_certificate(dropped, 5);
    CHECK_FALSE(r3.verdict);
    CHECK(mentions(r3, "root: big-face-split needs 6 children"));

    CHECK_FALSE(verify_certificate(good, 6).verdict);
}

TEST_CASE("random C_k-free outerplanar graphs certify")
{
    std::mt19937 rng(8080);
    int lemma_steps = 0, cut_splits = 0, big_faces = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 13;
        const int k = 3 + trial % 6;
        auto t = oracle_ref::random_triangulation(n, rng);
        auto g = oracle_ref::shuffled(break_cycles(oracle_ref::random_subgraph(t, 0.2, rng), k, rng), rng);
        auto cert = build_certificate(recognize_outerplanar(g), k);
        auto rep = verify_certificate(cert, k);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(rep.verdict);
        CHECK(rep.root_slack >= 0);
        CHECK(bound_holds(g.edge_count(), k, n).holds);
        lemma_steps += count_kind(cert.root, NodeKind::LemmaStep);
        cut_splits += count_kind(cert.root, NodeKind::CutSplit);
        big_faces += count_kind(cert.root, NodeKind::BigFaceSplit);
    }
    CHECK(lemma_steps > 0);
    CHECK(cut_splits > 0);
    CHECK(big_faces > 0);
}

TEST_CASE("audit text lists every inequality with integers")
{
    auto rep = verify_certificate(build_certificate(build_chain(4, 1), 4), 4);
    auto text = rep.to_text();
    CHECK(text.find("[root] e(k^2-2k-1) = sum e_i(k^2-2k-1) : 105 = 105  ok") != std::string::npos);
    CHECK(text.find("verdict: true") != std::string::npos);
}
