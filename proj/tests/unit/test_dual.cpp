#include "outerturan/construct.hpp"
#include "outerturan/dual.hpp"
#include "outerturan/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace outerturan;

namespace {

Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < n; ++i)
        list.emplace_back(i, (i + 1) % n);
    return make_graph(n, list);
}

/// Two 4-cycles sharing the edge (1, 4): 0-1-4-5 and 1-2-3-4.
Graph two_squares() { return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}); }

std::vector<int> degrees(const WeakDualForest &d)
{
    std::vector<int> out;
    for (const auto &a : d.adjacency)
        out.push_back(static_cast<int>(a.size()));
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_outerplanar(int n, double drop, std::mt19937 &rng)
{
    auto t = oracle_ref::random_triangulation(n, rng);
    return oracle_ref::shuffled(oracle_ref::random_subgraph(t, drop, rng), rng);
}

} // namespace

TEST_CASE("weak dual shapes")
{
    auto f5 = weak_dual(fan(5));
    CHECK(f5.nodes.size() == 3);
    CHECK(degrees(f5) == std::vector<int>{1, 1, 2});

    auto c6 = weak_dual(recognize_outerplanar(cycle_graph(6)));
    CHECK(c6.nodes.size() == 1);
    CHECK(c6.edges.empty());

    // Hexagon with five 2-node paths hanging off it.
    auto h = weak_dual(build_H(5).embedding);
    CHECK(h.nodes.size() == 11);
    CHECK(h.edges.size() == 10);
    CHECK(degrees(h) == std::vector<int>{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 5});
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        if (h.nodes[i].size() == 6)
            CHECK(h.adjacency[i].size() == 5);
}

TEST_CASE("weak dual is a forest with one tree per block")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto emb = recognize_outerplanar(random_outerplanar(2 + trial % 14, 0.3, rng));
        auto d = weak_dual(emb);
        int chords = 0, trees = 0;
        for (const auto &b : emb.blocks) {
            chords += static_cast<int>(b.chords.size());
            ++trees;
        }
        CHECK(static_cast<int>(d.edges.size()) == chords);
        CHECK(d.nodes.size() == d.edges.size() + trees);
    }
}

TEST_CASE("triangular block examples")
{
    auto c4 = triangular_blocks(recognize_outerplanar(cycle_graph(4)));
    CHECK(c4.blocks.size() == 4);
    for (const auto &b : c4.blocks)
        CHECK(b.kind == BlockKind::Trivial);

    auto f6 = triangular_blocks(fan(6));
    REQUIRE(f6.blocks.size() == 1);
    CHECK(f6.blocks[0].kind == BlockKind::Nontrivial);
    CHECK(f6.blocks[0].edges.size() == 9);

    auto h = triangular_blocks(build_H(5).embedding);
    CHECK(h.blocks.size() == 6);
    int nontrivial = 0;
    for (const auto &b : h.blocks)
        if (b.kind == BlockKind::Nontrivial) {
            ++nontrivial;
            CHECK(b.vertices.size() == 4);
            CHECK(b.edges.size() == 5);
        }
    CHECK(nontrivial == 5);
}

TEST_CASE("triangular blocks equal the classes of edges sharing a triangle")
{
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 9;
        auto g = random_outerplanar(n, 0.1 + 0.1 * (trial % 4), rng);
        auto emb = recognize_outerplanar(g);
        auto part = triangular_blocks(emb);
        std::vector<std::vector<Edge>> got;
        for (const auto &b : part.blocks) {
            got.push_back(b.edges);
            // Each nontrivial block is itself edge-maximal outerplanar.
            if (b.kind == BlockKind::Nontrivial) {
                const int bn = static_cast<int>(b.vertices.size());
                CHECK(static_cast<int>(b.edges.size()) == 2 * bn - 3);
                CHECK(static_cast<int>(b.triangles.size()) == bn - 2);
            } else {
                CHECK(b.edges.size() == 1);
            }
        }
        std::sort(got.begin(), got.end());
        CHECK(got == oracle_ref::triangle_classes(g));
        for (auto e : g.edges()) {
            const int idx = part.block_of(e);
            REQUIRE(idx >= 0);
            CHECK(std::binary_search(part.blocks[idx].edges.begin(), part.blocks[idx].edges.end(), e));
        }
    }
}

TEST_CASE("terminal classification")
{
    auto h = build_H(5).embedding;
    for (const auto &b : classify_terminal(triangular_blocks(h), h).blocks)
        CHECK(b.terminal);

    auto sq = recognize_outerplanar(two_squares());
    auto part = classify_terminal(triangular_blocks(sq), sq);
    const int middle = part.block_of(Edge{1, 4});
    REQUIRE(middle >= 0);
    CHECK_FALSE(part.blocks[middle].terminal);
    int terminal = 0;
    for (const auto &b : part.blocks)
        terminal += b.terminal;
    CHECK(terminal == 6);

    auto c4 = recognize_outerplanar(cycle_graph(4));
    for (const auto &b : classify_terminal(triangular_blocks(c4), c4).blocks)
        CHECK(b.terminal);
}

TEST_CASE("face/block incidence forest")
{
    auto h = build_H(5).embedding;
    auto inc = face_block_incidence(h);
    CHECK(inc.face_nodes.size() == 1);
    CHECK(inc.block_nodes.size() == 6);
    CHECK(inc.edges.size() == 6);

    CHECK(face_block_incidence(fan(5)).edges.empty());
    CHECK(face_block_incidence(fan(5)).face_nodes.empty());

    auto sq = face_block_incidence(recognize_outerplanar(two_squares()));
    CHECK(sq.face_nodes.size() == 2);
    // Path face - shared block - face, plus the six outer trivial blocks as leaves.
    std::map<int, int> block_degree;
    for (auto [f, b] : sq.edges)
        ++block_degree[b];
    int shared = 0;
    for (auto [b, d] : block_degree)
        shared += d == 2;
    CHECK(shared == 1);
}

TEST_CASE("lemma face examples")
{
    auto h = find_lemma_face(build_H(5).embedding);
    REQUIRE(h.has_value());
    CHECK(h->face.size() == 6);
    CHECK(h->terminal_blocks.size() == 6);

    auto c4 = find_lemma_face(recognize_outerplanar(cycle_graph(4)));
    REQUIRE(c4.has_value());
    CHECK(c4->face.size() == 4);
    CHECK(c4->terminal_blocks.size() == 4);

    CHECK_FALSE(find_lemma_face(fan(7)).has_value());
    CHECK_FALSE(find_lemma_face(fan(5)).has_value());

    auto sq = find_lemma_face(recognize_outerplanar(two_squares()));
    REQUIRE(sq.has_value());
    CHECK(sq->terminal_blocks.size() == 3);
}

TEST_CASE("a lemma face exists whenever a (4+)-face does")
{
    std::mt19937 rng(555);
    for (int trial = 0; trial < 400; ++trial) {
        auto emb = recognize_outerplanar(random_outerplanar(3 + trial % 12, 0.3, rng));
        bool big = false;
        for (const auto &f : inner_faces(emb))
            big = big || f.size() >= 4;
        auto lemma = find_lemma_face(emb);
        CHECK(lemma.has_value() == big);
        if (!lemma)
            continue;
        const int l = lemma->face.size();
        CHECK(l >= 4);
        CHECK(static_cast<int>(lemma->terminal_blocks.size()) >= l - 1);
        CHECK(static_cast<int>(lemma->edge_blocks.size()) == l);
        auto part = triangular_blocks(emb);
        for (int i = 0; i < l; ++i) {
            Edge e = Edge::of(lemma->face.vertices[i], lemma->face.vertices[(i + 1) % l]);
            CHECK(part.block_of(e) == lemma->edge_blocks[i]);
        }
    }
}
