#include "outerturan/construct.hpp"
#include "outerturan/errors.hpp"
#include "outerturan/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace outerturan;

namespace {

GraphError::Kind error_kind(int n, std::initializer_list<std::pair<int, int>> edges)
{
    try {
        make_graph(n, edges);
    } catch (const GraphError &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return GraphError::Kind::Malformed;
}

Graph random_graph(int n, double p, std::mt19937 &rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> list;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                list.emplace_back(a, b);
    return make_graph(n, list);
}

} // namespace

TEST_CASE("make_graph canonicalises and validates")
{
    auto g = make_graph(2, {{0, 1}});
    CHECK(g.edge_count() == 1);
    auto c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    CHECK(c4.edges()[1] == Edge{0, 3});
    CHECK(c4 == make_graph(4, {{3, 0}, {2, 1}, {1, 0}, {3, 2}}));

    CHECK(error_kind(3, {{0, 1}, {0, 1}}) == GraphError::Kind::DuplicateEdge);
    CHECK(error_kind(3, {{0, 1}, {1, 0}}) == GraphError::Kind::DuplicateEdge);
    CHECK(error_kind(3, {{1, 1}}) == GraphError::Kind::Loop);
    CHECK(error_kind(3, {{0, 3}}) == GraphError::Kind::VertexOutOfRange);
    CHECK(error_kind(3, {{-1, 2}}) == GraphError::Kind::VertexOutOfRange);
}

TEST_CASE("induced and edge subgraphs")
{
    auto c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::vector<Vertex> keep{3, 0, 1};
    auto sub = c4.induced(keep);
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.has_edge(0, 1)); // 3-0
    CHECK(sub.has_edge(1, 2)); // 0-1
    auto half = c4.edge_subgraph({true, false, true, false});
    CHECK(half.vertex_count() == 4);
    CHECK(half.edge_count() == 2);
}

TEST_CASE("biconnected decomposition")
{
    auto c4 = biconnected_decomposition(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(c4.blocks.size() == 1);
    CHECK(c4.cut_vertices.empty());

    auto bowtie = biconnected_decomposition(make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}));
    CHECK(bowtie.blocks.size() == 2);
    CHECK(bowtie.cut_vertices == std::vector<Vertex>{0});

    auto path = biconnected_decomposition(make_graph(3, {{0, 1}, {1, 2}}));
    CHECK(path.blocks.empty());
    CHECK(path.bridges.size() == 2);
    CHECK(path.cut_vertices == std::vector<Vertex>{1});

    auto lonely = biconnected_decomposition(make_graph(3, {{0, 1}}));
    CHECK(lonely.isolated == std::vector<Vertex>{2});
}

TEST_CASE("blocks and bridges partition the edge set")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(3 + trial % 8, 0.35, rng);
        auto d = biconnected_decomposition(g);
        std::vector<Edge> all(d.bridges.begin(), d.bridges.end());
        for (const auto &b : d.blocks) {
            CHECK(b.edges.size() >= 3);
            all.insert(all.end(), b.edges.begin(), b.edges.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(std::equal(all.begin(), all.end(), g.edges().begin(), g.edges().end()));
        for (std::size_t i = 0; i < d.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
                std::vector<Vertex> common;
                std::set_intersection(d.blocks[i].vertices.begin(), d.blocks[i].vertices.end(),
                                      d.blocks[j].vertices.begin(), d.blocks[j].vertices.end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
                for (Vertex v : common)
                    CHECK(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v));
            }
    }
}

TEST_CASE("has_cycle_of_length examples")
{
    auto c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(has_cycle_of_length(c4, 4));
    CHECK_FALSE(has_cycle_of_length(c4, 3));
    CHECK(has_cycle_of_length(fan(4).graph, 3));
    CHECK_THROWS_AS(has_cycle_of_length(c4, 2), InvalidArgument);

    // 18 vertices: the reference DP enumerates every cycle length present.
    auto chain = build_chain(5, 1).graph;
    auto lengths = oracle_ref::cycle_lengths_bruteforce(chain);
    CHECK(lengths.count(5) == 0);
    CHECK_FALSE(has_cycle_of_length(chain, 5));
    for (int len = 3; len <= 18; ++len)
        CHECK(has_cycle_of_length(chain, len) == (lengths.count(len) == 1));
}

TEST_CASE("has_cycle_of_length agrees with the bitmask reference on random graphs")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 9;
        auto g = random_graph(n, 0.3 + 0.05 * (trial % 5), rng);
        auto lengths = oracle_ref::cycle_lengths_bruteforce(g);
        for (int len = 3; len <= n; ++len) {
            const bool has = has_cycle_of_length(g, len);
            CHECK(has == (lengths.count(len) == 1));
            if (auto cyc = find_cycle_by_search(g, len)) {
                REQUIRE(static_cast<int>(cyc->size()) == len);
                std::vector<Vertex> sorted = *cyc;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                for (int i = 0; i < len; ++i)
                    CHECK(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % len]));
            }
        }
    }
}

TEST_CASE("connected components")
{
    auto g = make_graph(6, {{0, 3}, {1, 4}, {4, 5}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 3});
    CHECK(comps[1] == std::vector<Vertex>{1, 4, 5});
    CHECK(comps[2] == std::vector<Vertex>{2});
}
