#include "outerturan/construct.hpp"

#include "outerturan/errors.hpp"

#include <algorithm>
#include <numeric>

namespace outerturan {

namespace {

void require_k(int k)
{
    if (k < 3)
        throw InvalidArgument("cycle length k must be at least 3");
}

std::vector<Edge> fan_edges(int p)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < p; ++i)
        edges.push_back(Edge{i, i + 1});
    if (p >= 3)
        edges.push_back(Edge{0, p - 1});
    for (int j = 2; j <= p - 2; ++j)
        edges.push_back(Edge{0, j});
    return edges;
}

std::vector<Vertex> identity_order(int n)
{
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

} // namespace

OuterplaneEmbedding fan(int p)
{
    if (p < 2)
        throw InvalidArgument("a fan needs at least two vertices");
    return embed_in_convex_position(make_graph_from_edges(p, fan_edges(p)), identity_order(p));
}

OuterplaneEmbedding build_G0(int k)
{
    require_k(k);
    return fan(k - 1);
}

GadgetH build_H(int k)
{
    require_k(k);
    const int p = k - 1;              // vertices per G0 copy
    const int step = p - 1;           // distance between consecutive face vertices
    const int n = k * step + 1;       // k^2 - 2k + 1
    std::vector<Edge> edges;
    GadgetH h;
    for (int i = 0; i <= k; ++i)
        h.big_face.push_back(i * step);
    for (int i = 0; i < k; ++i) {
        const Vertex base = i * step;
        for (auto e : fan_edges(p))
            edges.push_back(Edge::of(base + e.u, base + e.v));
    }
    h.distinguished = Edge::of(0, k * step);
    edges.push_back(h.distinguished);
    h.embedding = embed_in_convex_position(make_graph_from_edges(n, std::move(edges)), identity_order(n));
    return h;
}

long long ChainParams::expected_vertices() const
{
    const long long kk = k;
    return (kk - 1) + merges * (kk * kk - 2 * kk - 1);
}

long long ChainParams::expected_edges() const
{
    const long long kk = k;
    return (2 * kk - 5) * (1 + merges * kk);
}

ChainBuilder::ChainBuilder(int k) : k_(k), gadget_(build_H(k))
{
    order_ = identity_order(k - 1);
    edges_ = fan_edges(k - 1);
    target_ = Edge::of(0, k - 2);
}

void ChainBuilder::merge_next()
{
    const int n = vertex_count();
    const Graph &h = gadget_.embedding.graph;
    const int hn = h.vertex_count();

    // Orient the target so that b directly follows a in the cyclic order.
    auto ia = std::find(order_.begin(), order_.end(), target_.u) - order_.begin();
    auto ib = std::find(order_.begin(), order_.end(), target_.v) - order_.begin();
    Vertex a = target_.u, b = target_.v;
    std::ptrdiff_t at = ia;
    if ((ia + 1) % n != ib) {
        if ((ib + 1) % n != ia)
            throw ConsistencyError("merge target is not a boundary edge");
        std::swap(a, b);
        at = ib;
    }

    // H's outer cycle is 0..hn-1 with the distinguished edge (hn-1, 0).
    std::vector<Vertex> map(hn);
    map[0] = a;
    map[hn - 1] = b;
    for (int j = 1; j < hn - 1; ++j)
        map[j] = n + j - 1;
    for (auto e : h.edges())
        if (e != gadget_.distinguished)
            edges_.push_back(Edge::of(map[e.u], map[e.v]));
    order_.insert(order_.begin() + at + 1, map.begin() + 1, map.end() - 1);

    const int middle = (hn - 1) / 2;
    target_ = Edge::of(map[middle], map[middle + 1]);
    ++merges_;
}

OuterplaneEmbedding ChainBuilder::embedding() const
{
    return embed_in_convex_position(make_graph_from_edges(vertex_count(), edges_), order_);
}

OuterplaneEmbedding build_chain(int k, int merges)
{
    require_k(k);
    if (merges < 0)
        throw InvalidArgument("merge count must be non-negative");
    ChainBuilder builder(k);
    for (int i = 0; i < merges; ++i)
        builder.merge_next();
    return builder.embedding();
}

} // namespace outerturan
