#include "outerturan/graph.hpp"

#include "outerturan/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace outerturan {

namespace {

std::string edge_text(Vertex a, Vertex b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

Graph make_graph_from_edges(int n, std::vector<Edge> edges)
{
    if (n < 0)
        throw GraphError(GraphError::Kind::Malformed, "negative vertex count");
    for (auto &e : edges) {
        if (e.u == e.v)
            throw GraphError(GraphError::Kind::Loop, "loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "edge " + edge_text(e.u, e.v) + " has an id outside 0.." + std::to_string(n - 1));
        e = Edge::of(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge " + edge_text(dup->u, dup->v));

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list)
{
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list)
        edges.push_back(Edge{a, b});
    return make_graph_from_edges(n, std::move(edges));
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
{
    return make_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

void Graph::build_adjacency()
{
    adjacency_.assign(n_, {});
    for (auto e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto &list : adjacency_)
        std::sort(list.begin(), list.end());
}

int Graph::edge_index(Vertex a, Vertex b) const
{
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
        return -1;
    auto key = Edge::of(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> relabel(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        relabel[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> kept;
    for (auto e : edges_)
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0)
            kept.push_back(Edge::of(relabel[e.u], relabel[e.v]));
    return make_graph_from_edges(static_cast<int>(vertices.size()), std::move(kept));
}

Graph Graph::edge_subgraph(const std::vector<bool> &keep) const
{
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[i])
            kept.push_back(edges_[i]);
    Graph g;
    g.n_ = n_;
    g.edges_ = std::move(kept);
    g.build_adjacency();
    return g;
}

BlockCutDecomposition biconnected_decomposition(const Graph &g)
{
    const int n = g.vertex_count();
    BlockCutDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next = 0;
        int children = 0;
    };

    auto emit_component = [&](Edge until) {
        std::vector<Edge> comp;
        while (true) {
            Edge top = stack.back();
            stack.pop_back();
            comp.push_back(top);
            if (top == until)
                break;
        }
        if (comp.size() == 1) {
            out.bridges.push_back(comp.front());
            return;
        }
        BiconnectedBlock block;
        std::sort(comp.begin(), comp.end());
        for (auto e : comp) {
            block.vertices.push_back(e.u);
            block.vertices.push_back(e.v);
        }
        std::sort(block.vertices.begin(), block.vertices.end());
        block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
        block.edges = std::move(comp);
        out.blocks.push_back(std::move(block));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.isolated.push_back(root);
            continue;
        }
        std::vector<Frame> frames;
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1});
        while (!frames.empty()) {
            Frame &f = frames.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (w == f.parent)
                    continue;
                if (disc[w] < 0) {
                    stack.push_back(Edge::of(f.v, w));
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    frames.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    stack.push_back(Edge::of(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            frames.pop_back();
            if (frames.empty())
                break;
            Frame &parent = frames.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] >= disc[parent.v]) {
                if (parent.parent >= 0 || parent.children > 1)
                    is_cut[parent.v] = true;
                emit_component(Edge::of(parent.v, done.v));
            }
        }
    }

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const BiconnectedBlock &a, const BiconnectedBlock &b) { return a.edges.front() < b.edges.front(); });
    std::sort(out.bridges.begin(), out.bridges.end());
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v])
            out.cut_vertices.push_back(v);
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<Vertex> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::optional<std::vector<Vertex>> find_cycle_by_search(const Graph &g, int length)
{
    if (length < 3)
        throw InvalidArgument("cycle length must be at least 3");
    const int n = g.vertex_count();
    if (length > n)
        return std::nullopt;

    std::vector<int> dist(n);
    std::vector<bool> on_path(n, false);
    std::vector<Vertex> path;

    // Cycles are found from their smallest vertex `s`, walking only through larger ids.
    for (Vertex s = 0; s + length <= n; ++s) {
        if (g.degree(s) < 2)
            continue;
        std::fill(dist.begin(), dist.end(), n + 1);
        dist[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v))
                if (w > s && dist[w] > n) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }

        path.assign(1, s);
        on_path[s] = true;
        std::function<bool(Vertex)> extend = [&](Vertex x) -> bool {
            const int have = static_cast<int>(path.size());
            if (have == length)
                return g.has_edge(x, s);
            // x must still reach s using the remaining length - have + 1 edges.
            for (Vertex w : g.neighbors(x)) {
                if (w <= s || on_path[w] || dist[w] > length - have)
                    continue;
                on_path[w] = true;
                path.push_back(w);
                if (extend(w))
                    return true;
                path.pop_back();
                on_path[w] = false;
            }
            return false;
        };
        bool found = extend(s);
        for (Vertex v : path)
            on_path[v] = false;
        if (found)
            return path;
    }
    return std::nullopt;
}

bool has_cycle_of_length(const Graph &g, int length) { return find_cycle_by_search(g, length).has_value(); }

} // namespace outerturan
