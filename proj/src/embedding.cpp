#include "outerturan/embedding.hpp"

#include "face_adjacency.hpp"
#include "outerturan/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace outerturan {

namespace {

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b)
{
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

/// Rotates/reflects a cycle so it starts at its smallest id and continues
/// towards the smaller of that id's two cycle neighbours.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle)
{
    if (cycle.size() < 3)
        return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

/// Positions of `outer` and the chords of `edges` relative to it. Throws if
/// an edge crosses another or if the cycle is not a boundary of the edges.
BlockEmbedding make_block(std::vector<Vertex> outer, const std::vector<Edge> &edges)
{
    BlockEmbedding block;
    block.outer = canonical_cycle(std::move(outer));
    const int p = block.size();
    std::map<Vertex, int> pos;
    for (int i = 0; i < p; ++i)
        pos[block.outer[i]] = i;
    int cycle_edges = 0;
    for (auto e : edges) {
        int a = pos.at(e.u), b = pos.at(e.v);
        if (a > b)
            std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == p - 1)) {
            ++cycle_edges;
            continue;
        }
        block.chords.emplace_back(a, b);
    }
    if (cycle_edges != p)
        throw NotOuterplanarError("block boundary is not a cycle of the graph");
    std::sort(block.chords.begin(), block.chords.end());
    for (std::size_t i = 0; i < block.chords.size(); ++i)
        for (std::size_t j = i + 1; j < block.chords.size(); ++j)
            if (chords_cross(block.chords[i], block.chords[j]))
                throw NotOuterplanarError("crossing chords are unavoidable");
    return block;
}

/// Outer cycle of a 2-connected block, via the separation-pair test.
std::vector<Vertex> block_boundary(const Graph &g, const BiconnectedBlock &block)
{
    const Graph local = g.induced(block.vertices);
    const int m = local.vertex_count();
    if (local.edge_count() > 2 * m - 3)
        throw NotOuterplanarError("block has more than 2n-3 edges");

    std::vector<std::vector<Vertex>> boundary(m);
    std::vector<char> seen(m);
    for (auto e : local.edges()) {
        bool separates = false;
        if (m > 3) {
            std::fill(seen.begin(), seen.end(), 0);
            seen[e.u] = seen[e.v] = 1;
            Vertex start = 0;
            while (start == e.u || start == e.v)
                ++start;
            std::deque<Vertex> queue{start};
            seen[start] = 1;
            int reached = 1;
            while (!queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                for (Vertex w : local.neighbors(x))
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        queue.push_back(w);
                    }
            }
            separates = reached != m - 2;
        }
        if (!separates) {
            boundary[e.u].push_back(e.v);
            boundary[e.v].push_back(e.u);
        }
    }
    for (const auto &b : boundary)
        if (b.size() != 2)
            throw NotOuterplanarError("block has no Hamiltonian boundary cycle");

    std::vector<Vertex> cycle{0};
    Vertex prev = 0, cur = boundary[0][0];
    while (cur != 0) {
        cycle.push_back(cur);
        Vertex next = boundary[cur][0] == prev ? boundary[cur][1] : boundary[cur][0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(cycle.size()) != m)
        throw NotOuterplanarError("block boundary edges split into several cycles");
    for (auto &v : cycle)
        v = block.vertices[v];
    return cycle;
}

} // namespace

std::vector<Edge> Face::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.push_back(Edge::of(vertices[i], vertices[(i + 1) % vertices.size()]));
    return out;
}

std::vector<Vertex> Face::canonical() const { return canonical_cycle(vertices); }

OuterplaneEmbedding recognize_outerplanar(const Graph &g)
{
    const auto bcd = biconnected_decomposition(g);
    OuterplaneEmbedding emb;
    emb.graph = g;
    emb.bridges = bcd.bridges;
    emb.isolated = bcd.isolated;
    for (const auto &block : bcd.blocks)
        emb.blocks.push_back(make_block(block_boundary(g, block), block.edges));
    return emb;
}

OuterplaneEmbedding embed_in_convex_position(const Graph &g, const std::vector<Vertex> &order)
{
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw InvalidArgument("convex order must list every vertex once");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
            throw InvalidArgument("convex order must be a permutation");
        pos[order[i]] = i;
    }
    std::vector<std::pair<int, int>> drawn;
    for (auto e : g.edges())
        drawn.emplace_back(std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v]));
    for (std::size_t i = 0; i < drawn.size(); ++i)
        for (std::size_t j = i + 1; j < drawn.size(); ++j)
            if (chords_cross(drawn[i], drawn[j]))
                throw NotOuterplanarError("edges cross in the given convex order");

    const auto bcd = biconnected_decomposition(g);
    OuterplaneEmbedding emb;
    emb.graph = g;
    emb.bridges = bcd.bridges;
    emb.isolated = bcd.isolated;
    for (const auto &block : bcd.blocks) {
        std::vector<Vertex> outer = block.vertices;
        std::sort(outer.begin(), outer.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        emb.blocks.push_back(make_block(std::move(outer), block.edges));
    }
    return emb;
}

std::vector<Vertex> convex_order(const OuterplaneEmbedding &emb)
{
    const int n = emb.vertex_count();
    // Every block or bridge is a "piece" given by its boundary cycle.
    std::vector<std::vector<Vertex>> pieces;
    for (const auto &b : emb.blocks)
        pieces.push_back(b.outer);
    for (auto e : emb.bridges)
        pieces.push_back({e.u, e.v});

    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    std::vector<char> used(pieces.size(), 0);
    for (std::size_t done = 0; done < pieces.size(); ++done) {
        std::size_t pick = pieces.size();
        std::size_t anchor_at = 0;
        for (std::size_t i = 0; i < pieces.size() && pick == pieces.size(); ++i) {
            if (used[i])
                continue;
            for (std::size_t j = 0; j < pieces[i].size(); ++j)
                if (placed[pieces[i][j]]) {
                    pick = i;
                    anchor_at = j;
                    break;
                }
        }
        if (pick == pieces.size()) {
            // New component.
            for (std::size_t i = 0; i < pieces.size(); ++i)
                if (!used[i]) {
                    pick = i;
                    break;
                }
            used[pick] = 1;
            for (Vertex v : pieces[pick]) {
                order.push_back(v);
                placed[v] = 1;
            }
            continue;
        }
        used[pick] = 1;
        auto cycle = pieces[pick];
        std::rotate(cycle.begin(), cycle.begin() + anchor_at, cycle.end());
        auto where = std::find(order.begin(), order.end(), cycle[0]) + 1;
        for (std::size_t j = 1; j < cycle.size(); ++j) {
            if (placed[cycle[j]])
                throw ConsistencyError("pieces of the embedding share more than one vertex");
            placed[cycle[j]] = 1;
        }
        order.insert(where, cycle.begin() + 1, cycle.end());
    }
    for (Vertex v = 0; v < n; ++v)
        if (!placed[v])
            order.push_back(v);
    return order;
}

void validate_embedding(const OuterplaneEmbedding &emb)
{
    const Graph &g = emb.graph;
    const int n = g.vertex_count();
    std::vector<Edge> drawn;
    std::vector<int> blocks_at(n, 0);
    for (const auto &b : emb.blocks) {
        const int p = b.size();
        if (p < 3)
            throw NotOuterplanarError("block with fewer than three vertices");
        std::vector<Vertex> sorted = b.outer;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw NotOuterplanarError("vertex repeated on a block's outer cycle");
        for (Vertex v : b.outer) {
            if (v < 0 || v >= n)
                throw NotOuterplanarError("block vertex out of range");
            ++blocks_at[v];
        }
        for (int i = 0; i < p; ++i)
            drawn.push_back(Edge::of(b.outer[i], b.outer[(i + 1) % p]));
        for (std::size_t i = 0; i < b.chords.size(); ++i) {
            auto [a, c] = b.chords[i];
            if (a < 0 || c >= p || c - a < 2 || (a == 0 && c == p - 1))
                throw NotOuterplanarError("chord is not a diagonal of its block");
            drawn.push_back(Edge::of(b.outer[a], b.outer[c]));
            for (std::size_t j = i + 1; j < b.chords.size(); ++j)
                if (chords_cross(b.chords[i], b.chords[j]))
                    throw NotOuterplanarError("crossing chords");
        }
    }
    for (std::size_t i = 0; i < emb.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < emb.blocks.size(); ++j) {
            int shared = 0;
            for (Vertex v : emb.blocks[i].outer)
                shared += std::count(emb.blocks[j].outer.begin(), emb.blocks[j].outer.end(), v) > 0;
            if (shared > 1)
                throw NotOuterplanarError("two blocks share more than one vertex");
        }
    for (auto e : emb.bridges)
        drawn.push_back(Edge::of(e.u, e.v));
    std::sort(drawn.begin(), drawn.end());
    if (!std::equal(drawn.begin(), drawn.end(), g.edges().begin(), g.edges().end()))
        throw NotOuterplanarError("embedding edges differ from the graph's edges");
    for (Vertex v : emb.isolated)
        if (v < 0 || v >= n || g.degree(v) != 0)
            throw NotOuterplanarError("listed isolated vertex has edges");
    // Each vertex must have a planar home: a block cycle, a bridge, or the isolated list.
    std::vector<char> covered(n, 0);
    for (const auto &b : emb.blocks)
        for (Vertex v : b.outer)
            covered[v] = 1;
    for (auto e : emb.bridges)
        covered[e.u] = covered[e.v] = 1;
    for (Vertex v : emb.isolated)
        covered[v] = 1;
    if (std::count(covered.begin(), covered.end(), 0) != 0)
        throw NotOuterplanarError("vertex missing from the embedding");
    // A cycle through several blocks would make them one block.
    auto bcd = biconnected_decomposition(g);
    if (bcd.blocks.size() != emb.blocks.size())
        throw NotOuterplanarError("blocks do not match the graph's biconnected components");
}

std::vector<Face> inner_faces(const OuterplaneEmbedding &emb)
{
    std::vector<Face> faces;
    for (std::size_t bi = 0; bi < emb.blocks.size(); ++bi) {
        const auto &b = emb.blocks[bi];
        const int p = b.size();
        std::vector<std::vector<int>> chords_at(p);
        for (auto [i, j] : b.chords)
            chords_at[j].push_back(i);
        for (auto &list : chords_at)
            std::sort(list.rbegin(), list.rend());

        auto emit = [&](const std::vector<int> &positions) {
            Face f;
            f.block = static_cast<int>(bi);
            for (int q : positions)
                f.vertices.push_back(b.outer[q]);
            faces.push_back(std::move(f));
        };

        std::vector<int> stack;
        for (int j = 0; j < p; ++j) {
            for (int i : chords_at[j]) {
                std::vector<int> popped;
                while (!stack.empty() && stack.back() != i) {
                    popped.push_back(stack.back());
                    stack.pop_back();
                }
                if (stack.empty())
                    throw ConsistencyError("chord scan lost its left endpoint");
                std::vector<int> face{i};
                face.insert(face.end(), popped.rbegin(), popped.rend());
                face.push_back(j);
                emit(face);
            }
            stack.push_back(j);
        }
        emit(stack);
    }
    return faces;
}

bool is_two_connected(const Graph &g)
{
    const int n = g.vertex_count();
    if (n < 2)
        return false;
    if (n == 2)
        return g.edge_count() == 1;
    auto bcd = biconnected_decomposition(g);
    return bcd.blocks.size() == 1 && bcd.bridges.empty() && bcd.isolated.empty() &&
           static_cast<int>(bcd.blocks.front().vertices.size()) == n;
}

bool is_edge_maximal(const OuterplaneEmbedding &emb)
{
    const Graph &g = emb.graph;
    const int n = g.vertex_count();
    if (n < 2)
        throw InvalidArgument("edge-maximality needs at least two vertices");

    bool connected_triangulated = is_two_connected(g);
    if (connected_triangulated)
        for (const auto &f : inner_faces(emb))
            if (f.size() != 3)
                connected_triangulated = false;

    const bool edge_count_tight = g.edge_count() == 2 * n - 3;

    bool no_insertable_edge = true;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Vertex a = 0; a < n && no_insertable_edge; ++a)
        for (Vertex b = a + 1; b < n && no_insertable_edge; ++b) {
            if (g.has_edge(a, b))
                continue;
            auto extended = edges;
            extended.push_back(Edge{a, b});
            try {
                recognize_outerplanar(make_graph_from_edges(n, std::move(extended)));
                no_insertable_edge = false;
            } catch (const NotOuterplanarError &) {
            }
        }

    if (connected_triangulated != edge_count_tight || edge_count_tight != no_insertable_edge)
        throw ConsistencyError("edge-maximality characterisations disagree");
    return edge_count_tight;
}

bool is_outer_edge(const OuterplaneEmbedding &emb, Vertex u, Vertex v)
{
    const Edge e = Edge::of(u, v);
    if (std::find(emb.bridges.begin(), emb.bridges.end(), e) != emb.bridges.end())
        return true;
    for (const auto &b : emb.blocks) {
        const int p = b.size();
        for (int i = 0; i < p; ++i)
            if (Edge::of(b.outer[i], b.outer[(i + 1) % p]) == e)
                return true;
    }
    return false;
}

namespace {

struct DualTables {
    std::vector<Face> faces;
    detail::SubtreeSums sums;
};

DualTables dual_tables(const OuterplaneEmbedding &emb)
{
    DualTables t;
    t.faces = inner_faces(emb);
    auto adj = detail::face_adjacency(emb.graph, t.faces);
    std::vector<int> weight;
    for (const auto &f : t.faces)
        weight.push_back(f.size() - 2);
    t.sums = detail::subtree_sums(adj.neighbors, weight, std::max(emb.vertex_count() - 2, 1));
    return t;
}

} // namespace

std::set<int> cycle_length_set(const OuterplaneEmbedding &emb)
{
    auto t = dual_tables(emb);
    std::set<int> out;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const auto &s = t.sums.sums(static_cast<int>(f));
        for (std::size_t total = 0; total < s.size(); ++total)
            if (s[total])
                out.insert(static_cast<int>(total) + 2);
    }
    return out;
}

std::optional<std::vector<Vertex>> find_cycle_via_faces(const OuterplaneEmbedding &emb, int length)
{
    if (length < 3)
        throw InvalidArgument("cycle length must be at least 3");
    if (length > emb.vertex_count())
        return std::nullopt;
    auto t = dual_tables(emb);
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const auto &s = t.sums.sums(static_cast<int>(f));
        if (!s[length - 2])
            continue;
        auto chosen = t.sums.reconstruct(static_cast<int>(f), length - 2);
        const auto &block = emb.blocks[t.faces[f].block];
        std::vector<char> in(block.size(), 0);
        std::map<Vertex, int> pos;
        for (int i = 0; i < block.size(); ++i)
            pos[block.outer[i]] = i;
        for (int c : chosen)
            for (Vertex v : t.faces[c].vertices)
                in[pos.at(v)] = 1;
        // The union of a connected set of faces is a polygon whose corners
        // keep their order along the block's outer cycle.
        std::vector<Vertex> cycle;
        for (int i = 0; i < block.size(); ++i)
            if (in[i])
                cycle.push_back(block.outer[i]);
        if (static_cast<int>(cycle.size()) != length)
            throw ConsistencyError("face union has the wrong boundary length");
        return cycle;
    }
    return std::nullopt;
}

std::set<int> path_length_set(const OuterplaneEmbedding &emb, Vertex u, Vertex v)
{
    if (!emb.graph.has_edge(u, v) || !is_outer_edge(emb, u, v))
        throw InvalidArgument("path spectrum needs an edge on the outer face");
    if (!is_edge_maximal(emb))
        throw InvalidArgument("path spectrum is only defined here for edge-maximal embeddings");
    std::set<int> out{1};
    if (emb.vertex_count() == 2)
        return out;

    // A u-v path of length >= 2 closes with uv into a cycle; those cycles
    // are the subtrees of the (tree-shaped) weak dual that contain uv's face.
    const auto faces = inner_faces(emb);
    auto adj = detail::face_adjacency(emb.graph, faces);
    const int home = adj.faces_of_edge[emb.graph.edge_index(u, v)].front();
    std::vector<std::vector<int>> rerooted(faces.size());
    // Re-root the tree at `home` by listing it first.
    std::vector<int> order{home};
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != home)
            order.push_back(static_cast<int>(f));
    std::vector<int> index_of(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        index_of[order[i]] = static_cast<int>(i);
    std::vector<int> weight(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        weight[i] = faces[order[i]].size() - 2;
        for (int w : adj.neighbors[order[i]])
            rerooted[i].push_back(index_of[w]);
    }
    auto sums = detail::subtree_sums(rerooted, weight, emb.vertex_count());
    const auto &s = sums.sums(0);
    for (std::size_t total = 0; total < s.size(); ++total)
        if (s[total])
            out.insert(static_cast<int>(total) + 1);
    return out;
}

ContractionResult contract_outer_edge(const OuterplaneEmbedding &emb, Vertex u, Vertex v)
{
    const Graph &g = emb.graph;
    if (!g.has_edge(u, v))
        throw InvalidArgument("cannot contract a missing edge");
    if (!is_outer_edge(emb, u, v))
        throw InvalidArgument("contracted edge must lie on the outer face");
    const Vertex keep = std::min(u, v), drop = std::max(u, v);
    ContractionResult out;
    out.vertex_map.resize(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        out.vertex_map[x] = x == drop ? keep : (x > drop ? x - 1 : x);

    std::vector<Edge> edges;
    for (auto e : g.edges()) {
        if (e == Edge::of(u, v))
            continue;
        edges.push_back(Edge::of(out.vertex_map[e.u], out.vertex_map[e.v]));
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    out.collapsed_parallels = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());
    try {
        out.embedding = recognize_outerplanar(make_graph_from_edges(g.vertex_count() - 1, std::move(edges)));
    } catch (const NotOuterplanarError &) {
        throw ConsistencyError("contracting an outer edge produced a non-outerplanar graph");
    }
    return out;
}

} // namespace outerturan
