#include "outerturan/dual.hpp"

#include "face_adjacency.hpp"
#include "outerturan/errors.hpp"

#include <algorithm>
#include <numeric>

namespace outerturan {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

int BlockPartition::block_of(Edge e) const
{
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].edges.begin(), blocks[i].edges.end(), e))
            return static_cast<int>(i);
    return -1;
}

WeakDualForest weak_dual(const OuterplaneEmbedding &emb)
{
    WeakDualForest out;
    out.nodes = inner_faces(emb);
    auto adj = detail::face_adjacency(emb.graph, out.nodes);
    out.edges = adj.dual_edges;
    out.adjacency = adj.neighbors;
    UnionFind uf(static_cast<int>(out.nodes.size()));
    for (auto [a, b] : out.edges)
        if (!uf.unite(a, b))
            throw ConsistencyError("weak dual has a cycle");
    return out;
}

BlockPartition triangular_blocks(const OuterplaneEmbedding &emb)
{
    const Graph &g = emb.graph;
    const auto faces = inner_faces(emb);
    const auto adj = detail::face_adjacency(g, faces);
    const int count = static_cast<int>(faces.size());

    UnionFind uf(count);
    for (auto [a, b] : adj.dual_edges)
        if (faces[a].size() == 3 && faces[b].size() == 3)
            uf.unite(a, b);

    std::vector<int> block_of_root(count, -1);
    std::vector<TriangularBlock> blocks;
    for (int f = 0; f < count; ++f) {
        if (faces[f].size() != 3)
            continue;
        int r = uf.find(f);
        if (block_of_root[r] < 0) {
            block_of_root[r] = static_cast<int>(blocks.size());
            TriangularBlock b;
            b.kind = BlockKind::Nontrivial;
            blocks.push_back(std::move(b));
        }
        auto &b = blocks[block_of_root[r]];
        b.triangles.push_back(f);
        for (auto e : faces[f].edges())
            b.edges.push_back(e);
        for (Vertex v : faces[f].vertices)
            b.vertices.push_back(v);
    }
    for (auto &b : blocks) {
        std::sort(b.edges.begin(), b.edges.end());
        b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        bool in_triangle = false;
        for (int f : adj.faces_of_edge[i])
            in_triangle = in_triangle || faces[f].size() == 3;
        if (in_triangle)
            continue;
        TriangularBlock b;
        Edge e = g.edges()[i];
        b.edges = {e};
        b.vertices = {e.u, e.v};
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const TriangularBlock &a, const TriangularBlock &b) { return a.edges.front() < b.edges.front(); });
    return BlockPartition{std::move(blocks)};
}

namespace {

/// For every block, the distinct (4+)-faces it shares an edge with.
std::vector<std::vector<int>> big_faces_per_block(const BlockPartition &partition, const OuterplaneEmbedding &emb,
                                                  const std::vector<Face> &faces,
                                                  const detail::FaceAdjacency &adj)
{
    std::vector<std::vector<int>> out(partition.blocks.size());
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        for (auto e : partition.blocks[b].edges) {
            int idx = emb.graph.edge_index(e.u, e.v);
            if (idx < 0)
                throw InvalidArgument("partition does not belong to this embedding");
            for (int f : adj.faces_of_edge[idx])
                if (faces[f].size() >= 4)
                    out[b].push_back(f);
        }
        std::sort(out[b].begin(), out[b].end());
        out[b].erase(std::unique(out[b].begin(), out[b].end()), out[b].end());
    }
    return out;
}

} // namespace

BlockPartition classify_terminal(BlockPartition partition, const OuterplaneEmbedding &emb)
{
    const auto faces = inner_faces(emb);
    const auto adj = detail::face_adjacency(emb.graph, faces);
    const auto touching = big_faces_per_block(partition, emb, faces, adj);
    for (std::size_t b = 0; b < partition.blocks.size(); ++b)
        partition.blocks[b].terminal = touching[b].size() <= 1;
    return partition;
}

FaceBlockIncidence face_block_incidence(const OuterplaneEmbedding &emb)
{
    const auto faces = inner_faces(emb);
    const auto adj = detail::face_adjacency(emb.graph, faces);
    const auto partition = triangular_blocks(emb);
    const auto touching = big_faces_per_block(partition, emb, faces, adj);

    FaceBlockIncidence out;
    std::vector<int> face_pos(faces.size(), -1);
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (faces[f].size() >= 4) {
            face_pos[f] = static_cast<int>(out.face_nodes.size());
            out.face_nodes.push_back(static_cast<int>(f));
        }
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        if (touching[b].empty())
            continue;
        const int bp = static_cast<int>(out.block_nodes.size());
        out.block_nodes.push_back(static_cast<int>(b));
        for (int f : touching[b])
            out.edges.emplace_back(face_pos[f], bp);
    }
    std::sort(out.edges.begin(), out.edges.end());

    const int fn = static_cast<int>(out.face_nodes.size());
    UnionFind uf(fn + static_cast<int>(out.block_nodes.size()));
    for (auto [f, b] : out.edges)
        if (!uf.unite(f, fn + b))
            throw ConsistencyError("face/block incidence graph has a cycle");
    return out;
}

std::optional<LemmaFace> find_lemma_face(const OuterplaneEmbedding &emb)
{
    const auto faces = inner_faces(emb);
    const auto partition = classify_terminal(triangular_blocks(emb), emb);

    std::optional<LemmaFace> best;
    bool any_big = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const Face &face = faces[f];
        if (face.size() < 4)
            continue;
        any_big = true;
        LemmaFace candidate;
        candidate.face = face;
        candidate.face_index = static_cast<int>(f);
        int non_terminal = 0;
        for (auto e : face.edges()) {
            int b = partition.block_of(e);
            if (b < 0)
                throw ConsistencyError("face edge outside every triangular block");
            candidate.edge_blocks.push_back(b);
            if (partition.blocks[b].terminal)
                candidate.terminal_blocks.push_back(partition.blocks[b]);
            else
                ++non_terminal;
        }
        auto distinct = candidate.edge_blocks;
        std::sort(distinct.begin(), distinct.end());
        if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
            throw ConsistencyError("two edges of one face lie in the same triangular block");
        // Leaf (or isolated node) of the incidence forest minus terminal blocks.
        if (non_terminal > 1)
            continue;
        if (!best || candidate.face.canonical() < best->face.canonical())
            best = std::move(candidate);
    }
    if (any_big && !best)
        throw ConsistencyError("no (4+)-face meets the terminal-block threshold");
    return best;
}

} // namespace outerturan
