#include "outerturan/certifier.hpp"

#include "outerturan/dual.hpp"
#include "outerturan/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace outerturan {

std::string to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Edgeless:
        return "edgeless";
    case NodeKind::StripIsolated:
        return "strip-isolated";
    case NodeKind::BaseSmall:
        return "base-small";
    case NodeKind::CutSplit:
        return "cut-split";
    case NodeKind::BigFaceSplit:
        return "big-face-split";
    case NodeKind::LemmaStep:
        return "lemma-step";
    case NodeKind::MaximalLeaf:
        return "maximal-leaf";
    }
    return "?";
}

std::optional<NodeKind> node_kind_from_string(const std::string &name)
{
    for (auto kind : {NodeKind::Edgeless, NodeKind::StripIsolated, NodeKind::BaseSmall, NodeKind::CutSplit,
                      NodeKind::BigFaceSplit, NodeKind::LemmaStep, NodeKind::MaximalLeaf})
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

// ---------------------------------------------------------------- builder

namespace {

struct Piece {
    Graph graph;
    std::vector<Vertex> order; // convex order, local ids
    std::vector<Vertex> map;   // local id -> parent id (sorted ascending)
};

/// Induced subgraph on `vertices` (parent ids), relabelled in ascending
/// parent-id order, with the parent's convex order restricted to it.
Piece extract(const Graph &g, const std::vector<Vertex> &order, std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Piece p;
    p.graph = g.induced(vertices);
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    for (Vertex v : order)
        if (local[v] >= 0)
            p.order.push_back(local[v]);
    p.map = std::move(vertices);
    return p;
}

class Builder {
  public:
    explicit Builder(int k) : k_(k) {}

    CertificateNode build(const Graph &g, const std::vector<Vertex> &order, std::vector<Vertex> map)
    {
        CertificateNode node;
        node.n = g.vertex_count();
        node.e = g.edge_count();
        node.graph = g;
        node.vertex_map = std::move(map);

        if (node.e == 0) {
            node.kind = NodeKind::Edgeless;
            return node;
        }
        std::vector<Vertex> touched;
        for (Vertex v = 0; v < node.n; ++v)
            if (g.degree(v) > 0)
                touched.push_back(v);
        if (static_cast<int>(touched.size()) < node.n) {
            node.kind = NodeKind::StripIsolated;
            add_child(node, g, order, touched);
            return node;
        }
        if (node.n == 2) {
            node.kind = NodeKind::BaseSmall;
            return node;
        }
        if (!is_two_connected(g)) {
            cut_split(node, g, order);
            return node;
        }

        const auto emb = embed_in_convex_position(g, order);
        const auto faces = inner_faces(emb);
        const Face *big = nullptr;
        for (const auto &f : faces)
            if (f.size() >= k_ + 1 && (!big || f.size() > big->size()))
                big = &f;
        if (big) {
            big_face_split(node, g, order, emb, *big);
            return node;
        }
        if (auto lemma = find_lemma_face(emb)) {
            lemma_step(node, g, order, emb, *lemma);
            return node;
        }
        if (node.e != 2 * node.n - 3 || node.n > k_ - 1)
            throw ConsistencyError("no case of the induction applies to this graph");
        node.kind = NodeKind::MaximalLeaf;
        return node;
    }

  private:
    int k_;

    void add_child(CertificateNode &node, const Graph &g, const std::vector<Vertex> &order,
                   std::vector<Vertex> vertices)
    {
        Piece p = extract(g, order, std::move(vertices));
        node.children.push_back(build(p.graph, p.order, std::move(p.map)));
    }

    void cut_split(CertificateNode &node, const Graph &g, const std::vector<Vertex> &order)
    {
        node.kind = NodeKind::CutSplit;
        const int n = g.vertex_count();
        auto comps = connected_components(g);
        std::vector<Vertex> first, second;
        if (comps.size() > 1) {
            first = comps.front();
            for (std::size_t i = 1; i < comps.size(); ++i)
                second.insert(second.end(), comps[i].begin(), comps[i].end());
        } else {
            const Vertex cut = biconnected_decomposition(g).cut_vertices.front();
            node.cut_vertex = cut;
            // Side of G - cut holding the smallest other vertex, plus the cut vertex.
            std::vector<char> side(n, 0);
            Vertex start = cut == 0 ? 1 : 0;
            std::vector<Vertex> stack{start};
            side[start] = 1;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbors(v))
                    if (w != cut && !side[w]) {
                        side[w] = 1;
                        stack.push_back(w);
                    }
            }
            for (Vertex v = 0; v < n; ++v) {
                if (side[v] || v == cut)
                    first.push_back(v);
                if (!side[v])
                    second.push_back(v);
            }
        }
        add_child(node, g, order, first);
        add_child(node, g, order, second);
    }

    void big_face_split(CertificateNode &node, const Graph &g, const std::vector<Vertex> &order,
                        const OuterplaneEmbedding &emb, const Face &face)
    {
        node.kind = NodeKind::BigFaceSplit;
        node.face = face.vertices;
        const auto &outer = emb.blocks.at(face.block).outer;
        const int p = static_cast<int>(outer.size());
        std::map<Vertex, int> pos;
        for (int i = 0; i < p; ++i)
            pos[outer[i]] = i;
        const int l = face.size();
        // Child t: the outer-cycle arc from face vertex t to face vertex t+1,
        // i.e. the face edge plus everything hanging across it.
        for (int t = 0; t < l; ++t) {
            std::vector<Vertex> arc;
            int at = pos.at(face.vertices[t]);
            const int stop = pos.at(face.vertices[(t + 1) % l]);
            arc.push_back(outer[at]);
            while (at != stop) {
                at = (at + 1) % p;
                arc.push_back(outer[at]);
            }
            add_child(node, g, order, arc);
        }
    }

    void lemma_step(CertificateNode &node, const Graph &g, const std::vector<Vertex> &order,
                    const OuterplaneEmbedding &emb, const LemmaFace &lemma)
    {
        node.kind = NodeKind::LemmaStep;
        const auto partition = classify_terminal(triangular_blocks(emb), emb);
        const auto &fv = lemma.face.vertices;
        const int l = static_cast<int>(fv.size());

        // The face edge left out of H: the non-terminal block if there is
        // one, otherwise the block on the smallest face edge.
        int skip = -1;
        for (int i = 0; i < l; ++i)
            if (!partition.blocks[lemma.edge_blocks[i]].terminal)
                skip = i;
        if (skip < 0) {
            skip = 0;
            for (int i = 1; i < l; ++i)
                if (Edge::of(fv[i], fv[(i + 1) % l]) < Edge::of(fv[skip], fv[(skip + 1) % l]))
                    skip = i;
        }
        // v1 .. vl with (vl, v1) the skipped edge.
        for (int i = 0; i < l; ++i)
            node.face.push_back(fv[(skip + 1 + i) % l]);
        const Vertex v1 = node.face.front(), vl = node.face.back();

        std::set<Edge> h_block_edges;
        std::vector<Vertex> h_vertices;
        for (int i = 0; i < l; ++i) {
            if (i == skip)
                continue;
            const auto &b = partition.blocks[lemma.edge_blocks[i]];
            h_block_edges.insert(b.edges.begin(), b.edges.end());
            h_vertices.insert(h_vertices.end(), b.vertices.begin(), b.vertices.end());
        }
        Piece h = extract(g, order, h_vertices);
        if (h.graph.edge_count() != static_cast<int>(h_block_edges.size()) + 1)
            throw ConsistencyError("terminal blocks carry edges outside H");

        std::vector<Vertex> rest_vertices;
        for (auto e : g.edges())
            if (!h_block_edges.count(e)) {
                rest_vertices.push_back(e.u);
                rest_vertices.push_back(e.v);
            }
        Piece rest = extract(g, order, rest_vertices);
        if (rest.graph.edge_count() != g.edge_count() - static_cast<int>(h_block_edges.size()))
            throw ConsistencyError("G' is not induced by its vertices");

        auto local = [&](Vertex parent) {
            return static_cast<Vertex>(std::lower_bound(h.map.begin(), h.map.end(), parent) - h.map.begin());
        };
        const auto h_emb = embed_in_convex_position(h.graph, h.order);
        auto contracted = contract_outer_edge(h_emb, local(v1), local(vl));
        if (contracted.collapsed_parallels != 0)
            throw ConsistencyError("contracting (v1, vl) collapsed parallel edges");

        node.lemma_h = h.graph;
        node.lemma_h_map = h.map;

        std::vector<Vertex> star_map(contracted.embedding.vertex_count(), -1);
        for (std::size_t x = 0; x < h.map.size(); ++x)
            if (h.map[x] != vl)
                star_map[contracted.vertex_map[x]] = h.map[x];

        node.children.push_back(build(rest.graph, rest.order, rest.map));
        node.children.push_back(
            build(contracted.embedding.graph, convex_order(contracted.embedding), std::move(star_map)));
    }
};

} // namespace

Certificate build_certificate(const OuterplaneEmbedding &emb, int k)
{
    if (k < 3)
        throw InvalidArgument("cycle length k must be at least 3");
    if (emb.vertex_count() < 2)
        throw InvalidArgument("the bound needs at least two vertices");
    validate_embedding(emb);
    if (auto cycle = find_cycle_via_faces(emb, k)) {
        std::ostringstream msg;
        msg << "graph contains C_" << k << ":";
        for (Vertex v : *cycle)
            msg << ' ' << v;
        throw ContainsCycleError(msg.str());
    }
    Certificate cert;
    cert.k = k;
    cert.root = Builder(k).build(emb.graph, convex_order(emb), {});
    return cert;
}

// ---------------------------------------------------------------- verifier

namespace {

class Verifier {
  public:
    explicit Verifier(int k) : k_(k), d_(bound_denominator(k)), c_(2 * static_cast<Int>(k) - 5) {}

    AuditReport report;

    /// R(n) = (2k-5)(kn-k-1)
    Int rhs(Int n) const { return checked_mul(c_, checked_sub(checked_sub(checked_mul(k_, n), k_), 1)); }

    void visit(const CertificateNode &node, const std::string &path)
    {
        const Graph &g = node.graph;
        const int n = g.vertex_count(), e = g.edge_count();
        if (node.n != n || node.e != e)
            fail(path, "declared (n, e) = (" + std::to_string(node.n) + ", " + std::to_string(node.e) +
                           ") but the graph has (" + std::to_string(n) + ", " + std::to_string(e) + ")");
        if (n < 2)
            fail(path, "fewer than two vertices");

        std::optional<OuterplaneEmbedding> emb;
        try {
            emb = recognize_outerplanar(g);
        } catch (const NotOuterplanarError &err) {
            fail(path, std::string("not outerplanar: ") + err.what());
        }
        if (k_ <= n && has_cycle_of_length(g, k_))
            fail(path, "contains C_" + std::to_string(k_));

        for (std::size_t i = 0; i < node.children.size(); ++i)
            check_map(node.children[i], n, path + "/" + std::to_string(i));

        const Int lhs = checked_mul(e, d_);
        const Int bound = rhs(n);
        switch (node.kind) {
        case NodeKind::Edgeless:
            expect_children(node, 0, path);
            if (e != 0)
                fail(path, "edgeless node has edges");
            line(path, "e(k^2-2k-1) <= (2k-5)(kn-k-1)", lhs, Relation::LessEqual, bound);
            break;
        case NodeKind::StripIsolated:
            strip_isolated(node, path, lhs, bound);
            break;
        case NodeKind::BaseSmall:
            expect_children(node, 0, path);
            if (n != 2 || e > 1)
                fail(path, "base case needs n = 2 and e <= 1");
            line(path, "e(k^2-2k-1) <= k^2-2k-1", lhs, Relation::LessEqual, d_);
            line(path, "k^2-2k-1 <= (2k-5)(k-1)", d_, Relation::LessEqual, bound);
            break;
        case NodeKind::MaximalLeaf:
            expect_children(node, 0, path);
            if (e != 2 * n - 3)
                fail(path, "maximal leaf needs e = 2n-3");
            if (n > k_ - 1)
                fail(path, "maximal leaf needs n <= k-1 (n = " + std::to_string(n) + ")");
            if (!is_two_connected(g))
                fail(path, "maximal leaf is not 2-connected");
            if (emb)
                for (const auto &f : inner_faces(*emb))
                    if (f.size() != 3) {
                        fail(path, "maximal leaf has a non-triangular inner face");
                        break;
                    }
            line(path, "e(k^2-2k-1) = (2n-3)(k^2-2k-1)", lhs, Relation::Equal,
                 checked_mul(2 * static_cast<Int>(n) - 3, d_));
            line(path, "(2n-3)(k^2-2k-1) <= (2k-5)(kn-k-1)", checked_mul(2 * static_cast<Int>(n) - 3, d_),
                 Relation::LessEqual, bound);
            break;
        case NodeKind::CutSplit:
            cut_split(node, path, lhs, bound);
            break;
        case NodeKind::BigFaceSplit:
            big_face_split(node, path, emb, lhs, bound);
            break;
        case NodeKind::LemmaStep:
            lemma_step(node, path, emb, lhs, bound);
            break;
        }

        for (std::size_t i = 0; i < node.children.size(); ++i)
            visit(node.children[i], path + "/" + std::to_string(i));
    }

  private:
    int k_;
    Int d_;
    Int c_;

    void fail(const std::string &path, const std::string &what) { report.failures.push_back(path + ": " + what); }

    void line(const std::string &path, const std::string &label, Int lhs, Relation rel, Int rhs)
    {
        bool ok = rel == Relation::Equal ? lhs == rhs : (rel == Relation::LessEqual ? lhs <= rhs : lhs < rhs);
        report.lines.push_back({path, label, lhs, rel, rhs, ok});
        if (!ok)
            fail(path, "inequality fails: " + label);
    }

    void expect_children(const CertificateNode &node, std::size_t count, const std::string &path)
    {
        if (node.children.size() != count)
            fail(path, to_string(node.kind) + " needs " + std::to_string(count) + " children, has " +
                           std::to_string(node.children.size()));
    }

    void check_map(const CertificateNode &child, int parent_n, const std::string &path)
    {
        const auto &m = child.vertex_map;
        if (static_cast<int>(m.size()) != child.graph.vertex_count()) {
            fail(path, "vertex map does not cover the child's vertices");
            return;
        }
        std::set<Vertex> seen;
        for (Vertex v : m)
            if (v < 0 || v >= parent_n || !seen.insert(v).second)
                fail(path, "vertex map is not injective into the parent");
    }

    static bool map_ok(const CertificateNode &child, int parent_n)
    {
        std::set<Vertex> seen;
        if (static_cast<int>(child.vertex_map.size()) != child.graph.vertex_count())
            return false;
        for (Vertex v : child.vertex_map)
            if (v < 0 || v >= parent_n || !seen.insert(v).second)
                return false;
        return true;
    }

    static std::set<Vertex> vertices_in_parent(const CertificateNode &child)
    {
        return {child.vertex_map.begin(), child.vertex_map.end()};
    }

    static std::vector<Edge> edges_in_parent(const Graph &g, const std::vector<Vertex> &map)
    {
        std::vector<Edge> out;
        for (auto e : g.edges())
            out.push_back(Edge::of(map[e.u], map[e.v]));
        std::sort(out.begin(), out.end());
        return out;
    }

    bool maps_valid(const CertificateNode &node)
    {
        for (const auto &c : node.children)
            if (!map_ok(c, node.graph.vertex_count()))
                return false;
        return true;
    }

    /// Children's edges must partition the node's edges exactly.
    void expect_edge_partition(const CertificateNode &node, const std::string &path)
    {
        std::vector<Edge> all;
        for (const auto &c : node.children) {
            auto part = edges_in_parent(c.graph, c.vertex_map);
            all.insert(all.end(), part.begin(), part.end());
        }
        std::sort(all.begin(), all.end());
        if (!std::equal(all.begin(), all.end(), node.graph.edges().begin(), node.graph.edges().end()))
            fail(path, "children's edges do not partition the edge set");
    }

    bool is_inner_face(const std::optional<OuterplaneEmbedding> &emb, const std::vector<Vertex> &face)
    {
        if (!emb)
            return false;
        Face probe;
        probe.vertices = face;
        const auto want = probe.canonical();
        for (const auto &f : inner_faces(*emb))
            if (f.canonical() == want)
                return true;
        return false;
    }

    Int children_lhs(const CertificateNode &node) const
    {
        Int sum = 0;
        for (const auto &c : node.children)
            sum = checked_add(sum, checked_mul(c.graph.edge_count(), d_));
        return sum;
    }

    Int children_rhs(const CertificateNode &node) const
    {
        Int sum = 0;
        for (const auto &c : node.children)
            sum = checked_add(sum, rhs(c.graph.vertex_count()));
        return sum;
    }

    Int children_vertices(const CertificateNode &node) const
    {
        Int sum = 0;
        for (const auto &c : node.children)
            sum += c.graph.vertex_count();
        return sum;
    }

    void strip_isolated(const CertificateNode &node, const std::string &path, Int lhs, Int bound)
    {
        expect_children(node, 1, path);
        if (node.children.size() != 1 || !maps_valid(node))
            return;
        const auto &child = node.children.front();
        expect_edge_partition(node, path);
        if (child.graph.vertex_count() >= node.graph.vertex_count())
            fail(path, "stripping must remove at least one vertex");
        for (Vertex v = 0; v < node.graph.vertex_count(); ++v)
            if (node.graph.degree(v) > 0 && !vertices_in_parent(child).count(v))
                fail(path, "stripped a vertex that has edges");
        const Int child_bound = rhs(child.graph.vertex_count());
        line(path, "e(k^2-2k-1) = e_child(k^2-2k-1)", lhs, Relation::Equal, children_lhs(node));
        line(path, "e_child(k^2-2k-1) <= (2k-5)(k n_child-k-1)", children_lhs(node), Relation::LessEqual,
             child_bound);
        line(path, "(2k-5)(k n_child-k-1) <= (2k-5)(kn-k-1)", child_bound, Relation::LessEqual, bound);
    }

    void cut_split(const CertificateNode &node, const std::string &path, Int lhs, Int bound)
    {
        expect_children(node, 2, path);
        if (node.children.size() != 2 || !maps_valid(node))
            return;
        const int n = node.graph.vertex_count();
        auto v1 = vertices_in_parent(node.children[0]);
        auto v2 = vertices_in_parent(node.children[1]);
        if (v1.size() < 2 || v2.size() < 2)
            fail(path, "each side of a cut split needs at least two vertices");
        std::vector<Vertex> common;
        std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
        if (common.size() > 1)
            fail(path, "sides of a cut split share more than one vertex");
        if (node.cut_vertex && !(common.size() == 1 && common.front() == *node.cut_vertex))
            fail(path, "sides do not meet exactly at the declared cut vertex");
        std::set<Vertex> both = v1;
        both.insert(v2.begin(), v2.end());
        if (static_cast<int>(both.size()) != n)
            fail(path, "sides of a cut split do not cover every vertex");
        expect_edge_partition(node, path);

        const Int nsum = children_vertices(node);
        line(path, "n1 + n2 <= n + 1", nsum, Relation::LessEqual, n + 1);
        line(path, "e(k^2-2k-1) = (e1+e2)(k^2-2k-1)", lhs, Relation::Equal, children_lhs(node));
        line(path, "(e1+e2)(k^2-2k-1) <= sum (2k-5)(k n_i-k-1)", children_lhs(node), Relation::LessEqual,
             children_rhs(node));
        const Int merged = checked_mul(c_, checked_sub(checked_mul(k_, nsum), 2 * static_cast<Int>(k_) + 2));
        line(path, "sum (2k-5)(k n_i-k-1) = (2k-5)(k(n1+n2)-2k-2)", children_rhs(node), Relation::Equal, merged);
        const Int widened = checked_mul(c_, checked_sub(checked_mul(k_, n + 1), 2 * static_cast<Int>(k_) + 2));
        line(path, "(2k-5)(k(n1+n2)-2k-2) <= (2k-5)(k(n+1)-2k-2)", merged, Relation::LessEqual, widened);
        line(path, "(2k-5)(k(n+1)-2k-2) < (2k-5)(kn-k-1)", widened, Relation::Less, bound);
    }

    void big_face_split(const CertificateNode &node, const std::string &path,
                        const std::optional<OuterplaneEmbedding> &emb, Int lhs, Int bound)
    {
        const auto &face = node.face;
        const int l = static_cast<int>(face.size());
        const int n = node.graph.vertex_count();
        if (l < k_ + 1)
            fail(path, "split face has size " + std::to_string(l) + " < k+1");
        if (!is_inner_face(emb, face))
            fail(path, "split face is not an inner face");
        expect_children(node, static_cast<std::size_t>(l), path);
        if (static_cast<int>(node.children.size()) != l || l < 3 || !maps_valid(node))
            return;

        std::vector<std::set<Vertex>> parts;
        for (const auto &c : node.children)
            parts.push_back(vertices_in_parent(c));
        for (int t = 0; t < l; ++t) {
            const Vertex a = face[t], b = face[(t + 1) % l];
            const auto &c = node.children[t];
            if (!parts[t].count(a) || !parts[t].count(b))
                fail(path, "child " + std::to_string(t) + " misses its face edge");
            else {
                auto ia = std::find(c.vertex_map.begin(), c.vertex_map.end(), a) - c.vertex_map.begin();
                auto ib = std::find(c.vertex_map.begin(), c.vertex_map.end(), b) - c.vertex_map.begin();
                if (!c.graph.has_edge(static_cast<Vertex>(ia), static_cast<Vertex>(ib)))
                    fail(path, "child " + std::to_string(t) + " misses its face edge");
            }
            for (int s = t + 1; s < l; ++s) {
                std::vector<Vertex> common;
                std::set_intersection(parts[t].begin(), parts[t].end(), parts[s].begin(), parts[s].end(),
                                      std::back_inserter(common));
                std::vector<Vertex> expected;
                if (s == t + 1)
                    expected = {face[s]};
                else if (t == 0 && s == l - 1)
                    expected = {face[0]};
                if (common != expected)
                    fail(path, "children " + std::to_string(t) + " and " + std::to_string(s) +
                                   " overlap in the wrong vertices");
            }
        }
        std::set<Vertex> all;
        for (const auto &p : parts)
            all.insert(p.begin(), p.end());
        if (static_cast<int>(all.size()) != n)
            fail(path, "children do not cover every vertex");
        expect_edge_partition(node, path);

        const Int nsum = children_vertices(node);
        line(path, "n_1 + ... + n_l = n + l", nsum, Relation::Equal, n + l);
        line(path, "e(k^2-2k-1) = sum e_i(k^2-2k-1)", lhs, Relation::Equal, children_lhs(node));
        line(path, "sum e_i(k^2-2k-1) <= sum (2k-5)(k n_i-k-1)", children_lhs(node), Relation::LessEqual,
             children_rhs(node));
        const Int merged = checked_mul(c_, checked_sub(checked_sub(checked_mul(k_, n + l), checked_mul(k_, l)), l));
        line(path, "sum (2k-5)(k n_i-k-1) = (2k-5)(k(n+l)-kl-l)", children_rhs(node), Relation::Equal, merged);
        line(path, "(2k-5)(k(n+l)-kl-l) <= (2k-5)(kn-k-1)", merged, Relation::LessEqual, bound);
    }

    void lemma_step(const CertificateNode &node, const std::string &path,
                    const std::optional<OuterplaneEmbedding> &emb, Int lhs, Int bound)
    {
        const auto &face = node.face;
        const int l = static_cast<int>(face.size());
        const int n = node.graph.vertex_count();
        const Graph &g = node.graph;
        if (l < 4 || l > k_ - 1)
            fail(path, "lemma face size " + std::to_string(l) + " outside 4..k-1");
        if (!is_inner_face(emb, face))
            fail(path, "lemma face is not an inner face");
        expect_children(node, 2, path);
        if (node.children.size() != 2 || l < 2 || !maps_valid(node))
            return;
        const Vertex v1 = face.front(), vl = face.back();

        CertificateNode h_shell;
        h_shell.graph = node.lemma_h;
        h_shell.vertex_map = node.lemma_h_map;
        if (!map_ok(h_shell, n)) {
            fail(path, "H's vertex map is invalid");
            return;
        }
        const auto h_edges = edges_in_parent(node.lemma_h, node.lemma_h_map);
        for (auto e : h_edges)
            if (!g.has_edge(e.u, e.v))
                fail(path, "H is not a subgraph");
        if (!std::binary_search(h_edges.begin(), h_edges.end(), Edge::of(v1, vl)))
            fail(path, "H lacks the contracted edge (v1, vl)");

        const auto &rest = node.children[0];
        const auto &star = node.children[1];

        // H* must be H with vl merged into v1, and nothing collapsed.
        std::vector<Edge> merged;
        for (auto e : h_edges) {
            if (e == Edge::of(v1, vl))
                continue;
            Vertex a = e.u == vl ? v1 : e.u, b = e.v == vl ? v1 : e.v;
            merged.push_back(Edge::of(a, b));
        }
        std::sort(merged.begin(), merged.end());
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
            fail(path, "contracting (v1, vl) creates parallel edges");
        if (merged != edges_in_parent(star.graph, star.vertex_map))
            fail(path, "H* is not the contraction of H along (v1, vl)");
        auto h_vertices = vertices_in_parent(h_shell);
        auto star_vertices = vertices_in_parent(star);
        auto expected_star = h_vertices;
        expected_star.erase(vl);
        if (star_vertices != expected_star)
            fail(path, "H* vertices are not H's with vl merged into v1");

        auto rest_vertices = vertices_in_parent(rest);
        std::vector<Vertex> common;
        std::set_intersection(rest_vertices.begin(), rest_vertices.end(), h_vertices.begin(), h_vertices.end(),
                              std::back_inserter(common));
        if (common != std::vector<Vertex>{std::min(v1, vl), std::max(v1, vl)})
            fail(path, "G' and H must share exactly v1 and vl");
        std::set<Vertex> all = rest_vertices;
        all.insert(h_vertices.begin(), h_vertices.end());
        if (static_cast<int>(all.size()) != n)
            fail(path, "G' and H do not cover every vertex");
        auto rest_edges = edges_in_parent(rest.graph, rest.vertex_map);
        std::vector<Edge> overlap, joined;
        std::set_intersection(rest_edges.begin(), rest_edges.end(), h_edges.begin(), h_edges.end(),
                              std::back_inserter(overlap));
        std::set_union(rest_edges.begin(), rest_edges.end(), h_edges.begin(), h_edges.end(),
                       std::back_inserter(joined));
        if (overlap != std::vector<Edge>{Edge::of(v1, vl)})
            fail(path, "G' and H must share exactly the edge (v1, vl)");
        if (!std::equal(joined.begin(), joined.end(), g.edges().begin(), g.edges().end()))
            fail(path, "G' and H do not cover every edge");

        const Int nsum = children_vertices(node);
        line(path, "n' + n* = n + 1", nsum, Relation::Equal, n + 1);
        line(path, "e' + e* = e", rest.graph.edge_count() + star.graph.edge_count(), Relation::Equal,
             g.edge_count());
        line(path, "e(k^2-2k-1) = (e'+e*)(k^2-2k-1)", lhs, Relation::Equal, children_lhs(node));
        line(path, "(e'+e*)(k^2-2k-1) <= (2k-5)(kn'-k-1) + (2k-5)(kn*-k-1)", children_lhs(node),
             Relation::LessEqual, children_rhs(node));
        const Int joined_bound =
            checked_mul(c_, checked_sub(checked_mul(k_, nsum), 2 * static_cast<Int>(k_) + 2));
        line(path, "(2k-5)(kn'-k-1) + (2k-5)(kn*-k-1) = (2k-5)(k(n+1)-2k-2)", children_rhs(node), Relation::Equal,
             joined_bound);
        line(path, "(2k-5)(k(n+1)-2k-2) < (2k-5)(kn-k-1)", joined_bound, Relation::Less, bound);
    }
};

std::string relation_text(Relation r)
{
    switch (r) {
    case Relation::Equal:
        return "=";
    case Relation::LessEqual:
        return "<=";
    case Relation::Less:
        return "<";
    }
    return "?";
}

} // namespace

AuditReport verify_certificate(const Certificate &cert, int k)
{
    AuditReport report;
    if (k < 3 || cert.k != k) {
        report.failures.push_back("root: certificate was built for k=" + std::to_string(cert.k) +
                                  ", audit requested for k=" + std::to_string(k));
        return report;
    }
    Verifier verifier(k);
    try {
        verifier.visit(cert.root, "root");
    } catch (const OverflowError &err) {
        verifier.report.failures.push_back(std::string("arithmetic overflow: ") + err.what());
    }
    report = std::move(verifier.report);
    const Graph &g = cert.root.graph;
    if (g.vertex_count() >= 2) {
        report.root_lhs = checked_mul(g.edge_count(), bound_denominator(k));
        report.root_rhs = bound_numerator(k, g.vertex_count());
        report.root_slack = report.root_rhs - report.root_lhs;
    }
    report.verdict = report.failures.empty();
    if (report.verdict && !bound_holds(g.edge_count(), k, g.vertex_count()).holds)
        throw ConsistencyError("verified certificate whose root violates the bound");
    return report;
}

std::string AuditReport::to_text() const
{
    std::ostringstream out;
    for (const auto &l : lines)
        out << "[" << l.node_path << "] " << l.label << " : " << l.lhs << ' ' << relation_text(l.relation) << ' '
            << l.rhs << (l.holds ? "  ok" : "  FAILED") << '\n';
    for (const auto &f : failures)
        out << "failure: " << f << '\n';
    out << "root: " << root_lhs << " <= " << root_rhs << " (slack " << root_slack << ")\n";
    out << "verdict: " << (verdict ? "true" : "false") << '\n';
    return out.str();
}

} // namespace outerturan
