#include "outerturan/io.hpp"

#include "outerturan/construct.hpp"
#include "outerturan/dual.hpp"
#include "outerturan/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace outerturan::io {

using nlohmann::json;

namespace {

GraphError malformed(const std::string &what) { return GraphError(GraphError::Kind::Malformed, what); }

json edges_json(std::span<const Edge> edges)
{
    json out = json::array();
    for (auto e : edges)
        out.push_back({e.u, e.v});
    return out;
}

std::vector<Edge> edges_from(const json &j)
{
    std::vector<Edge> out;
    for (const auto &pair : j.at("edges")) {
        if (!pair.is_array() || pair.size() != 2)
            throw malformed("edge must be a pair of vertex ids");
        out.push_back(Edge{pair[0].get<int>(), pair[1].get<int>()});
    }
    return out;
}

/// Keeps endpoints as given so make_graph reports loops and duplicates.
Graph graph_from(const json &j)
{
    std::vector<std::pair<int, int>> list;
    for (auto e : edges_from(j))
        list.emplace_back(e.u, e.v);
    return make_graph(j.at("n").get<int>(), list);
}

json parse(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::exception &err) {
        throw malformed(std::string("invalid JSON: ") + err.what());
    }
}

template <class F>
auto guarded(F &&body)
{
    try {
        return body();
    } catch (const json::exception &err) {
        throw malformed(std::string("unexpected JSON shape: ") + err.what());
    }
}

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

json graph_json(const Graph &g) { return {{"n", g.vertex_count()}, {"edges", edges_json(g.edges())}}; }

json node_json(const CertificateNode &node)
{
    json j;
    j["kind"] = to_string(node.kind);
    j["n"] = node.n;
    j["e"] = node.e;
    j["graph"] = graph_json(node.graph);
    j["vertex_map"] = node.vertex_map;
    j["face"] = node.face;
    if (node.cut_vertex)
        j["cut_vertex"] = *node.cut_vertex;
    if (node.kind == NodeKind::LemmaStep) {
        j["h"] = graph_json(node.lemma_h);
        j["h"]["vertex_map"] = node.lemma_h_map;
    }
    j["children"] = json::array();
    for (const auto &c : node.children)
        j["children"].push_back(node_json(c));
    return j;
}

CertificateNode node_from(const json &j, int depth)
{
    if (depth > 10000)
        throw malformed("certificate nested too deeply");
    CertificateNode node;
    const auto name = j.at("kind").get<std::string>();
    auto kind = node_kind_from_string(name);
    if (!kind)
        throw malformed("unknown certificate node kind '" + name + "'");
    node.kind = *kind;
    node.n = j.at("n").get<int>();
    node.e = j.at("e").get<int>();
    node.graph = graph_from(j.at("graph"));
    node.vertex_map = j.value("vertex_map", std::vector<Vertex>{});
    node.face = j.value("face", std::vector<Vertex>{});
    if (j.contains("cut_vertex"))
        node.cut_vertex = j.at("cut_vertex").get<Vertex>();
    if (j.contains("h")) {
        node.lemma_h = graph_from(j.at("h"));
        node.lemma_h_map = j.at("h").value("vertex_map", std::vector<Vertex>{});
    }
    for (const auto &c : j.value("children", json::array()))
        node.children.push_back(node_from(c, depth + 1));
    return node;
}

std::string vertex_list(const std::vector<Vertex> &vs)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? " " : "") << vs[i];
    return out.str();
}

} // namespace

std::string graph_to_json(const Graph &g) { return graph_json(g).dump() + "\n"; }

Graph read_graph(const std::string &text)
{
    const std::string t = trim(text);
    if (t.empty())
        throw malformed("empty graph input");
    if (t.front() == '{')
        return guarded([&] { return graph_from(parse(t)); });
    return from_graph6(t);
}

std::string to_graph6(const Graph &g)
{
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw InvalidArgument("graph6 writer supports at most 258047 vertices");
    }
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    int acc = 0, bits = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(const std::string &text)
{
    std::string s = trim(text);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0)
        s = s.substr(header.size());
    if (s.empty())
        throw malformed("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw malformed("graph6 byte out of range");
    std::size_t at = 0;
    long long n = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        at = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | (s[i] - 63);
        at = 4;
    } else {
        throw malformed("graph6 vertex counts above 258047 are not supported");
    }
    const long long pairs = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (s.size() - at != need)
        throw malformed("graph6 string has " + std::to_string(s.size() - at) + " data bytes, expected " +
                        std::to_string(need));
    std::vector<Edge> edges;
    long long bit = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++bit) {
            const int byte = s[at + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1)
                edges.push_back(Edge{u, v});
        }
    return make_graph_from_edges(static_cast<int>(n), std::move(edges));
}

std::string embedding_to_json(const OuterplaneEmbedding &emb)
{
    json j;
    j["blocks"] = json::array();
    for (const auto &b : emb.blocks) {
        json chords = json::array();
        for (auto [a, c] : b.chords)
            chords.push_back({a, c});
        j["blocks"].push_back({{"outer", b.outer}, {"chords", chords}});
    }
    j["bridges"] = edges_json(emb.bridges);
    j["isolated"] = emb.isolated;
    return j.dump() + "\n";
}

OuterplaneEmbedding embedding_from_json(const std::string &text)
{
    const json j = parse(text);
    return guarded([&] {
        OuterplaneEmbedding emb;
        std::vector<std::pair<int, int>> list;
        int top = -1;
        auto note = [&](int v) {
            if (v < 0)
                throw GraphError(GraphError::Kind::VertexOutOfRange, "negative vertex id");
            top = std::max(top, v);
        };
        for (const auto &jb : j.at("blocks")) {
            BlockEmbedding b;
            b.outer = jb.at("outer").get<std::vector<Vertex>>();
            for (Vertex v : b.outer)
                note(v);
            const int p = b.size();
            for (const auto &c : jb.value("chords", json::array())) {
                if (!c.is_array() || c.size() != 2)
                    throw malformed("chord must be a pair of positions");
                int a = c[0].get<int>(), d = c[1].get<int>();
                if (a > d)
                    std::swap(a, d);
                if (a < 0 || d >= p)
                    throw NotOuterplanarError("chord position outside its block");
                b.chords.emplace_back(a, d);
                list.emplace_back(b.outer[a], b.outer[d]);
            }
            std::sort(b.chords.begin(), b.chords.end());
            for (int i = 0; i < p && p >= 3; ++i)
                list.emplace_back(b.outer[i], b.outer[(i + 1) % p]);
            emb.blocks.push_back(std::move(b));
        }
        for (const auto &pair : j.value("bridges", json::array())) {
            if (!pair.is_array() || pair.size() != 2)
                throw malformed("bridge must be a pair of vertex ids");
            Edge e = Edge::of(pair[0].get<int>(), pair[1].get<int>());
            note(e.u);
            note(e.v);
            emb.bridges.push_back(e);
            list.emplace_back(e.u, e.v);
        }
        std::sort(emb.bridges.begin(), emb.bridges.end());
        emb.isolated = j.value("isolated", std::vector<Vertex>{});
        for (Vertex v : emb.isolated)
            note(v);
        std::sort(emb.isolated.begin(), emb.isolated.end());
        emb.graph = make_graph(top + 1, list);
        validate_embedding(emb);
        return emb;
    });
}

OuterplaneEmbedding read_embedding_or_graph(const std::string &text)
{
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') {
        const json j = parse(t);
        if (j.contains("blocks"))
            return embedding_from_json(t);
    }
    return recognize_outerplanar(read_graph(t));
}

std::string certificate_to_json(const Certificate &cert)
{
    json j;
    j["format"] = "outerturan-certificate";
    j["version"] = 1;
    j["k"] = cert.k;
    j["root"] = node_json(cert.root);
    return j.dump() + "\n";
}

Certificate certificate_from_json(const std::string &text)
{
    const json j = parse(text);
    return guarded([&] {
        if (j.value("format", std::string{}) != "outerturan-certificate")
            throw malformed("not a certificate document");
        if (j.value("version", 0) != 1)
            throw malformed("unsupported certificate version");
        Certificate cert;
        cert.k = j.at("k").get<int>();
        cert.root = node_from(j.at("root"), 0);
        return cert;
    });
}

std::string embedding_to_dot(const OuterplaneEmbedding &emb, const std::string &name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  // layout hint: each block's outer cycle in convex position\n";
    for (const auto &b : emb.blocks)
        out << "  // outer: " << vertex_list(b.outer) << "\n";
    out << "  // convex order: " << vertex_list(convex_order(emb)) << "\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < emb.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (auto e : emb.graph.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string weak_dual_to_dot(const OuterplaneEmbedding &emb)
{
    const auto dual = weak_dual(emb);
    std::ostringstream out;
    out << "graph weak_dual {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < dual.nodes.size(); ++i)
        out << "  f" << i << " [label=\"" << vertex_list(dual.nodes[i].vertices) << "\"];\n";
    for (auto [a, b] : dual.edges)
        out << "  f" << a << " -- f" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string incidence_to_dot(const OuterplaneEmbedding &emb)
{
    const auto faces = inner_faces(emb);
    const auto partition = classify_terminal(triangular_blocks(emb), emb);
    const auto inc = face_block_incidence(emb);
    std::ostringstream out;
    out << "graph face_block_incidence {\n";
    for (int f : inc.face_nodes)
        out << "  face" << f << " [shape=box,label=\"" << vertex_list(faces[f].vertices) << "\"];\n";
    for (int b : inc.block_nodes) {
        const auto &blk = partition.blocks[b];
        out << "  block" << b << " [shape=ellipse,label=\"" << vertex_list(blk.vertices)
            << (blk.kind == BlockKind::Trivial ? " (trivial)" : "") << "\""
            << (blk.terminal ? ",style=dashed" : "") << "];\n";
    }
    for (auto [f, b] : inc.edges)
        out << "  face" << inc.face_nodes[f] << " -- block" << inc.block_nodes[b] << ";\n";
    out << "}\n";
    return out.str();
}

ComparisonRow comparison_row(int k, int n, std::optional<int> oracle_value)
{
    ComparisonRow row;
    row.n = n;
    row.k = k;
    row.bound = upper_bound(k, n);
    row.sharp = sharp_residue(k, n);
    row.fang = fang_value_as_stated(k, n);
    row.oracle_value = oracle_value;
    if (row.sharp) {
        ChainParams params{k, static_cast<int>((n - (k - 1)) / bound_denominator(k))};
        row.construction_edges = params.expected_edges();
    }
    return row;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows)
{
    std::ostringstream out;
    out << "n,k,bound_num,bound_den,sharp_residue,fang_as_stated,oracle_value,construction_edges,fang_divergent\n";
    for (const auto &r : rows) {
        out << r.n << ',' << r.k << ',' << r.bound.numerator << ',' << r.bound.denominator << ','
            << (r.sharp ? "true" : "false") << ',' << r.fang.value << ',';
        if (r.oracle_value)
            out << *r.oracle_value;
        out << ',';
        if (r.construction_edges)
            out << *r.construction_edges;
        out << ',' << (r.fang_divergent() ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidArgument("cannot write " + path);
    out << content;
}

} // namespace outerturan::io
