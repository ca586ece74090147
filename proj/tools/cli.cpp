#include "cli.hpp"

#include "outerturan/certifier.hpp"
#include "outerturan/construct.hpp"
#include "outerturan/dual.hpp"
#include "outerturan/errors.hpp"
#include "outerturan/io.hpp"
#include "outerturan/oracle.hpp"
#include "outerturan/turan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

namespace outerturan::cli {

namespace {

const char *kJobsEnv = "OUTERTURAN_JOBS";

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string &text)
{
    Range r;
    try {
        auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots), &used);
            if (used != dots)
                throw std::invalid_argument(text);
            const std::string tail = text.substr(dots + 2);
            r.hi = std::stoi(tail, &used);
            if (used != tail.size())
                throw std::invalid_argument(text);
        }
    } catch (const std::logic_error &) {
        throw InvalidArgument("bad range '" + text + "', expected N or A..B");
    }
    if (r.lo > r.hi)
        throw InvalidArgument("empty range '" + text + "'");
    return r;
}

int default_jobs()
{
    const char *env = std::getenv(kJobsEnv);
    if (!env || !*env)
        return 1;
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024)
        throw InvalidArgument(std::string(kJobsEnv) + " must be a positive integer, got '" + env + "'");
    return static_cast<int>(v);
}

void require_k(int k)
{
    if (k < 3)
        throw InvalidArgument("k must be at least 3");
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

std::string render(const OuterplaneEmbedding &emb, const std::string &format)
{
    if (format == "json")
        return io::graph_to_json(emb.graph);
    if (format == "embedding")
        return io::embedding_to_json(emb);
    if (format == "dot")
        return io::embedding_to_dot(emb);
    if (format == "graph6")
        return io::to_graph6(emb.graph) + "\n";
    throw InvalidArgument("unknown format '" + format + "'");
}

/// Both cycle oracles plus recognition.
bool witness_valid(const Graph &g, int k, int value)
{
    if (g.edge_count() != value)
        return false;
    try {
        auto emb = recognize_outerplanar(g);
        if (find_cycle_via_faces(emb, k))
            return false;
    } catch (const NotOuterplanarError &) {
        return false;
    }
    return !has_cycle_of_length(g, k);
}

struct Options {
    int k = 0;
    int m = 0;
    std::string what = "chain";
    std::string format = "json";
    std::string out_path;
    std::string in_path;
    std::string n_text;
    int bound_n = 0;
    std::optional<long long> edges;
    int jobs = 1;
    int cap = 11;
    std::string symmetry = "auto";
    std::string csv_path;
    std::string witness_dir;
    bool progress = false;
    std::string audit_path;
    bool quiet = false;
    std::string dot_path, dual_path, incidence_path;
};

int cmd_construct(const Options &o, std::ostream &out)
{
    require_k(o.k);
    OuterplaneEmbedding emb;
    if (o.what == "chain") {
        if (o.m < 0)
            throw InvalidArgument("m must be non-negative");
        emb = build_chain(o.k, o.m);
    } else if (o.what == "G0") {
        emb = build_G0(o.k);
    } else if (o.what == "H") {
        emb = build_H(o.k).embedding;
    } else {
        throw InvalidArgument("unknown construction '" + o.what + "'");
    }
    const int n = emb.vertex_count(), e = emb.edge_count();
    const auto check = bound_holds(e, o.k, n);
    const std::string text = render(emb, o.format);
    if (o.out_path == "-") { // the rendering alone, for piping
        out << text;
        return check.holds ? Ok : Failed;
    }
    out << "construction=" << o.what << " k=" << o.k;
    if (o.what == "chain")
        out << " m=" << o.m;
    out << " n=" << n << " e=" << e << " bound=" << upper_bound(o.k, n).to_string()
        << " sharp=" << yes_no(check.equality) << "\n";
    if (!o.out_path.empty()) {
        io::write_file(o.out_path, text);
        out << "wrote " << o.out_path << "\n";
    }
    return check.holds ? Ok : Failed;
}

int cmd_bound(const Options &o, std::ostream &out)
{
    const auto b = upper_bound(o.k, o.bound_n);
    const auto fang = fang_value_as_stated(o.k, o.bound_n);
    out << "k=" << o.k << " n=" << o.bound_n << " bound=" << b.to_string() << " floor=" << b.floor()
        << " integer=" << yes_no(b.is_integer()) << " sharp_residue=" << yes_no(sharp_residue(o.k, o.bound_n))
        << "\n";
    out << "transcribed closed formula, as stated: " << fang.value << " (branch " << to_string(fang.branch);
    if (fang.branch != FangBranch::SmallN)
        out << ", lambda=" << fang.lambda;
    out << ")\n";
    if (o.edges) {
        const auto check = bound_holds(*o.edges, o.k, o.bound_n);
        out << "e=" << *o.edges << " check: " << check.lhs << " <= " << check.rhs << " "
            << (check.holds ? (check.equality ? "holds with equality" : "holds") : "VIOLATED") << "\n";
        return check.holds ? Ok : Failed;
    }
    return Ok;
}

int cmd_oracle(const Options &o, std::ostream &out, std::ostream &err)
{
    require_k(o.k);
    const Range range = parse_range(o.n_text);
    if (range.lo < 2)
        throw InvalidArgument("n must be at least 2");
    if (o.jobs < 1)
        throw InvalidArgument("jobs must be at least 1");
    OracleOptions opts;
    opts.cap = o.cap;
    opts.jobs = o.jobs;
    static const std::map<std::string, SymmetryMode> modes{
        {"off", SymmetryMode::Off}, {"on", SymmetryMode::On}, {"auto", SymmetryMode::Auto}};
    auto mode = modes.find(o.symmetry);
    if (mode == modes.end())
        throw InvalidArgument("symmetry must be off, on or auto");
    opts.symmetry = mode->second;
    if (range.hi > opts.cap) {
        // Refuse before any work; exact_ex words the cost estimate.
        exact_ex(range.hi, o.k, opts);
    }
    if (o.progress)
        opts.progress = [&err](std::uint64_t done, std::uint64_t total) {
            if (done == total || done % 256 == 0)
                err << "  " << done << "/" << total << " triangulations\n";
        };
    if (!o.witness_dir.empty())
        std::filesystem::create_directories(o.witness_dir);

    std::vector<io::ComparisonRow> rows;
    bool all_ok = true;
    out << "k,n,value,bound,sharp_residue,equality,triangulations,witness\n";
    for (int n = range.lo; n <= range.hi; ++n) {
        if (o.progress)
            err << "n=" << n << "\n";
        const auto r = exact_ex(n, o.k, opts);
        const auto check = bound_holds(r.value, o.k, n);
        const bool valid = witness_valid(r.witness, o.k, r.value);
        all_ok = all_ok && valid && check.holds;
        out << o.k << ',' << n << ',' << r.value << ',' << upper_bound(o.k, n).to_string() << ','
            << yes_no(sharp_residue(o.k, n)) << ',' << yes_no(check.equality) << ',' << r.triangulations_scanned
            << ',' << (valid ? "valid" : "INVALID") << "\n";
        if (!o.witness_dir.empty()) {
            auto path = std::filesystem::path(o.witness_dir) /
                        ("witness_k" + std::to_string(o.k) + "_n" + std::to_string(n) + ".json");
            io::write_file(path.string(), io::graph_to_json(r.witness));
        }
        rows.push_back(io::comparison_row(o.k, n, r.value));
    }
    if (!o.csv_path.empty()) {
        io::write_file(o.csv_path, io::comparison_csv(rows));
        out << "wrote " << o.csv_path << "\n";
    }
    return all_ok ? Ok : Failed;
}

int cmd_certify(const Options &o, std::ostream &out)
{
    require_k(o.k);
    const auto emb = io::read_embedding_or_graph(io::read_file(o.in_path));
    const auto cert = build_certificate(emb, o.k);
    if (!o.out_path.empty())
        io::write_file(o.out_path, io::certificate_to_json(cert));
    const auto report = verify_certificate(cert, o.k);
    const std::string text = report.to_text();
    if (!o.audit_path.empty())
        io::write_file(o.audit_path, text);
    out << "root: " << to_string(cert.root.kind) << " n=" << cert.root.n << " e=" << cert.root.e << "\n";
    if (!o.quiet)
        out << text;
    else
        out << "verdict: " << (report.verdict ? "true" : "false") << " slack " << report.root_slack << "\n";
    return report.verdict ? Ok : Failed;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const auto cert = io::certificate_from_json(io::read_file(o.in_path));
    const int k = o.k ? o.k : cert.k;
    const auto report = verify_certificate(cert, k);
    out << (o.quiet ? std::string("verdict: ") + (report.verdict ? "true" : "false") + "\n" : report.to_text());
    return report.verdict ? Ok : Failed;
}

int cmd_analyze(const Options &o, std::ostream &out)
{
    const auto emb = io::read_embedding_or_graph(io::read_file(o.in_path));
    const Graph &g = emb.graph;
    out << "n=" << g.vertex_count() << " e=" << g.edge_count() << "\n";
    out << "outerplanar: yes\n";
    out << "2-connected: " << yes_no(is_two_connected(g)) << "\n";
    out << "biconnected blocks: " << emb.blocks.size() << ", bridges: " << emb.bridges.size()
        << ", isolated: " << emb.isolated.size() << "\n";
    if (g.vertex_count() >= 2)
        out << "edge-maximal: " << yes_no(is_edge_maximal(emb)) << "\n";
    const auto faces = inner_faces(emb);
    std::map<int, int> sizes;
    for (const auto &f : faces)
        ++sizes[f.size()];
    out << "inner faces: " << faces.size();
    for (auto [s, c] : sizes)
        out << " [" << c << "x" << s << "]";
    out << "\n";
    for (std::size_t i = 0; i < faces.size(); ++i) {
        out << "  face " << i << ":";
        for (Vertex v : faces[i].vertices)
            out << ' ' << v;
        out << "\n";
    }
    const auto dual = weak_dual(emb);
    out << "weak dual: " << dual.nodes.size() << " nodes, " << dual.edges.size() << " edges\n";
    const auto partition = classify_terminal(triangular_blocks(emb), emb);
    int trivial = 0, terminal = 0;
    for (const auto &b : partition.blocks) {
        trivial += b.kind == BlockKind::Trivial;
        terminal += b.terminal;
    }
    out << "triangular blocks: " << partition.blocks.size() << " (" << partition.blocks.size() - trivial
        << " nontrivial, " << trivial << " trivial, " << terminal << " terminal)\n";
    for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
        const auto &b = partition.blocks[i];
        out << "  block " << i << ": " << (b.kind == BlockKind::Trivial ? "trivial" : "nontrivial")
            << (b.terminal ? ", terminal" : "") << ", vertices";
        for (Vertex v : b.vertices)
            out << ' ' << v;
        out << "\n";
    }
    if (auto lemma = find_lemma_face(emb)) {
        out << "lemma face: size " << lemma->face.size() << ", vertices";
        for (Vertex v : lemma->face.vertices)
            out << ' ' << v;
        out << ", terminal blocks " << lemma->terminal_blocks.size() << "\n";
    } else {
        out << "lemma face: none\n";
    }
    out << "cycle lengths:";
    for (int c : cycle_length_set(emb))
        out << ' ' << c;
    out << "\n";
    if (!o.dot_path.empty())
        io::write_file(o.dot_path, io::embedding_to_dot(emb));
    if (!o.dual_path.empty())
        io::write_file(o.dual_path, io::weak_dual_to_dot(emb));
    if (!o.incidence_path.empty())
        io::write_file(o.incidence_path, io::incidence_to_dot(emb));
    return Ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Outerplanar Turan numbers of cycles: constructions, bounds, exact search, certificates"};
    app.name("outerturan");
    app.require_subcommand(1);
    Options o;

    auto *construct = app.add_subcommand("construct", "Build the extremal chain (or one of its pieces)");
    construct->add_option("-k", o.k, "Cycle length")->required();
    construct->add_option("-m", o.m, "Number of H merges")->default_val(0);
    construct->add_option("--what", o.what, "chain, G0 or H")->default_val("chain");
    construct->add_option("-f,--format", o.format, "json, embedding, dot or graph6")->default_val("json");
    construct->add_option("-o,--out", o.out_path, "Output file ('-' for stdout)");

    auto *bound = app.add_subcommand("bound", "Exact upper bound and sharpness residue");
    bound->add_option("-k", o.k, "Cycle length")->required();
    bound->add_option("-n", o.bound_n, "Vertex count")->required();
    bound->add_option("-e,--edges", o.edges, "Check this edge count against the bound");

    auto *oracle = app.add_subcommand("oracle", "Exhaustive ex_OP(n, C_k) over all triangulations");
    oracle->add_option("-k", o.k, "Cycle length")->required();
    oracle->add_option("-n", o.n_text, "Vertex count N or range A..B")->required();
    oracle->add_option("-j,--jobs", o.jobs, std::string("Worker threads (default from ") + kJobsEnv + " or 1)");
    oracle->add_option("--cap", o.cap, "Largest n the sweep accepts")->default_val(11);
    oracle->add_option("--symmetry", o.symmetry, "off, on or auto (on for n >= 10)")->default_val("auto");
    oracle->add_option("--csv", o.csv_path, "Write the bound/formula/oracle comparison table");
    oracle->add_option("--witness-dir", o.witness_dir, "Write each witness as Graph JSON");
    oracle->add_flag("--progress", o.progress, "Report progress on stderr");

    auto *certify = app.add_subcommand("certify", "Build and audit a proof certificate");
    certify->add_option("-k", o.k, "Cycle length")->required();
    certify->add_option("-i,--in", o.in_path, "Graph JSON, graph6 or Embedding JSON")->required();
    certify->add_option("-o,--out", o.out_path, "Certificate JSON output");
    certify->add_option("--audit", o.audit_path, "Write the audit listing");
    certify->add_flag("-q,--quiet", o.quiet, "Only print the verdict");

    auto *verify = app.add_subcommand("verify", "Audit an existing certificate");
    verify->add_option("-k", o.k, "Cycle length (default: the certificate's)");
    verify->add_option("-i,--in", o.in_path, "Certificate JSON")->required();
    verify->add_flag("-q,--quiet", o.quiet, "Only print the verdict");

    auto *analyze = app.add_subcommand("analyze", "Faces, weak dual, triangular blocks, lemma face, cycles");
    analyze->add_option("-i,--in", o.in_path, "Graph JSON, graph6 or Embedding JSON")->required();
    analyze->add_option("--dot", o.dot_path, "Write the graph as DOT");
    analyze->add_option("--dual-dot", o.dual_path, "Write the weak dual as DOT");
    analyze->add_option("--incidence-dot", o.incidence_path, "Write the face/block incidence forest as DOT");

    try {
        o.jobs = default_jobs();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return BadInput;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    }

    try {
        if (construct->parsed())
            return cmd_construct(o, out);
        if (bound->parsed())
            return cmd_bound(o, out);
        if (oracle->parsed())
            return cmd_oracle(o, out, err);
        if (certify->parsed())
            return cmd_certify(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (analyze->parsed())
            return cmd_analyze(o, out);
    } catch (const ResourceRefusal &e) {
        err << "refused: " << e.what() << "\n";
        return Refused;
    } catch (const ContainsCycleError &e) {
        err << "error: contains-C_k: " << e.what() << "\n";
        return BadInput;
    } catch (const NotOuterplanarError &e) {
        err << "error: not-outerplanar: " << e.what() << "\n";
        return BadInput;
    } catch (const GraphError &e) {
        err << "error: invalid-graph: " << e.what() << "\n";
        return BadInput;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return Failed;
    }
    return BadInput;
}

} // namespace outerturan::cli
