#include "cli.hpp"

#include "outerturan/construct.hpp"
#include "outerturan/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace outerturan;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / "outerturan_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

bool has(const std::string &hay, const std::string &needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("construct")
{
    auto r = run({"construct", "-k", "5", "-m", "1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "n=18 e=30"));
    CHECK(has(r.out, "sharp=yes"));
    CHECK(has(run({"construct", "-k", "4", "-m", "2"}).out, "n=17 e=27"));
    CHECK(has(run({"construct", "-k", "3", "-m", "2"}).out, "n=6 e=7"));

    for (std::string fmt : {"json", "embedding", "dot", "graph6"}) {
        auto path = temp_path("c41." + fmt);
        CHECK(run({"construct", "-k", "4", "-m", "1", "-f", fmt, "-o", path}).code == 0);
        CHECK_FALSE(io::read_file(path).empty());
    }
    CHECK(io::read_graph(io::read_file(temp_path("c41.graph6"))).edge_count() == 15);
    CHECK(run({"construct", "-k", "2"}).code == 2);
    CHECK(run({"construct", "-k", "4", "-f", "xml", "-o", temp_path("x")}).code == 2);
    CHECK(run({"construct", "-k", "4", "-f", "xml"}).code == 2);
    auto g6 = run({"construct", "-k", "5", "-m", "1", "-f", "graph6", "-o", "-"});
    CHECK(g6.code == 0);
    CHECK(g6.out == outerturan::io::to_graph6(outerturan::build_chain(5, 1).graph) + "\n");
}

TEST_CASE("bound")
{
    auto r = run({"bound", "-k", "5", "-n", "18"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "bound=420/14 floor=30"));
    CHECK(has(r.out, "as stated: 26"));
    CHECK(has(run({"bound", "-k", "3", "-n", "2"}).out, "floor=1"));
    CHECK(has(run({"bound", "-k", "4", "-n", "10"}).out, "floor=15"));
    CHECK(run({"bound", "-k", "5", "-n", "18", "-e", "30"}).code == 0);
    CHECK(run({"bound", "-k", "5", "-n", "18", "-e", "31"}).code == 1);
    CHECK(run({"bound", "-k", "5", "-n", "1"}).code == 2);
}

TEST_CASE("oracle")
{
    auto csv = temp_path("k3.csv");
    auto r = run({"oracle", "-k", "3", "-n", "2..8", "--csv", csv});
    CHECK(r.code == 0);
    for (std::string row : {"3,2,1,", "3,3,2,", "3,4,4,", "3,5,5,", "3,6,7,", "3,7,8,", "3,8,10,"})
        CHECK(has(r.out, "\n" + row));
    CHECK(has(io::read_file(csv), "8,3,20,2,true,-2,10,10,true"));

    auto refused = run({"oracle", "-k", "5", "-n", "12"});
    CHECK(refused.code == 3);
    CHECK(has(refused.err, "Catalan(10)=16796"));
    CHECK(run({"oracle", "-k", "5", "-n", "9..4"}).code == 2);
    CHECK(run({"oracle", "-k", "5", "-n", "x"}).code == 2);
    CHECK(run({"oracle", "-k", "5", "-n", "6", "--jobs", "0"}).code == 2);

    auto dir = temp_path("witnesses");
    CHECK(run({"oracle", "-k", "4", "-n", "6", "--witness-dir", dir, "--jobs", "2"}).code == 0);
    auto w = io::read_graph(io::read_file(dir + "/witness_k4_n6.json"));
    CHECK(w.edge_count() == 7);
}

TEST_CASE("jobs default comes from the environment")
{
    setenv("OUTERTURAN_JOBS", "nope", 1);
    CHECK(run({"oracle", "-k", "4", "-n", "5"}).code == 2);
    setenv("OUTERTURAN_JOBS", "2", 1);
    CHECK(run({"oracle", "-k", "4", "-n", "5"}).code == 0);
    unsetenv("OUTERTURAN_JOBS");
}

TEST_CASE("certify, verify and analyze")
{
    auto graph = temp_path("c51.json");
    auto cert = temp_path("c51.cert.json");
    REQUIRE(run({"construct", "-k", "5", "-m", "1", "-o", graph}).code == 0);
    auto c = run({"certify", "-k", "5", "-i", graph, "-o", cert});
    CHECK(c.code == 0);
    CHECK(has(c.out, "root: big-face-split n=18 e=30"));
    CHECK(has(c.out, "root: 420 <= 420 (slack 0)"));
    CHECK(has(c.out, "verdict: true"));
    CHECK(run({"verify", "-i", cert}).code == 0);
    CHECK(run({"verify", "-k", "6", "-i", cert}).code == 1);

    // Shrink one leaf's declared edge count.
    auto text = io::read_file(cert);
    auto pos = text.find("\"e\":5");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"e\":4");
    auto bad = temp_path("bad.cert.json");
    io::write_file(bad, text);
    auto v = run({"verify", "-i", bad});
    CHECK(v.code == 1);
    CHECK(has(v.out, "failure: root/"));

    auto c5 = temp_path("c5.json");
    io::write_file(c5, "{\"n\":5,\"edges\":[[0,1],[1,2],[2,3],[3,4],[0,4]]}");
    auto refused = run({"certify", "-k", "5", "-i", c5});
    CHECK(refused.code == 2);
    CHECK(has(refused.err, "contains-C_k"));

    auto k4 = temp_path("k4.g6");
    io::write_file(k4, "C~\n");
    CHECK(run({"analyze", "-i", k4}).code == 2);
    CHECK(run({"certify", "-k", "5", "-i", temp_path("missing.json")}).code == 2);

    auto h = temp_path("h5.json");
    REQUIRE(run({"construct", "-k", "5", "--what", "H", "-o", h}).code == 0);
    auto a = run({"analyze", "-i", h, "--dual-dot", temp_path("dual.dot")});
    CHECK(a.code == 0);
    CHECK(has(a.out, "inner faces: 11"));
    CHECK(has(a.out, "triangular blocks: 6"));
    CHECK(has(a.out, "lemma face: size 6"));
    CHECK(has(a.out, "cycle lengths: 3 4 6 7 8 9 10 11 12 13 14 15 16"));

    auto c4 = temp_path("c4.json");
    io::write_file(c4, "{\"n\":4,\"edges\":[[0,1],[1,2],[2,3],[0,3]]}");
    auto a4 = run({"analyze", "-i", c4});
    CHECK(has(a4.out, "inner faces: 1 "));
    CHECK(has(a4.out, "triangular blocks: 4 (0 nontrivial, 4 trivial"));

    auto f5 = temp_path("f5.json");
    io::write_file(f5, "{\"n\":5,\"edges\":[[0,1],[1,2],[2,3],[3,4],[0,4],[0,2],[0,3]]}");
    CHECK(has(run({"analyze", "-i", f5}).out, "lemma face: none"));
}

TEST_CASE("identical invocations write identical files")
{
    auto a = temp_path("det_a.cert.json"), b = temp_path("det_b.cert.json");
    auto g = temp_path("det.json");
    REQUIRE(run({"oracle", "-k", "5", "-n", "8", "--witness-dir", temp_path("det")}).code == 0);
    g = temp_path("det") + "/witness_k5_n8.json";
    CHECK(run({"certify", "-k", "5", "-i", g, "-o", a, "-q"}).code == 0);
    CHECK(run({"certify", "-k", "5", "-i", g, "-o", b, "-q"}).code == 0);
    CHECK(io::read_file(a) == io::read_file(b));
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
