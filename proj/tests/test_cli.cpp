#include <doctest.h>

#include "gcx/cli.hpp"
#include "gcx/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gcx;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int s = run_cli(args, out, err);
    return {s, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body)
{
    auto p = std::filesystem::temp_directory_path() / ("gcx_cli_test_" + name);
    std::ofstream(p) << body;
    return p.string();
}

const std::string doubled_triangle = R"({"n":3,"edges":[[1,2],[1,2],[1,3],[2,3]]})";

} // namespace

TEST_CASE("enumerate")
{
    auto r = run({"enumerate", "--vertices", "2", "--edges", "2"});
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out).size() == 3);
    auto c = run({"enumerate", "--vertices", "3", "--edges", "3", "--connected"});
    for (const auto& j : Json::parse(c.out))
        CHECK(is_topologically_connected(graph_from_json(j)));
    auto l = run({"enumerate", "--vertices", "3", "--edges", "2", "--lie"});
    CHECK(l.status == 0);
}

TEST_CASE("usage errors exit 2 and name the flag")
{
    auto r = run({"enumerate", "--vertices", "x", "--edges", "2"});
    CHECK(r.status == 2);
    CHECK(r.err.find("--vertices") != std::string::npos);
    CHECK(run({"enumerate", "--vertices", "-1", "--edges", "2"}).status == 2);
    CHECK(run({"enumerate", "--edges", "2"}).status == 2);
    CHECK(run({"verify", "--suite", "nope"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"diff"}).status == 2);
    CHECK(run({"diff", "--input", "/nonexistent/file.json"}).status == 2);
    CHECK(run({"diff", "--input", temp_file("bad.json", "{not json")}).status == 2);
}

TEST_CASE("diff of the doubled triangle is zero")
{
    auto r = run({"diff", "--input", temp_file("g.json", doubled_triangle)});
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out) == Json::array());
}

TEST_CASE("diff of an edge and of words")
{
    auto r = run({"diff", "--input", temp_file("e.json", R"({"n":2,"edges":[[1,2]]})")});
    CHECK(Json::parse(r.out) == Json::parse(R"([{"coeff":"1/1","graph":{"n":1,"edges":[]}}])"));

    auto w = run({"diff", "--input", temp_file("w.json", R"(["p1 p2 p3","q1 q2 p4","q3 q4"])")});
    CHECK(w.status == 0);
    CHECK(Json::parse(w.out).size() == 4);
}

TEST_CASE("a loop makes the graph zero")
{
    auto r = run({"diff", "--input", temp_file("loop.json", R"({"n":2,"edges":[[1,1]]})")});
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out) == Json::array());
}

TEST_CASE("math errors exit 1")
{
    auto r = run({"diff", "--input", temp_file("bv.json", R"({"n":2,"edges":[[1,3]]})")});
    CHECK(r.status == 1);
    CHECK(r.err.find("BadVertex") != std::string::npos);
}

TEST_CASE("coproduct and product")
{
    auto hh = temp_file("hh.json", R"({"n":4,"edges":[[1,2],[1,2],[3,4],[3,4]]})");
    auto r = run({"coproduct", "--input", hh});
    CHECK(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j.size() == 2);
    for (const auto& t : j)
        CHECK(t["coeff"] == "1/1");

    auto p = run({"product", "--input", temp_file("pp.json", R"([{"n":2,"edges":[[1,2]]},{"n":1,"edges":[]}])")});
    CHECK(Json::parse(p.out) == Json::parse(R"([{"coeff":"1/1","graph":{"n":3,"edges":[[1,2]]}}])"));
}

TEST_CASE("convert along the chain")
{
    auto g = temp_file("g2.json", doubled_triangle);
    auto w = run({"convert", "--from", "graph", "--to", "word", "--input", g});
    CHECK(w.status == 0);
    auto back = run({"convert", "--from", "word", "--to", "graph", "--input", temp_file("w2.json", w.out)});
    CHECK(Json::parse(back.out) == Json::parse(R"([{"coeff":"1/1","graph":)" + doubled_triangle + "}]"));

    // y86 = -y68, so the literal monomial maps to minus the graph
    auto m = temp_file("m.json", R"({"shape":[3,3,2],"pairs":[[1,4],[2,7],[3,5],[8,6]]})");
    auto mg = run({"convert", "--from", "monomial", "--to", "graph", "--input", m});
    CHECK(Json::parse(mg.out) == Json::parse(R"([{"coeff":"-1/1","graph":)" + doubled_triangle + "}]"));

    auto same = run({"convert", "--from", "graph", "--to", "graph", "--input", g});
    CHECK(same.status == 2);
    CHECK(same.err.find("NoSuchRoute") != std::string::npos);
    CHECK(run({"convert", "--from", "graph", "--to", "tree", "--input", g}).status == 2);
}

TEST_CASE("word -> graph -> word -> graph is stable")
{
    auto w0 = temp_file("w0.json", R"(["p1 p2 p3","q2 p4","q1 q3 q4"])");
    auto g1 = run({"convert", "--from", "word", "--to", "graph", "--input", w0});
    auto w1 = run({"convert", "--from", "graph", "--to", "word", "--input", temp_file("g1.json", g1.out)});
    auto g2 = run({"convert", "--from", "word", "--to", "graph", "--input", temp_file("w1.json", w1.out)});
    CHECK(g1.status == 0);
    CHECK(Json::parse(g1.out) == Json::parse(g2.out));
}

TEST_CASE("homology of polygons")
{
    auto r = run({"homology", "--polygons", "--max-n", "6"});
    CHECK(r.status == 0);
    CHECK(r.out.find("degree 4: basis 3, homology 0 (reliable)") != std::string::npos);
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        if (line.find("(reliable)") != std::string::npos)
            CHECK(line.find("homology 0 ") != std::string::npos);
}

TEST_CASE("verify reports and output files")
{
    auto r = run({"verify", "--suite", "d2", "--vertices", "4", "--edges", "5", "--max-n", "3", "--degree", "10", "--seed", "9"});
    CHECK(r.status == 0);
    CHECK(r.out.find("suite word-d2 seed 9") != std::string::npos);
    CHECK(r.out.find("d2: all ") != std::string::npos);
    CHECK(r.out.find(" graphs pass") != std::string::npos);

    auto again = run({"verify", "--suite", "d2", "--vertices", "4", "--edges", "5", "--max-n", "3", "--degree", "10", "--seed", "9"});
    CHECK(again.out == r.out);

    auto path = (std::filesystem::temp_directory_path() / "gcx_cli_test_series.txt").string();
    auto s = run({"verify", "--suite", "series", "--degree", "5", "--output", path});
    CHECK(s.status == 0);
    CHECK(s.out.empty());
    std::ifstream f(path);
    std::stringstream body;
    body << f.rdbuf();
    CHECK(body.str().find("series: all 2 cases pass") != std::string::npos);
}

TEST_CASE("verify exits 1 on a failing suite")
{
    // the excess-2 graphs with five vertices have no contraction
    auto r = run({"verify", "--suite", "homotopy", "--vertices", "5", "--edges", "7"});
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}
