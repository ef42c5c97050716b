#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wdim/cli.hpp"
#include "wdim/constructions.hpp"
#include "wdim/io.hpp"

using namespace wdim;

namespace {

const std::string kDataDir = WDIM_TEST_DATA_DIR;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Scratch file removed on scope exit.
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("wdim_cli_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("dim subcommand") {
    const auto r = run({"dim", "--input", kDataDir + "/c4.dg"});
    CHECK(r.code == 0);
    CHECK(r.out == "dim=1 basis=[0]\n");
    CHECK(r.err.empty());

    const auto all = run({"dim", "--input", kDataDir + "/k3.dg", "--all"});
    CHECK(all.code == 0);
    CHECK(all.out ==
          "dim=2 basis=[0,1]\nbasis=[0,1]\nbasis=[0,2]\nbasis=[1,2]\n");
}

TEST_CASE("dim reads standard input") {
    std::istringstream fake("2 2\n0 1\n1 0\n");
    auto* old = std::cin.rdbuf(fake.rdbuf());
    const auto r = run({"dim", "--input", "-"});
    std::cin.rdbuf(old);
    CHECK(r.code == 0);
    CHECK(r.out == "dim=1 basis=[0]\n");
}

TEST_CASE("info subcommand") {
    const auto r = run({"info", "--input", kDataDir + "/c4.dg"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n=4 m=4\n"
          "strongly_connected=true\n"
          "diameter=3\n"
          "girth=4\n"
          "arc (0,1) type (1,3)\n"
          "arc (1,2) type (1,3)\n"
          "arc (2,3) type (1,3)\n"
          "arc (3,0) type (1,3)\n");

    TempFile one_way("one_way.dg", "2 1\n0 1\n");
    const auto partial = run({"info", "--input", one_way.path});
    CHECK(partial.code == 0);
    CHECK(partial.out == "n=2 m=1\nstrongly_connected=false\n");
}

TEST_CASE("construct subcommand") {
    const auto r = run({"construct", "--family", "gamma", "--n", "5", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kDataDir + "/gamma52.dg"));

    const std::string out_path = "wdim_cli_construct_out.dg";
    const auto to_file = run({"construct", "--family", "cycle", "--n", "6",
                              "--out", out_path});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(read_digraph_file(out_path).arcs() == directed_cycle(6).arcs());
    std::remove(out_path.c_str());

    const auto cay = run({"construct", "--family", "cayley", "--factors", "2", "3",
                          "--gen", "1,0", "--gen", "0,1"});
    CHECK(cay.code == 0);
    CHECK(parse_digraph(cay.out).arcs() ==
          cayley({2, 3}, {{1, 0}, {0, 1}}).arcs());

    CHECK(run({"construct", "--family", "chorded-c4", "--which", "1"}).out ==
          write_digraph(chorded_c4_family().member[1]));
    CHECK(run({"construct", "--family", "vt", "--which", "2", "--n", "3"}).out ==
          write_digraph(transitive_family(2, 3)));
    CHECK(run({"construct", "--family", "gamma-bar", "--k", "1", "--d", "2"}).out ==
          slurp(kDataDir + "/gamma52.dg"));

    CHECK(run({"construct", "--family", "nope", "--n", "3"}).code == 2);
    CHECK(run({"construct", "--family", "gamma", "--n", "5"}).code == 2);  // missing --d
    CHECK(run({"construct", "--family", "gamma", "--n", "2", "--d", "2"}).code == 2);
    CHECK(run({"construct"}).code == 2);  // --family is required
}

TEST_CASE("product subcommand") {
    TempFile k1a("k1a.dg", "1 0\n");
    TempFile k1b("k1b.dg", "1 0\n");
    const auto u = run({"product", "--op", "union", "--input", k1a.path,
                        "--input", k1b.path});
    CHECK(u.code == 0);
    CHECK(u.out == "2 0\n");

    TempFile n2a("n2a.dg", "2 0\n");
    TempFile n2b("n2b.dg", "2 0\n");
    const auto j = run({"product", "--op", "join", "--input", n2a.path,
                        "--input", n2b.path});
    CHECK(j.code == 0);
    CHECK(j.out == "4 8\n0 2\n0 3\n1 2\n1 3\n2 0\n2 1\n3 0\n3 1\n");

    TempFile seed("seed.dg", write_digraph(one_dim_order3(2)));
    TempFile k1c("k1c.dg", "1 0\n");
    TempFile p2("p2.dg", write_digraph(directed_path(2)));
    TempFile k1d("k1d.dg", "1 0\n");
    const auto lex = run({"product", "--op", "lex", "--input", seed.path,
                          "--input", k1c.path, "--input", p2.path, "--input", k1d.path});
    CHECK(lex.code == 0);
    CHECK(parse_digraph(lex.out).arc_count() == 10);

    CHECK(run({"product", "--op", "join", "--input", n2a.path}).code == 2);
    CHECK(run({"product", "--op", "meet", "--input", n2a.path, "--input",
               n2b.path}).code == 2);
}

TEST_CASE("enumerate subcommand") {
    const auto r = run({"enumerate", "--n", "3", "--classify", "--labeled"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n=3 classes=5\n"
          "labeled_strongly_connected=18\n"
          "dim=1 classes=4\n"
          "dim=2 classes=1\n");

    const auto reps = run({"enumerate", "--n", "2", "--reps"});
    CHECK(reps.code == 0);
    CHECK(reps.out == "n=2 classes=1\nn2-0x3\n");

    CHECK(run({"enumerate", "--n", "6"}).code == 2);  // needs --allow-slow
    CHECK(run({"enumerate"}).code == 2);              // --n is required
}

TEST_CASE("verify subcommand") {
    const auto text = run({"verify", "--theorem", "fig1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("theorem fig1\n") != std::string::npos);
    CHECK(text.out.find("verdict: verified") != std::string::npos);

    const auto json = run({"verify", "--theorem", "n2main", "--max-order", "4",
                           "--format", "json"});
    CHECK(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["theorem"] == "n2main");
    CHECK(j["verdict"] == "verified");
    CHECK(j["params"]["max_order"] == 4);
    CHECK(j["counterexamples"].is_array());
    CHECK(j["stats"]["instances"].is_number_integer());
    CHECK(j["wall_time_ms"].is_number_integer());

    const auto with_param = run({"verify", "--theorem", "nd", "--max-order", "4",
                                 "--param", "family_max_order=8"});
    CHECK(with_param.code == 0);
    CHECK(with_param.out.find("family_max_order=8") != std::string::npos);

    CHECK(run({"verify", "--theorem", "nope"}).code == 2);
    CHECK(run({"verify", "--theorem", "nd", "--param", "oops"}).code == 2);
    CHECK(run({"verify", "--theorem", "nd", "--format", "yaml"}).code == 2);
    CHECK(run({"verify", "--theorem", "nd", "--max-order", "99"}).code == 2);
}

TEST_CASE("verify over the whole catalog") {
    const auto all = run({"verify", "--max-order", "4", "--format", "json"});
    CHECK(all.code == 0);
    const auto arr = nlohmann::json::parse(all.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 17);
    for (const auto& rep : arr) CHECK(rep["verdict"] != "counterexample");
}

TEST_CASE("global options and usage errors") {
    const auto with_jobs = run({"--jobs", "2", "enumerate", "--n", "3"});
    CHECK(with_jobs.code == 0);
    CHECK(with_jobs.out == "n=3 classes=5\n");

    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("wdim") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);

    CHECK(run({}).code == 2);              // a subcommand is required
    CHECK(run({"frobnicate"}).code == 2);  // unknown subcommand
    CHECK(run({"dim", "--input", "wdim_cli_missing.dg"}).code == 2);
    TempFile bad("bad.dg", "2 1\n0 0\n");
    CHECK(run({"dim", "--input", bad.path}).code == 2);  // parse error surfaces as usage
}
