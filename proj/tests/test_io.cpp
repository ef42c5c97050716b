#include <doctest.h>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "wdim/constructions.hpp"
#include "wdim/io.hpp"

using namespace wdim;

namespace {

const std::string kDataDir = WDIM_TEST_DATA_DIR;

// Line number reported for a malformed input, -1 when it parses.
int error_line(const std::string& text) {
    try {
        parse_digraph(text);
    } catch (const parse_error& e) {
        return e.line;
    }
    return -1;
}

std::string error_message(const std::string& text) {
    try {
        parse_digraph(text);
    } catch (const parse_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse basics") {
    const Digraph g = parse_digraph("2 1\n0 1\n");
    CHECK(g.order() == 2);
    CHECK(g.arcs() == std::vector<std::pair<int, int>>{{0, 1}});
    // Flexible whitespace, comments, and blank lines.
    const Digraph h = parse_digraph("  3   3 \n# comment\n\n 0 1 \n1 2\n2 0\n");
    CHECK(h.arcs() == directed_cycle(3).arcs());
    CHECK(parse_digraph("1 0\n").order() == 1);
}

TEST_CASE("golden files parse to the pinned digraphs") {
    CHECK(read_digraph_file(kDataDir + "/c4.dg").arcs() == directed_cycle(4).arcs());
    CHECK(read_digraph_file(kDataDir + "/k3.dg").arcs() == complete_digraph(3).arcs());
    CHECK(read_digraph_file(kDataDir + "/gamma52.dg").arcs() == gamma(5, 2).arcs());
    CHECK(read_digraph_file(kDataDir + "/fan53.dg").arcs() == fan_digraph(5, 3).arcs());
    CHECK(read_digraph_file(kDataDir + "/commented.dg").arcs() ==
          chorded_c4_family().member[1].arcs());
}

TEST_CASE("write format is pinned") {
    CHECK(write_digraph(directed_cycle(3)) == "3 3\n0 1\n1 2\n2 0\n");
    CHECK(write_digraph(null_digraph(2)) == "2 0\n");
}

TEST_CASE("write/parse round trip") {
    for (const Digraph& g : {directed_cycle(4), complete_digraph(4), gamma(5, 2),
                             fan_digraph(6, 3), null_digraph(3)}) {
        const std::string text = write_digraph(g);
        const Digraph back = parse_digraph(text);
        CHECK(back.order() == g.order());
        CHECK(back.arcs() == g.arcs());
        CHECK(write_digraph(back) == text);
    }
}

TEST_CASE("file round trip") {
    const std::string path = "wdim_io_roundtrip.dg";
    write_digraph_file(path, gamma(5, 2));
    CHECK(read_digraph_file(path).arcs() == gamma(5, 2).arcs());
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_digraph_file("wdim_io_missing.dg"), std::runtime_error);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("2 1\n0 0\n") == 2);               // loop
    CHECK(error_message("2 1\n0 0\n") == "line 2: loop arc");
    CHECK(error_line("2 2\n0 1\n0 1\n") == 3);          // duplicate
    CHECK(error_line("2 1\n0 2\n") == 2);               // endpoint out of range
    CHECK(error_line("x 1\n0 1\n") == 1);               // malformed header
    CHECK(error_line("2 1\n0 1 9\n") == 2);             // trailing content on an arc
    CHECK(error_line("0 0\n") == 1);                    // vertex count out of range
    CHECK(error_line("2 3\n0 1\n1 0\n") == 1);          // arc count over n(n-1)
    CHECK(error_line("2 -1\n") == 1);                   // negative arc count
    CHECK(error_line("") == 1);                         // missing header
    CHECK(error_line("2 1\n0 1\nextra\n") == 3);        // content after the arc list
    CHECK(error_message("3 2\n0 1\n") == "line 3: expected 2 arcs, found 1");
    // Comment lines still advance the reported line number.
    CHECK(error_line("# note\n2 1\n0 0\n") == 3);
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.theorem = "demo";
    rep.params = {{"max_order", 4}};
    rep.verdict = "verified";
    rep.stats = {{"instances", 7}};
    rep.wall_time_ms = 3;

    CHECK(report_to_json(rep) ==
          "{\n"
          "  \"counterexamples\": [],\n"
          "  \"params\": {\n"
          "    \"max_order\": 4\n"
          "  },\n"
          "  \"stats\": {\n"
          "    \"instances\": 7\n"
          "  },\n"
          "  \"theorem\": \"demo\",\n"
          "  \"verdict\": \"verified\",\n"
          "  \"wall_time_ms\": 3\n"
          "}\n");
    CHECK(report_to_text(rep) ==
          "theorem demo\n"
          "  params: max_order=4\n"
          "  verdict: verified\n"
          "  stats: instances=7\n"
          "  wall_time_ms: 3\n");

    rep.verdict = "counterexample";
    rep.counterexamples.push_back({"n3-0x7", {{0, 1}, {1, 2}}, "bad"});
    const std::string text = report_to_text(rep);
    CHECK(text.find("  counterexample n3-0x7: bad\n    arcs: (0,1) (1,2)\n") !=
          std::string::npos);
    const std::string json = report_to_json(rep);
    CHECK(json.find("\"fingerprint\": \"n3-0x7\"") != std::string::npos);
    CHECK(json.find("\"violation\": \"bad\"") != std::string::npos);
}
