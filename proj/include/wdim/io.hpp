// Digraph file codec and verification-report serialization.
//
// Digraph text format: first significant line is "n m"; the next m
// significant lines are arcs "u v" with 0-based endpoints.  Lines starting
// with '#' are comments; blank lines are ignored.  Writing emits the header,
// the arcs sorted by (u, v), and a trailing newline, so parse(write(g))
// reproduces g with identical labeling.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wdim/digraph.hpp"
#include "wdim/verify.hpp"

namespace wdim {

// Malformed digraph text; the message names the offending line.
struct parse_error : std::runtime_error {
    explicit parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph read_digraph_file(const std::string& path);

std::string write_digraph(const Digraph& g);
void write_digraph_file(const std::string& path, const Digraph& g);

// JSON object {"theorem", "params", "verdict", "counterexamples", "stats",
// "wall_time_ms"} with sorted keys and 2-space indentation.
std::string report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

}  // namespace wdim
