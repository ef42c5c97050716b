#include "wdim/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wdim {

namespace {

// Significant lines only: skips blanks and '#' comments, reports the line
// number of what it returns.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out, int& line_no) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            out = line;
            line_no = line_;
            return true;
        }
        return false;
    }

    int current_line() const { return line_; }

  private:
    std::istream& in_;
    int line_ = 0;
};

void parse_two_ints(const std::string& text, int line, const char* what, long long& a,
                    long long& b) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> a >> b)) throw parse_error(line, std::string("malformed ") + what);
    if (ss >> extra) throw parse_error(line, std::string("trailing content after ") + what);
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    LineReader reader(in);
    std::string text;
    int line = 0;
    if (!reader.next(text, line)) throw parse_error(reader.current_line() + 1, "missing header");
    long long n = 0, m = 0;
    parse_two_ints(text, line, "header, expected \"n m\"", n, m);
    if (n < 1 || n > 100000) throw parse_error(line, "vertex count out of range");
    if (m < 0 || m > n * (n - 1)) throw parse_error(line, "arc count out of range");

    std::vector<std::pair<int, int>> arcs;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(text, line))
            throw parse_error(reader.current_line() + 1,
                              "expected " + std::to_string(m) + " arcs, found " +
                                  std::to_string(i));
        long long u = 0, v = 0;
        parse_two_ints(text, line, "arc, expected \"u v\"", u, v);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(line, "vertex index out of range");
        if (u == v) throw parse_error(line, "loop arc");
        if (!seen.emplace(u, v).second) throw parse_error(line, "duplicate arc");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (reader.next(text, line)) throw parse_error(line, "unexpected content after the arc list");
    return Digraph(static_cast<int>(n), arcs);
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_digraph(in);
}

std::string write_digraph(const Digraph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
    for (auto [u, v] : g.arcs())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

void write_digraph_file(const std::string& path, const Digraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_digraph(g);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["theorem"] = rep.theorem;
    j["params"] = rep.params;
    j["verdict"] = rep.verdict;
    auto& list = j["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : rep.counterexamples) {
        nlohmann::json item;
        item["fingerprint"] = ce.fingerprint;
        auto& arcs = item["arcs"] = nlohmann::json::array();
        for (auto [u, v] : ce.arcs) arcs.push_back({u, v});
        item["violation"] = ce.violation;
        list.push_back(std::move(item));
    }
    j["stats"] = rep.stats;
    j["wall_time_ms"] = rep.wall_time_ms;
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& rep) {
    std::string out = "theorem " + rep.theorem + "\n";
    out += "  params:";
    for (const auto& [key, value] : rep.params) out += " " + key + "=" + std::to_string(value);
    if (rep.params.empty()) out += " (none)";
    out += "\n  verdict: " + rep.verdict + "\n  stats:";
    for (const auto& [key, value] : rep.stats) out += " " + key + "=" + std::to_string(value);
    out += "\n  wall_time_ms: " + std::to_string(rep.wall_time_ms) + "\n";
    for (const auto& ce : rep.counterexamples) {
        out += "  counterexample " + ce.fingerprint + ": " + ce.violation + "\n    arcs:";
        for (auto [u, v] : ce.arcs)
            out += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
        out += "\n";
    }
    return out;
}

}  // namespace wdim
