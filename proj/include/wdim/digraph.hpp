// Simple directed graphs with bitset adjacency, plus the two-way distance
// matrix (forward and backward BFS distances between every ordered pair).
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wdim {

// Thrown when an operation needs finite distances but the digraph is not
// strongly connected.  No infinity sentinel ever leaves this module.
struct not_strongly_connected : std::runtime_error {
    explicit not_strongly_connected(const std::string& what) : std::runtime_error(what) {}
};

class Digraph;

// dist(x,y) for every ordered pair, computed by BFS from each source.
// diameter = max entry, girth = length of a shortest directed cycle.
class TwoWayDistanceMatrix {
  public:
    static TwoWayDistanceMatrix compute(const Digraph& g);  // throws not_strongly_connected

    int order() const { return n_; }
    int dist(int x, int y) const { return d_[static_cast<size_t>(x) * n_ + y]; }
    // the two-way distance: (dist(x,y), dist(y,x))
    std::pair<int, int> two_way(int x, int y) const { return {dist(x, y), dist(y, x)}; }
    int diameter() const { return diameter_; }
    int girth() const { return girth_; }  // 0 when the digraph has no arcs (order 1)

  private:
    int n_ = 0;
    int diameter_ = 0;
    int girth_ = 0;
    std::vector<uint16_t> d_;
};

// Immutable simple digraph: no loops, no parallel arcs.  Out-neighborhoods
// are stored as bitsets (words() 64-bit words per row).
class Digraph {
  public:
    Digraph() = default;
    Digraph(int n, std::span<const std::pair<int, int>> arcs);
    Digraph(int n, std::initializer_list<std::pair<int, int>> arcs)
        : Digraph(n, std::span<const std::pair<int, int>>(arcs.begin(), arcs.size())) {}

    int order() const { return n_; }
    int arc_count() const { return m_; }
    int words() const { return words_; }

    bool has_arc(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const uint64_t> out_row(int u) const {
        return {bits_.data() + static_cast<size_t>(u) * words_, static_cast<size_t>(words_)};
    }

    int out_degree(int u) const;
    int in_degree(int v) const;
    std::vector<int> out_neighbors(int u) const;  // ascending
    std::vector<int> in_neighbors(int v) const;   // ascending
    std::vector<std::pair<int, int>> arcs() const;  // sorted by (u, v)

    // Cached two-way distance matrix; computed on first use, shared across
    // copies, safe to call from parallel workers.  Throws if not strongly
    // connected.
    const TwoWayDistanceMatrix& distances() const;

  private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
    mutable std::shared_ptr<const TwoWayDistanceMatrix> dist_cache_;
};

Digraph build_digraph(int n, std::span<const std::pair<int, int>> arcs);
Digraph reverse(const Digraph& g);
bool is_strongly_connected(const Digraph& g);
const TwoWayDistanceMatrix& distance_matrix(const Digraph& g);

// Type of an existing arc (u,v): (1, dist(v,u)).  An undirected graph is a
// digraph in which every arc has type (1,1).
std::pair<int, int> arc_type(const Digraph& g, int u, int v);
bool is_undirected_graph(const Digraph& g);

// True iff g contains a simple directed cycle of exactly `length` vertices.
bool has_directed_cycle(const Digraph& g, int length);

}  // namespace wdim
