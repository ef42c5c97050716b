// Isomorphism machinery for small digraphs: exact canonical fingerprints,
// automorphism search, vertex transitivity, weak distance regularity and
// transitivity, and the embedding of a k-dimensional diameter-d digraph into
// gamma_bar(k, d).
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wdim/digraph.hpp"

namespace wdim {

using VertexPermutation = std::vector<int>;

// Canonical arc-set fingerprint: the minimum, over all vertex relabelings,
// of the arc bitmask in row-major pair order.  Equal fingerprints iff
// isomorphic.
struct Fingerprint {
    int order = 0;
    std::array<uint64_t, 2> bits{0, 0};  // bits[0] low word, bits[1] high word

    bool operator==(const Fingerprint&) const = default;
    bool operator<(const Fingerprint& o) const {
        return std::tie(order, bits[1], bits[0]) < std::tie(o.order, o.bits[1], o.bits[0]);
    }
    std::string to_string() const;
};

// Bit position of ordered pair (u,v), u != v, in row-major order.
inline int arc_bit_index(int n, int u, int v) { return u * (n - 1) + (v < u ? v : v - 1); }

uint64_t arc_mask_of(const Digraph& g);          // order <= 8
Digraph digraph_from_arc_mask(int n, uint64_t mask);
uint64_t canonical_arc_mask(int n, uint64_t mask);  // order <= 8

Fingerprint canonical_form(const Digraph& g, int cap = 10);

std::optional<VertexPermutation> is_isomorphic(const Digraph& g, const Digraph& h, int cap = 10);
std::vector<VertexPermutation> automorphisms(const Digraph& g, int cap = 10);
bool is_vertex_transitive(const Digraph& g, int cap = 10);

// Partition of V by the two-way distance from one fixed vertex.
struct VertexProfile {
    int vertex = 0;
    bool all_singleton = false;  // every class has at most one element
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> classes;  // sorted by key
};
std::vector<VertexProfile> single_vertex_profiles(const Digraph& g);

struct WdrViolation {
    std::pair<int, int> h, i, j;
    std::pair<int, int> first_pair, second_pair;  // witnesses with different counts
    long long first_count = 0, second_count = 0;
};
struct WdrResult {
    bool regular = false;
    bool thin = false;  // regular with every distance class a singleton
    // intersection numbers keyed by (h, i, j) flattened to six ints
    std::map<std::array<int, 6>, long long> numbers;
    std::optional<WdrViolation> violation;
};
WdrResult is_weakly_distance_regular(const Digraph& g);

// Some automorphism carries any pair onto any other pair at the same
// two-way distance.
bool is_weakly_distance_transitive(const Digraph& g, int cap = 10);

struct EmbedResult {
    bool ok = false;
    int k = 0, d = 0;
    std::vector<int> image;  // vertex i of g maps to image[i] in gamma_bar(k, d)
    std::pair<int, int> failed_arc{-1, -1};  // first arc whose image is missing
};
// Maps the i-th basis vertex to hub i and every other vertex to the tuple of
// its two-way distances to the basis; checks injectivity and that every arc
// of g maps onto an arc of gamma_bar(k, d).
EmbedResult embed_into_gamma_bar(const Digraph& g, const std::vector<int>& basis,
                                 int size_cap = 5000);

}  // namespace wdim
