// Weak metric dimension: smallest set S such that the two-way distance
// vectors to S separate every pair of vertices outside S.
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wdim/digraph.hpp"

namespace wdim {

struct ResolvingCertificate {
    std::vector<int> set;   // the checked set, ascending
    std::vector<int> rest;  // vertices outside the set, ascending
    // signatures[i][j] = two_way(set[j], rest[i]); pairwise distinct rows
    std::vector<std::vector<std::pair<int, int>>> signatures;
};

struct ResolvingCheck {
    bool resolving = false;
    ResolvingCertificate certificate;   // filled when resolving
    std::pair<int, int> collision{-1, -1};  // first colliding pair otherwise
};

struct DimensionResult {
    int dim = 0;
    std::vector<int> basis;  // lexicographically least minimum set, ascending
    std::optional<std::vector<std::vector<int>>> all_bases;
};

// z separates u and v when two_way(z,u) != two_way(z,v).  Requires u != v.
bool resolves(const TwoWayDistanceMatrix& m, int z, int u, int v);

ResolvingCheck check_weakly_resolving(const TwoWayDistanceMatrix& m, std::span<const int> set);

// Exact solver: cardinality-ascending, lexicographic within a cardinality.
// Subsets missing a forced pair are skipped and the search starts at the
// minimum-vertex-cover bound of the forced-pair graph.
DimensionResult weak_metric_dimension(const Digraph& g, bool collect_all = false);

// Pairs {u,v} separated by no third vertex; every weakly resolving set must
// contain one endpoint of each (orders >= 3; empty for order 2).
std::vector<std::pair<int, int>> forced_pairs(const TwoWayDistanceMatrix& m);

// Least k >= 1 with k + d^(2k) >= n: the dimension floor for order n and
// diameter d, since k set vertices admit at most d^(2k) + k distinct
// signature profiles.
int dim_lower_bound(int n, int d);

// d^e with saturation at LLONG_MAX.
long long sat_pow(long long base, int exp);

struct DimBoundsReport {
    int n = 0, diameter = 0, dim = 0;
    long long dim_lower = 0, dim_upper = 0;   // f(n,d) <= dim <= n - d
    bool dim_ok = false;
    long long order_lower = 0, order_upper = 0;  // k + d <= n <= d^(2k) + k
    bool order_ok = false;
    bool ok = false;
};
DimBoundsReport check_dim_bounds(const Digraph& g);

struct ArcBoundsReport {
    int n = 0, diameter = 0, dim = 0;
    long long arcs = 0, lower = 0, upper = 0;
    bool ok = false;
    bool lower_equality = false, upper_equality = false;
};
ArcBoundsReport check_arc_bounds(const Digraph& g);

// k + d and the closed-form arc ceiling
// ((d^2+3d-2)/2)^(2k) + (2k-d) d^(2k-1) + k^2 - k for a k-dimensional
// digraph of diameter d.
long long arc_lower_bound(int k, int d);
long long arc_upper_bound(int k, int d);

struct ArcTypeEntry {
    std::pair<int, int> arc;
    int r = 0;      // arc type is (1, r)
    bool ok = false;  // dim <= n - r
};
struct TypeBoundReport {
    int n = 0, dim = 0;
    bool ok = false;                 // every arc satisfies dim <= n - r
    bool codim2 = false;             // dim == n - 2
    bool codim2_types_ok = false;    // when codim2: every r <= 2
    std::vector<ArcTypeEntry> entries;
};
TypeBoundReport check_type_bound(const Digraph& g);

}  // namespace wdim
