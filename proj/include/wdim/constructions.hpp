// Named digraph families: the tuple-coded extremal digraphs gamma / gamma_bar,
// the fan digraph of maximal dimension for its diameter, standard digraphs,
// Cayley digraphs, the four 1-dimensional vertex-transitive families, and the
// order-3 catalog used as seeds for the codimension-2 classification.
#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "wdim/digraph.hpp"

namespace wdim {

// Tuple coordinates x_1..x_{2k}, each in 1..d, encoding the vertex index
// i = x_1 + (x_2 - 1) d + (x_3 - 1) d^2 + ... + (x_{2k} - 1) d^(2k-1).
struct TupleVertex {
    int k = 0;
    int d = 0;
    std::vector<int> entries;  // size 2k
};

TupleVertex tuple_from_index(long long i, int k, int d);
long long tuple_to_index(const TupleVertex& t);

// Order-n digraph of diameter d whose dimension meets the floor
// dim_lower_bound(n, d).  Vertices 0..k-1 are hubs; vertex k+j-1 carries the
// j-th tuple.  Arcs: hub i -> tuple with x_{2i-1} = 1; tuple with x_{2i} = 1
// -> hub i; tuple a -> tuple b when every odd slot satisfies a - b >= -1 and
// every even slot satisfies a - b <= 1.
Digraph gamma(int n, int d, int size_cap = 5000);

// gamma on the full tuple range (order d^(2k) + k) with all symmetric arcs
// added between hubs; arc-maximal for dimension k and diameter d.
Digraph gamma_bar(int k, int d, int size_cap = 5000);

// Number of tuple-to-tuple arcs of gamma_bar(k, d):
// ((d^2+3d-2)/2)^(2k) - d^(2k).
long long e_count(int k, int d);

// Order-n digraph of diameter d with weak metric dimension n - d: a hub
// fans out to n-d+1 sources which funnel into a directed tail back to the
// hub.  Needs 3 <= d+1 <= n.
Digraph fan_digraph(int n, int d);

Digraph complete_digraph(int n);
Digraph null_digraph(int n);
Digraph directed_cycle(int n);
Digraph directed_path(int n);
Digraph undirected_path(int n);
// name in {complete, null, cycle, path, upath}
Digraph standard(std::string_view name, int n);

// Four order-4 fixtures sharing the basis {0} and diameter 3:
// member[0] = directed 4-cycle, member[1] adds chord (3,1), member[2] also
// adds chord (0,2), member[3] then removes arc (0,1).
struct ChordedC4Family {
    std::array<Digraph, 4> member;
};
ChordedC4Family chorded_c4_family();

// Cayley digraph of Z_{factors[0]} + ... + Z_{factors[m-1]} with the given
// generator tuples; vertices are the group tuples in lexicographic order.
Digraph cayley(const std::vector<int>& factors, const std::vector<std::vector<int>>& generators);

// The four infinite vertex-transitive families with dimension 1:
//   1: Cay(Z_n, {1})                      n >= 2
//   2: Cay(Z_2n, {1,2})                   n >= 2
//   3: Cay(Z_2 + Z_n, {(1,0),(0,1)})      n >= 3
//   4: Cay(Z_2 + Z_2n, {(1,0),(0,1),(0,2)})  n >= 3
Digraph transitive_family(int which, int n);

// The four isomorphism classes of strongly connected order-3 digraphs with
// dimension 1.  1 and 2 are the pinned seeds used by the codimension-2
// families (both have symmetric arcs between vertices 1 and 2); 3 and 4 are
// derived by exhaustive order-3 enumeration and ordered by arc count
// (3 = directed triangle, 4 = symmetric path).
Digraph one_dim_order3(int which);

}  // namespace wdim
