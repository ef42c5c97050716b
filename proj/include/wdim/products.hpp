// Digraph operations used by the codimension-2 classification: disjoint
// union, join (symmetric cross arcs), and the generalized lexicographic
// product replacing each outer vertex by a block.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "wdim/digraph.hpp"

namespace wdim {

Digraph disjoint_union(const Digraph& g, const Digraph& h);
Digraph join(const Digraph& g, const Digraph& h);

// Blocks follow outer-vertex order; arcs inside block i come from inner[i],
// and every (x, y) with x in block i, y in block j is an arc iff (i, j) is an
// arc of outer.
Digraph lex_product(const Digraph& outer, std::span<const Digraph> inner);

struct FamilyInstance {
    std::string label;
    Digraph digraph;
};

// Candidate classification of digraphs of order n >= 4 that are not
// undirected graphs and have weak metric dimension n - 2.  Duplicate
// isomorphism classes are retained; labels D1/D2 refer to one_dim_order3.
std::vector<FamilyInstance> codim2_digraph_families(int n);

// Same classification restricted to undirected graphs: joins of complete and
// null graphs.
std::vector<FamilyInstance> codim2_graph_families(int n);

}  // namespace wdim
