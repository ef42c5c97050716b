// Exhaustive sweep over all labeled digraphs of a given order via arc
// bitmasks, with strong-connectivity filtering and canonical deduplication.
// The sweep is an OpenMP kernel (contiguous chunks of the bitmask range,
// merged by deterministic set union); a serial reference implementation is
// kept alongside for testing.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "wdim/digraph.hpp"

namespace wdim {

// Orders above this need allow_slow (the order-6 sweep visits 2^30 masks).
inline constexpr int kMaxExhaustiveOrder = 5;

// Streams every labeled digraph of the given order passing `filter` in arc
// bitmask order.
void labeled_digraphs(int n, const std::function<bool(const Digraph&)>& filter,
                      const std::function<void(const Digraph&)>& emit, bool allow_slow = false);

// One representative per isomorphism class of strongly connected digraphs of
// order n, in ascending canonical-fingerprint order.
std::vector<Digraph> sc_representatives(int n, bool allow_slow = false);
std::vector<Digraph> sc_representatives_serial(int n, bool allow_slow = false);

long long labeled_sc_count(int n, bool allow_slow = false);

// Representatives grouped by weak metric dimension (canonical order inside
// each group).
std::map<int, std::vector<Digraph>> classify_by_dimension(int n, bool allow_slow = false);

}  // namespace wdim
