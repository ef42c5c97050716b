#include "wdim/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "wdim/dimension.hpp"
#include "wdim/symmetry.hpp"

namespace wdim {

namespace {

void check_order(int n, bool allow_slow) {
    if (n < 1 || n > 8) throw std::invalid_argument("exhaustive enumeration supports order 1..8");
    if (n > kMaxExhaustiveOrder && !allow_slow)
        throw std::invalid_argument("orders above " + std::to_string(kMaxExhaustiveOrder) +
                                    " need allow_slow");
}

// Strong connectivity straight off the arc bitmask; rows are small bitsets.
bool sc_mask(int n, uint64_t mask) {
    uint8_t out[8] = {0}, in[8] = {0};
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((mask >> bit) & 1) {
                out[u] |= static_cast<uint8_t>(1u << v);
                in[v] |= static_cast<uint8_t>(1u << u);
            }
            ++bit;
        }
    const uint32_t full = (1u << n) - 1;
    for (auto rows : {out, in}) {
        uint32_t visited = 1, frontier = 1;
        while (frontier) {
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= rows[u];
            }
            frontier = next & ~visited;
            visited |= frontier;
        }
        if (visited != full) return false;
    }
    return true;
}

std::vector<uint64_t> canonical_sc_masks(int n, bool allow_slow, bool parallel) {
    check_order(n, allow_slow);
    if (n == 1) return {0};
    const uint64_t total = uint64_t{1} << (n * (n - 1));
    canonical_arc_mask(n, 0);  // build the permutation tables before the sweep

    std::vector<uint64_t> merged;
    if (parallel) {
        std::unordered_set<uint64_t> seen;
#pragma omp parallel
        {
            std::unordered_set<uint64_t> local;
#pragma omp for schedule(static)
            for (long long mask = 0; mask < static_cast<long long>(total); ++mask)
                if (sc_mask(n, static_cast<uint64_t>(mask)))
                    local.insert(canonical_arc_mask(n, static_cast<uint64_t>(mask)));
#pragma omp critical
            seen.insert(local.begin(), local.end());
        }
        merged.assign(seen.begin(), seen.end());
    } else {
        std::unordered_set<uint64_t> seen;
        for (uint64_t mask = 0; mask < total; ++mask)
            if (sc_mask(n, mask)) seen.insert(canonical_arc_mask(n, mask));
        merged.assign(seen.begin(), seen.end());
    }
    std::sort(merged.begin(), merged.end());
    return merged;
}

}  // namespace

void labeled_digraphs(int n, const std::function<bool(const Digraph&)>& filter,
                      const std::function<void(const Digraph&)>& emit, bool allow_slow) {
    check_order(n, allow_slow);
    if (n == 1) {
        Digraph g(1, {});
        if (!filter || filter(g)) emit(g);
        return;
    }
    const uint64_t total = uint64_t{1} << (n * (n - 1));
    for (uint64_t mask = 0; mask < total; ++mask) {
        Digraph g = digraph_from_arc_mask(n, mask);
        if (!filter || filter(g)) emit(g);
    }
}

std::vector<Digraph> sc_representatives(int n, bool allow_slow) {
    std::vector<Digraph> out;
    for (uint64_t mask : canonical_sc_masks(n, allow_slow, true))
        out.push_back(digraph_from_arc_mask(n, mask));
    return out;
}

std::vector<Digraph> sc_representatives_serial(int n, bool allow_slow) {
    std::vector<Digraph> out;
    for (uint64_t mask : canonical_sc_masks(n, allow_slow, false))
        out.push_back(digraph_from_arc_mask(n, mask));
    return out;
}

long long labeled_sc_count(int n, bool allow_slow) {
    check_order(n, allow_slow);
    if (n == 1) return 1;
    const uint64_t total = uint64_t{1} << (n * (n - 1));
    long long count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (long long mask = 0; mask < static_cast<long long>(total); ++mask)
        if (sc_mask(n, static_cast<uint64_t>(mask))) ++count;
    return count;
}

std::map<int, std::vector<Digraph>> classify_by_dimension(int n, bool allow_slow) {
    const std::vector<Digraph> reps = sc_representatives(n, allow_slow);
    std::vector<int> dims(reps.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(reps.size()); ++i)
        dims[i] = reps[i].order() < 2 ? 0 : weak_metric_dimension(reps[i]).dim;
    std::map<int, std::vector<Digraph>> out;
    for (size_t i = 0; i < reps.size(); ++i) out[dims[i]].push_back(reps[i]);
    return out;
}

}  // namespace wdim
