#include "wdim/digraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>

namespace wdim {

Digraph::Digraph(int n, std::span<const std::pair<int, int>> arcs) {
    if (n < 1) throw std::invalid_argument("digraph order must be at least 1");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("loop arc not allowed: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    }
    m_ = 0;
    for (uint64_t w : bits_) m_ += std::popcount(w);
}

int Digraph::out_degree(int u) const {
    int d = 0;
    for (uint64_t w : out_row(u)) d += std::popcount(w);
    return d;
}

int Digraph::in_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += has_arc(u, v) ? 1 : 0;
    return d;
}

std::vector<int> Digraph::out_neighbors(int u) const {
    std::vector<int> out;
    auto row = out_row(u);
    for (int w = 0; w < words_; ++w) {
        uint64_t bitsw = row[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
    std::vector<int> in;
    for (int u = 0; u < n_; ++u)
        if (has_arc(u, v)) in.push_back(u);
    return in;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_neighbors(u)) out.emplace_back(u, v);
    return out;  // already sorted by (u, v)
}

const TwoWayDistanceMatrix& Digraph::distances() const {
    static std::mutex cache_mutex;
    {
        std::scoped_lock lk(cache_mutex);
        if (dist_cache_) return *dist_cache_;
    }
    auto fresh = std::make_shared<const TwoWayDistanceMatrix>(TwoWayDistanceMatrix::compute(*this));
    std::scoped_lock lk(cache_mutex);
    if (!dist_cache_) dist_cache_ = std::move(fresh);
    return *dist_cache_;
}

Digraph build_digraph(int n, std::span<const std::pair<int, int>> arcs) {
    return Digraph(n, arcs);
}

Digraph reverse(const Digraph& g) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(g.arc_count());
    for (auto [u, v] : g.arcs()) rev.emplace_back(v, u);
    return Digraph(g.order(), rev);
}

namespace {

// Vertices reachable from 0 by repeated frontier expansion over `row(u)`.
template <class RowFn>
bool reaches_all(int n, int words, RowFn row) {
    std::vector<uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    visited[0] = frontier[0] = 1;
    for (;;) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (int w = 0; w < words; ++w) {
            uint64_t f = frontier[w];
            while (f) {
                int u = w * 64 + std::countr_zero(f);
                f &= f - 1;
                auto r = row(u);
                for (int k = 0; k < words; ++k) next[k] |= r[k];
                any = true;
            }
        }
        if (!any) break;
        bool grew = false;
        for (int k = 0; k < words; ++k) {
            uint64_t fresh = next[k] & ~visited[k];
            frontier[k] = fresh;
            visited[k] |= fresh;
            grew |= fresh != 0;
        }
        if (!grew) break;
    }
    int count = 0;
    for (uint64_t w : visited) count += std::popcount(w);
    return count == n;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    if (!reaches_all(n, g.words(), [&](int u) { return g.out_row(u); })) return false;
    Digraph rev = reverse(g);
    return reaches_all(n, rev.words(), [&](int u) { return rev.out_row(u); });
}

TwoWayDistanceMatrix TwoWayDistanceMatrix::compute(const Digraph& g) {
    const int n = g.order();
    const int words = g.words();
    TwoWayDistanceMatrix m;
    m.n_ = n;
    m.d_.assign(static_cast<size_t>(n) * n, 0);

    std::vector<uint64_t> visited(words), frontier(words), next(words);
    for (int s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[s >> 6] = frontier[s >> 6] = uint64_t{1} << (s & 63);
        int reached = 1;
        for (int level = 1; reached < n; ++level) {
            std::fill(next.begin(), next.end(), 0);
            for (int w = 0; w < words; ++w) {
                uint64_t f = frontier[w];
                while (f) {
                    int u = w * 64 + std::countr_zero(f);
                    f &= f - 1;
                    auto row = g.out_row(u);
                    for (int k = 0; k < words; ++k) next[k] |= row[k];
                }
            }
            bool grew = false;
            for (int k = 0; k < words; ++k) {
                uint64_t fresh = next[k] & ~visited[k];
                frontier[k] = fresh;
                visited[k] |= fresh;
                while (fresh) {
                    int v = k * 64 + std::countr_zero(fresh);
                    fresh &= fresh - 1;
                    m.d_[static_cast<size_t>(s) * n + v] = static_cast<uint16_t>(level);
                    ++reached;
                }
                grew |= frontier[k] != 0;
            }
            if (!grew) break;
        }
        if (reached < n)
            throw not_strongly_connected("two-way distances need a strongly connected digraph");
    }

    int diam = 0;
    for (uint16_t v : m.d_) diam = std::max(diam, static_cast<int>(v));
    m.diameter_ = diam;

    int girth = std::numeric_limits<int>::max();
    for (auto [x, y] : g.arcs()) girth = std::min(girth, 1 + m.dist(y, x));
    m.girth_ = g.arc_count() == 0 ? 0 : girth;
    return m;
}

const TwoWayDistanceMatrix& distance_matrix(const Digraph& g) { return g.distances(); }

std::pair<int, int> arc_type(const Digraph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.has_arc(u, v))
        throw std::invalid_argument("arc_type needs an existing arc");
    return {1, g.distances().dist(v, u)};
}

bool is_undirected_graph(const Digraph& g) {
    for (auto [u, v] : g.arcs())
        if (!g.has_arc(v, u)) return false;
    return true;
}

namespace {

bool cycle_search(const Digraph& g, int start, int at, int remaining, uint64_t used) {
    if (remaining == 0) return g.has_arc(at, start);
    for (int v : g.out_neighbors(at)) {
        if (v <= start) continue;  // count each cycle from its minimum vertex
        if ((used >> v) & 1) continue;
        if (cycle_search(g, start, v, remaining - 1, used | (uint64_t{1} << v))) return true;
    }
    return false;
}

}  // namespace

bool has_directed_cycle(const Digraph& g, int length) {
    if (g.order() > 64) throw std::invalid_argument("has_directed_cycle supports order <= 64");
    if (length < 2 || length > g.order()) return false;
    for (int s = 0; s < g.order(); ++s)
        if (cycle_search(g, s, s, length - 1, uint64_t{1} << s)) return true;
    return false;
}

}  // namespace wdim
