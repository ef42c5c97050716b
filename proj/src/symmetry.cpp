#include "wdim/symmetry.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "wdim/constructions.hpp"
#include "wdim/dimension.hpp"

namespace wdim {

std::string Fingerprint::to_string() const {
    std::ostringstream ss;
    ss << "n" << order << "-0x" << std::hex;
    if (bits[1]) ss << bits[1] << ":";
    ss << bits[0];
    return ss.str();
}

uint64_t arc_mask_of(const Digraph& g) {
    if (g.order() > 8) throw std::invalid_argument("arc_mask_of supports order <= 8");
    uint64_t mask = 0;
    for (auto [u, v] : g.arcs()) mask |= uint64_t{1} << arc_bit_index(g.order(), u, v);
    return mask;
}

Digraph digraph_from_arc_mask(int n, uint64_t mask) {
    if (n < 1 || n > 8) throw std::invalid_argument("digraph_from_arc_mask supports order 1..8");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && ((mask >> arc_bit_index(n, u, v)) & 1)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

// Per-order lookup tables: for each permutation, the images of the low and
// high halves of the arc bitmask, so a relabeling is two table loads.
struct CanonTables {
    int bits = 0, lo_bits = 0;
    std::vector<std::vector<uint64_t>> lo, hi;  // [perm][half-mask] -> remapped mask
};

const CanonTables& canon_tables(int n) {
    static std::mutex mu;
    static std::map<int, CanonTables> cache;
    std::scoped_lock lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CanonTables t;
    t.bits = n * (n - 1);
    t.lo_bits = std::min(t.bits, 10);
    const int hi_bits = t.bits - t.lo_bits;
    auto perms = all_permutations(n);
    std::vector<int> bitmap(t.bits);
    for (const auto& p : perms) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) bitmap[arc_bit_index(n, u, v)] = arc_bit_index(n, p[u], p[v]);
        std::vector<uint64_t> lo(size_t{1} << t.lo_bits, 0), hi(size_t{1} << hi_bits, 0);
        for (uint64_t m = 0; m < lo.size(); ++m) {
            uint64_t out = 0;
            for (int b = 0; b < t.lo_bits; ++b)
                if ((m >> b) & 1) out |= uint64_t{1} << bitmap[b];
            lo[m] = out;
        }
        for (uint64_t m = 0; m < hi.size(); ++m) {
            uint64_t out = 0;
            for (int b = 0; b < hi_bits; ++b)
                if ((m >> b) & 1) out |= uint64_t{1} << bitmap[t.lo_bits + b];
            hi[m] = out;
        }
        t.lo.push_back(std::move(lo));
        t.hi.push_back(std::move(hi));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

uint64_t canonical_arc_mask(int n, uint64_t mask) {
    if (n < 1 || n > 8) throw std::invalid_argument("canonical_arc_mask supports order 1..8");
    if (n <= 5) {
        const auto& t = canon_tables(n);
        const uint64_t lo = mask & ((uint64_t{1} << t.lo_bits) - 1), hi = mask >> t.lo_bits;
        uint64_t best = ~uint64_t{0};
        for (size_t p = 0; p < t.lo.size(); ++p)
            best = std::min(best, t.lo[p][lo] | t.hi[p][hi]);
        return best;
    }
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<int>>> bitmaps;  // [perm][bit] -> bit
    std::vector<std::vector<int>>* maps;
    {
        std::scoped_lock lk(mu);
        auto it = bitmaps.find(n);
        if (it == bitmaps.end()) {
            std::vector<std::vector<int>> built;
            for (const auto& p : all_permutations(n)) {
                std::vector<int> bm(n * (n - 1));
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (u != v) bm[arc_bit_index(n, u, v)] = arc_bit_index(n, p[u], p[v]);
                built.push_back(std::move(bm));
            }
            it = bitmaps.emplace(n, std::move(built)).first;
        }
        maps = &it->second;
    }
    uint64_t best = ~uint64_t{0};
    for (const auto& bm : *maps) {
        uint64_t out = 0, m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            out |= uint64_t{1} << bm[b];
        }
        best = std::min(best, out);
    }
    return best;
}

Fingerprint canonical_form(const Digraph& g, int cap) {
    const int n = g.order();
    if (n > cap) throw std::invalid_argument("canonical_form order above cap");
    if (n <= 8) return Fingerprint{n, {canonical_arc_mask(n, arc_mask_of(g)), 0}};

    // order 9..10: two-word bitmask over all permutations
    auto arcs = g.arcs();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::array<uint64_t, 2> best{~uint64_t{0}, ~uint64_t{0}};
    auto less = [](const std::array<uint64_t, 2>& a, const std::array<uint64_t, 2>& b) {
        return std::tie(a[1], a[0]) < std::tie(b[1], b[0]);
    };
    do {
        std::array<uint64_t, 2> cur{0, 0};
        for (auto [u, v] : arcs) {
            int b = arc_bit_index(n, p[u], p[v]);
            cur[b >> 6] |= uint64_t{1} << (b & 63);
        }
        if (less(cur, best)) best = cur;
    } while (std::next_permutation(p.begin(), p.end()));
    return Fingerprint{n, best};
}

namespace {

// Backtracking vertex-by-vertex map from a to b consistent with adjacency in
// both directions.  emit returns true to stop the whole search.
struct MatchSearch {
    const Digraph &a, &b;
    std::vector<std::pair<int, int>> deg_b;  // (out, in) per vertex of b
    std::vector<int> img;
    std::vector<char> used;
    int pinned_first = -1;

    MatchSearch(const Digraph& a_, const Digraph& b_) : a(a_), b(b_) {
        const int n = b.order();
        deg_b.resize(n);
        for (int v = 0; v < n; ++v) deg_b[v] = {b.out_degree(v), b.in_degree(v)};
        img.assign(a.order(), -1);
        used.assign(n, 0);
    }

    template <class Emit>
    bool run(int depth, Emit&& emit) {
        const int n = a.order();
        if (depth == n) return emit(img);
        const std::pair<int, int> want{a.out_degree(depth), a.in_degree(depth)};
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg_b[w] != want) continue;
            if (depth == 0 && pinned_first >= 0 && w != pinned_first) continue;
            bool ok = true;
            for (int u = 0; u < depth && ok; ++u)
                ok = a.has_arc(u, depth) == b.has_arc(img[u], w) &&
                     a.has_arc(depth, u) == b.has_arc(w, img[u]);
            if (!ok) continue;
            img[depth] = w;
            used[w] = 1;
            if (run(depth + 1, emit)) return true;
            used[w] = 0;
            img[depth] = -1;
        }
        return false;
    }
};

bool same_degree_multiset(const Digraph& g, const Digraph& h) {
    auto profile = [](const Digraph& d) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < d.order(); ++v) p.emplace_back(d.out_degree(v), d.in_degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    return profile(g) == profile(h);
}

}  // namespace

std::optional<VertexPermutation> is_isomorphic(const Digraph& g, const Digraph& h, int cap) {
    if (g.order() > cap || h.order() > cap)
        throw std::invalid_argument("is_isomorphic order above cap");
    if (g.order() != h.order() || g.arc_count() != h.arc_count()) return std::nullopt;
    if (!same_degree_multiset(g, h)) return std::nullopt;
    MatchSearch s(g, h);
    std::optional<VertexPermutation> found;
    s.run(0, [&](const std::vector<int>& img) {
        found = img;
        return true;
    });
    return found;
}

std::vector<VertexPermutation> automorphisms(const Digraph& g, int cap) {
    if (g.order() > cap) throw std::invalid_argument("automorphisms order above cap");
    MatchSearch s(g, g);
    std::vector<VertexPermutation> all;
    s.run(0, [&](const std::vector<int>& img) {
        all.push_back(img);
        return false;
    });
    return all;  // lexicographic; identity first
}

bool is_vertex_transitive(const Digraph& g, int cap) {
    if (g.order() > cap) throw std::invalid_argument("is_vertex_transitive order above cap");
    const int n = g.order();
    for (int v = 1; v < n; ++v) {
        if (g.out_degree(v) != g.out_degree(0) || g.in_degree(v) != g.in_degree(0)) return false;
        MatchSearch s(g, g);
        s.pinned_first = v;
        bool found = s.run(0, [](const std::vector<int>&) { return true; });
        if (!found) return false;
    }
    return true;
}

std::vector<VertexProfile> single_vertex_profiles(const Digraph& g) {
    const auto& m = g.distances();
    const int n = g.order();
    std::vector<VertexProfile> out;
    out.reserve(n);
    for (int x = 0; x < n; ++x) {
        std::map<std::pair<int, int>, std::vector<int>> cls;
        for (int y = 0; y < n; ++y) cls[m.two_way(x, y)].push_back(y);
        VertexProfile p;
        p.vertex = x;
        p.all_singleton = true;
        for (auto& [key, members] : cls) {
            p.all_singleton = p.all_singleton && members.size() == 1;
            p.classes.emplace_back(key, std::move(members));
        }
        out.push_back(std::move(p));
    }
    return out;
}

WdrResult is_weakly_distance_regular(const Digraph& g) {
    const auto& m = g.distances();
    const int n = g.order();
    WdrResult res;
    res.regular = true;

    using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, std::map<Key, long long>>> ref;
    for (int x = 0; x < n && res.regular; ++x)
        for (int y = 0; y < n && res.regular; ++y) {
            const auto h = m.two_way(x, y);
            std::map<Key, long long> counts;
            for (int z = 0; z < n; ++z) ++counts[{m.two_way(x, z), m.two_way(z, y)}];
            auto it = ref.find(h);
            if (it == ref.end()) {
                for (const auto& [key, c] : counts)
                    res.numbers[{h.first, h.second, key.first.first, key.first.second,
                                 key.second.first, key.second.second}] = c;
                ref.emplace(h, std::make_pair(std::make_pair(x, y), std::move(counts)));
                continue;
            }
            if (counts == it->second.second) continue;
            res.regular = false;
            WdrViolation v;
            v.h = h;
            v.first_pair = it->second.first;
            v.second_pair = {x, y};
            // first key (in sorted order) where the two count maps disagree
            std::map<Key, std::pair<long long, long long>> merged;
            for (const auto& [key, c] : it->second.second) merged[key].first = c;
            for (const auto& [key, c] : counts) merged[key].second = c;
            for (const auto& [key, both] : merged)
                if (both.first != both.second) {
                    v.i = key.first;
                    v.j = key.second;
                    v.first_count = both.first;
                    v.second_count = both.second;
                    break;
                }
            res.violation = v;
        }

    if (res.regular) {
        res.thin = true;
        std::map<std::pair<int, int>, int> sizes;
        for (int y = 0; y < n; ++y) ++sizes[m.two_way(0, y)];
        for (const auto& [h, c] : sizes) res.thin = res.thin && c == 1;
    }
    return res;
}

bool is_weakly_distance_transitive(const Digraph& g, int cap) {
    const auto& m = g.distances();
    const int n = g.order();
    const auto autos = automorphisms(g, cap);
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cls;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cls[m.two_way(x, y)].emplace_back(x, y);
    std::vector<char> hit(static_cast<size_t>(n) * n);
    for (const auto& [h, pairs] : cls) {
        std::fill(hit.begin(), hit.end(), 0);
        const auto [x0, y0] = pairs.front();
        for (const auto& a : autos) hit[static_cast<size_t>(a[x0]) * n + a[y0]] = 1;
        for (const auto& [x, y] : pairs)
            if (!hit[static_cast<size_t>(x) * n + y]) return false;
    }
    return true;
}

EmbedResult embed_into_gamma_bar(const Digraph& g, const std::vector<int>& basis, int size_cap) {
    const int n = g.order();
    std::vector<int> sorted = basis;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != basis.size() || sorted.empty() || sorted.front() < 0 ||
        sorted.back() >= n)
        throw std::invalid_argument("embed basis must be a nonempty vertex set");
    const auto& m = g.distances();
    if (!check_weakly_resolving(m, sorted).resolving)
        throw std::invalid_argument("embed basis is not weakly resolving");

    EmbedResult res;
    res.k = static_cast<int>(sorted.size());
    res.d = m.diameter();
    const Digraph target = gamma_bar(res.k, res.d, size_cap);

    res.image.assign(n, -1);
    for (int i = 0; i < res.k; ++i) res.image[sorted[i]] = i;
    for (int y = 0; y < n; ++y) {
        if (res.image[y] >= 0) continue;
        TupleVertex t{res.k, res.d, std::vector<int>(2 * res.k)};
        for (int i = 0; i < res.k; ++i) {
            t.entries[2 * i] = m.dist(sorted[i], y);
            t.entries[2 * i + 1] = m.dist(y, sorted[i]);
        }
        res.image[y] = res.k + static_cast<int>(tuple_to_index(t)) - 1;
    }

    std::vector<int> image_sorted = res.image;
    std::sort(image_sorted.begin(), image_sorted.end());
    if (std::adjacent_find(image_sorted.begin(), image_sorted.end()) != image_sorted.end())
        throw std::logic_error("embed image not injective despite resolving basis");

    res.ok = true;
    for (auto [u, v] : g.arcs())
        if (!target.has_arc(res.image[u], res.image[v])) {
            res.ok = false;
            res.failed_arc = {u, v};
            return res;
        }
    return res;
}

}  // namespace wdim
