#include "wdim/dimension.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace wdim {

long long sat_pow(long long base, int exp) {
    if (base < 1 || exp < 0) throw std::invalid_argument("sat_pow needs base >= 1, exp >= 0");
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<long long>::max() / base)
            return std::numeric_limits<long long>::max();
        r *= base;
    }
    return r;
}

int dim_lower_bound(int n, int d) {
    if (n < 2 || d < 1) throw std::invalid_argument("dim_lower_bound needs n >= 2, d >= 1");
    for (int k = 1;; ++k)
        if (sat_pow(d, 2 * k) >= static_cast<long long>(n) - k) return k;
}

bool resolves(const TwoWayDistanceMatrix& m, int z, int u, int v) {
    const int n = m.order();
    if (z < 0 || z >= n || u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("resolves needs distinct in-range u, v");
    return m.two_way(z, u) != m.two_way(z, v);
}

ResolvingCheck check_weakly_resolving(const TwoWayDistanceMatrix& m, std::span<const int> set) {
    const int n = m.order();
    if (set.empty()) throw std::invalid_argument("resolving set must be nonempty");
    std::vector<char> member(n, 0);
    for (int v : set) {
        if (v < 0 || v >= n) throw std::invalid_argument("set vertex out of range");
        member[v] = 1;
    }
    ResolvingCheck out;
    auto& cert = out.certificate;
    cert.set.assign(set.begin(), set.end());
    std::sort(cert.set.begin(), cert.set.end());
    cert.set.erase(std::unique(cert.set.begin(), cert.set.end()), cert.set.end());
    for (int v = 0; v < n; ++v)
        if (!member[v]) cert.rest.push_back(v);
    cert.signatures.reserve(cert.rest.size());
    for (int v : cert.rest) {
        std::vector<std::pair<int, int>> sig;
        sig.reserve(cert.set.size());
        for (int w : cert.set) sig.push_back(m.two_way(w, v));
        cert.signatures.push_back(std::move(sig));
    }
    for (size_t i = 0; i < cert.rest.size(); ++i)
        for (size_t j = i + 1; j < cert.rest.size(); ++j)
            if (cert.signatures[i] == cert.signatures[j]) {
                out.resolving = false;
                out.collision = {cert.rest[i], cert.rest[j]};
                out.certificate = {};
                return out;
            }
    out.resolving = true;
    return out;
}

namespace {

// two_way(z,v) packed into one machine word per set vertex
std::vector<uint32_t> pack_codes(const TwoWayDistanceMatrix& m) {
    const int n = m.order();
    std::vector<uint32_t> code(static_cast<size_t>(n) * n);
    for (int z = 0; z < n; ++z)
        for (int v = 0; v < n; ++v)
            code[static_cast<size_t>(z) * n + v] =
                (static_cast<uint32_t>(m.dist(z, v)) << 16) | static_cast<uint32_t>(m.dist(v, z));
    return code;
}

std::vector<std::pair<int, int>> forced_pairs_packed(const std::vector<uint32_t>& code, int n) {
    std::vector<std::pair<int, int>> out;
    if (n < 3) return out;  // order 2 leaves a single outside vertex, nothing to separate
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool forced = true;
            for (int z = 0; z < n && forced; ++z) {
                if (z == u || z == v) continue;
                forced = code[static_cast<size_t>(z) * n + u] == code[static_cast<size_t>(z) * n + v];
            }
            if (forced) out.emplace_back(u, v);
        }
    return out;
}

int min_vertex_cover(std::vector<std::pair<int, int>> pairs) {
    if (pairs.empty()) return 0;
    auto [u, v] = pairs.front();
    auto without = [&](int x) {
        std::vector<std::pair<int, int>> rest;
        rest.reserve(pairs.size());
        for (auto p : pairs)
            if (p.first != x && p.second != x) rest.push_back(p);
        return rest;
    };
    return 1 + std::min(min_vertex_cover(without(u)), min_vertex_cover(without(v)));
}

bool equal_signature(const std::vector<uint32_t>& code, int n, const std::vector<int>& c, int a,
                     int b) {
    for (int w : c)
        if (code[static_cast<size_t>(w) * n + a] != code[static_cast<size_t>(w) * n + b])
            return false;
    return true;
}

bool subset_resolves(const std::vector<uint32_t>& code, int n, const std::vector<int>& c,
                     std::vector<std::pair<uint64_t, int>>& scratch) {
    // hash each outside vertex signature, sort, then compare exactly inside
    // every run of equal hashes
    scratch.clear();
    size_t ci = 0;
    for (int v = 0; v < n; ++v) {
        if (ci < c.size() && c[ci] == v) {
            ++ci;
            continue;
        }
        uint64_t h = 1469598103934665603ull;
        for (int w : c) {
            h ^= code[static_cast<size_t>(w) * n + v];
            h *= 1099511628211ull;
        }
        scratch.emplace_back(h, v);
    }
    std::sort(scratch.begin(), scratch.end());
    for (size_t i = 0; i < scratch.size();) {
        size_t j = i + 1;
        while (j < scratch.size() && scratch[j].first == scratch[i].first) ++j;
        for (size_t a = i; a < j; ++a)
            for (size_t b = a + 1; b < j; ++b)
                if (equal_signature(code, n, c, scratch[a].second, scratch[b].second)) return false;
        i = j;
    }
    return true;
}

bool covers_forced(const std::vector<int>& c, const std::vector<std::pair<int, int>>& forced) {
    for (auto [u, v] : forced)
        if (!std::binary_search(c.begin(), c.end(), u) &&
            !std::binary_search(c.begin(), c.end(), v))
            return false;
    return true;
}

bool next_combination(std::vector<int>& c, int n) {
    const int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < n - s + i) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::pair<int, int>> forced_pairs(const TwoWayDistanceMatrix& m) {
    return forced_pairs_packed(pack_codes(m), m.order());
}

DimensionResult weak_metric_dimension(const Digraph& g, bool collect_all) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("weak metric dimension needs order >= 2");
    const auto& m = g.distances();
    const auto code = pack_codes(m);
    const auto forced = forced_pairs_packed(code, n);
    const int start = std::max(1, min_vertex_cover(forced));

    std::vector<std::pair<uint64_t, int>> scratch;
    scratch.reserve(n);
    for (int s = start; s < n; ++s) {
        std::vector<int> c(s);
        std::iota(c.begin(), c.end(), 0);
        DimensionResult result;
        bool found = false;
        do {
            if (!covers_forced(c, forced)) continue;
            if (!subset_resolves(code, n, c, scratch)) continue;
            if (!found) {
                result.dim = s;
                result.basis = c;
                found = true;
                if (!collect_all) return result;
                result.all_bases.emplace();
            }
            result.all_bases->push_back(c);
        } while (next_combination(c, n));
        if (found) return result;
    }
    throw std::logic_error("dimension search fell through");  // size n-1 always resolves
}

DimBoundsReport check_dim_bounds(const Digraph& g) {
    DimBoundsReport r;
    r.n = g.order();
    const auto& m = g.distances();
    r.diameter = m.diameter();
    r.dim = weak_metric_dimension(g).dim;
    r.dim_lower = dim_lower_bound(r.n, r.diameter);
    r.dim_upper = r.n - r.diameter;
    r.dim_ok = r.dim_lower <= r.dim && r.dim <= r.dim_upper;
    r.order_lower = r.dim + r.diameter;
    long long pw = sat_pow(r.diameter, 2 * r.dim);
    r.order_upper = pw > std::numeric_limits<long long>::max() - r.dim ? pw : pw + r.dim;
    r.order_ok = r.order_lower <= r.n && r.n <= r.order_upper;
    r.ok = r.dim_ok && r.order_ok;
    return r;
}

long long arc_lower_bound(int k, int d) { return static_cast<long long>(k) + d; }

long long arc_upper_bound(int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("arc_upper_bound needs k, d >= 1");
    const long long mu = (static_cast<long long>(d) * d + 3ll * d - 2) / 2;
    __int128 total = static_cast<__int128>(sat_pow(mu, 2 * k));
    total += static_cast<__int128>(2ll * k - d) * sat_pow(d, 2 * k - 1);
    total += static_cast<__int128>(k) * k - k;
    const __int128 cap = std::numeric_limits<long long>::max();
    if (total > cap) return std::numeric_limits<long long>::max();
    if (total < 0) throw std::overflow_error("arc_upper_bound underflow");
    return static_cast<long long>(total);
}

ArcBoundsReport check_arc_bounds(const Digraph& g) {
    ArcBoundsReport r;
    r.n = g.order();
    r.diameter = g.distances().diameter();
    r.dim = weak_metric_dimension(g).dim;
    r.arcs = g.arc_count();
    r.lower = arc_lower_bound(r.dim, r.diameter);
    r.upper = arc_upper_bound(r.dim, r.diameter);
    r.lower_equality = r.arcs == r.lower;
    r.upper_equality = r.arcs == r.upper;
    r.ok = r.lower <= r.arcs && r.arcs <= r.upper;
    return r;
}

TypeBoundReport check_type_bound(const Digraph& g) {
    TypeBoundReport r;
    r.n = g.order();
    const auto& m = g.distances();
    r.dim = weak_metric_dimension(g).dim;
    r.ok = true;
    r.codim2 = r.dim == r.n - 2;
    r.codim2_types_ok = true;
    for (auto [u, v] : g.arcs()) {
        ArcTypeEntry e;
        e.arc = {u, v};
        e.r = m.dist(v, u);
        e.ok = r.dim <= r.n - e.r;
        r.ok = r.ok && e.ok;
        if (r.codim2 && e.r > 2) r.codim2_types_ok = false;
        r.entries.push_back(e);
    }
    return r;
}

}  // namespace wdim
