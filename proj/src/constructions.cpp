#include "wdim/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "wdim/dimension.hpp"
#include "wdim/symmetry.hpp"

namespace wdim {

TupleVertex tuple_from_index(long long i, int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("tuple_from_index needs k, d >= 1");
    if (i < 1 || i > sat_pow(d, 2 * k)) throw std::invalid_argument("tuple index out of range");
    TupleVertex t{k, d, std::vector<int>(2 * k)};
    long long j = i - 1;
    for (int r = 0; r < 2 * k; ++r) {
        t.entries[r] = static_cast<int>(j % d) + 1;
        j /= d;
    }
    return t;
}

long long tuple_to_index(const TupleVertex& t) {
    if (t.k < 1 || t.d < 1 || static_cast<int>(t.entries.size()) != 2 * t.k)
        throw std::invalid_argument("malformed tuple");
    long long i = 0;
    for (int r = 2 * t.k - 1; r >= 0; --r) {
        if (t.entries[r] < 1 || t.entries[r] > t.d)
            throw std::invalid_argument("tuple entry out of range");
        i = i * t.d + (t.entries[r] - 1);
    }
    return i + 1;
}

Digraph gamma(int n, int d, int size_cap) {
    if (d < 1 || n < d + 1) throw std::invalid_argument("gamma needs d >= 1 and n >= d + 1");
    if (n > size_cap) throw std::invalid_argument("gamma order exceeds size cap");
    const int k = dim_lower_bound(n, d);
    const int m = n - k;

    // tuples flattened, tup[j * 2k + r] = slot r+1 of the (j+1)-th tuple
    std::vector<int> tup(static_cast<size_t>(m) * 2 * k);
    for (int j = 0; j < m; ++j) {
        TupleVertex t = tuple_from_index(j + 1, k, d);
        std::copy(t.entries.begin(), t.entries.end(), tup.begin() + static_cast<size_t>(j) * 2 * k);
    }

    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            if (tup[static_cast<size_t>(j) * 2 * k + 2 * i] == 1) arcs.emplace_back(i, k + j);
            if (tup[static_cast<size_t>(j) * 2 * k + 2 * i + 1] == 1) arcs.emplace_back(k + j, i);
        }
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
            if (j == l) continue;
            const int* a = &tup[static_cast<size_t>(j) * 2 * k];
            const int* b = &tup[static_cast<size_t>(l) * 2 * k];
            bool arc = true;
            for (int r = 0; r < k && arc; ++r)
                arc = a[2 * r] - b[2 * r] >= -1 && a[2 * r + 1] - b[2 * r + 1] <= 1;
            if (arc) arcs.emplace_back(k + j, k + l);
        }
    return Digraph(n, arcs);
}

Digraph gamma_bar(int k, int d, int size_cap) {
    if (k < 1 || d < 1) throw std::invalid_argument("gamma_bar needs k, d >= 1");
    const long long order = sat_pow(d, 2 * k);
    if (order > size_cap - k) throw std::invalid_argument("gamma_bar order exceeds size cap");
    const int n = static_cast<int>(order) + k;
    if (dim_lower_bound(n, d) != k) throw std::logic_error("gamma_bar hub count mismatch");
    Digraph base = gamma(n, d, size_cap);
    auto arcs = base.arcs();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            arcs.emplace_back(i, j);
            arcs.emplace_back(j, i);
        }
    return Digraph(n, arcs);
}

long long e_count(int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("e_count needs k, d >= 1");
    const long long mu = (static_cast<long long>(d) * d + 3ll * d - 2) / 2;
    const long long a = sat_pow(mu, 2 * k), b = sat_pow(d, 2 * k);
    if (a == std::numeric_limits<long long>::max()) throw std::overflow_error("e_count overflow");
    return a - b;
}

Digraph fan_digraph(int n, int d) {
    if (d < 2 || n < d + 1) throw std::invalid_argument("fan_digraph needs 3 <= d + 1 <= n");
    const int hub = n - 1;
    const int sink = n - d + 1;  // vertex receiving all fan arcs
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i <= n - d; ++i) {
        arcs.emplace_back(hub, i);
        arcs.emplace_back(i, sink);
    }
    for (int j = sink; j < hub; ++j) arcs.emplace_back(j, j + 1);
    return Digraph(n, arcs);
}

Digraph complete_digraph(int n) {
    if (n < 1) throw std::invalid_argument("complete_digraph needs n >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph null_digraph(int n) {
    if (n < 1) throw std::invalid_argument("null_digraph needs n >= 1");
    return Digraph(n, {});
}

Digraph directed_cycle(int n) {
    if (n < 2) throw std::invalid_argument("directed_cycle needs n >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) arcs.emplace_back(u, (u + 1) % n);
    return Digraph(n, arcs);
}

Digraph directed_path(int n) {
    if (n < 2) throw std::invalid_argument("directed_path needs n >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u + 1 < n; ++u) arcs.emplace_back(u, u + 1);
    return Digraph(n, arcs);
}

Digraph undirected_path(int n) {
    if (n < 2) throw std::invalid_argument("undirected_path needs n >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u + 1 < n; ++u) {
        arcs.emplace_back(u, u + 1);
        arcs.emplace_back(u + 1, u);
    }
    return Digraph(n, arcs);
}

Digraph standard(std::string_view name, int n) {
    if (name == "complete") return complete_digraph(n);
    if (name == "null") return null_digraph(n);
    if (name == "cycle") return directed_cycle(n);
    if (name == "path") return directed_path(n);
    if (name == "upath") return undirected_path(n);
    throw std::invalid_argument("unknown standard digraph: " + std::string(name));
}

ChordedC4Family chorded_c4_family() {
    ChordedC4Family f;
    f.member[0] = Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    f.member[1] = Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}});
    f.member[2] = Digraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 0}, {3, 1}});
    f.member[3] = Digraph(4, {{0, 2}, {1, 2}, {2, 3}, {3, 0}, {3, 1}});
    return f;
}

Digraph cayley(const std::vector<int>& factors, const std::vector<std::vector<int>>& generators) {
    if (factors.empty()) throw std::invalid_argument("cayley needs at least one cyclic factor");
    long long order = 1;
    for (int f : factors) {
        if (f < 1) throw std::invalid_argument("cyclic factor must be >= 1");
        order *= f;
        if (order > 100000) throw std::invalid_argument("cayley order too large");
    }
    if (generators.empty()) throw std::invalid_argument("cayley needs a nonempty generating set");
    const int m = static_cast<int>(factors.size());
    std::vector<std::vector<int>> gens;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != m)
            throw std::invalid_argument("generator arity does not match factor count");
        std::vector<int> red(m);
        bool identity = true;
        for (int i = 0; i < m; ++i) {
            red[i] = ((g[i] % factors[i]) + factors[i]) % factors[i];
            identity = identity && red[i] == 0;
        }
        if (identity) throw std::invalid_argument("identity element cannot be a generator");
        gens.push_back(std::move(red));
    }

    const int n = static_cast<int>(order);
    std::vector<int> tuple(m, 0);
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < n; ++x) {
        for (const auto& s : gens) {
            int y = 0;
            for (int i = 0; i < m; ++i) y = y * factors[i] + (tuple[i] + s[i]) % factors[i];
            arcs.emplace_back(x, y);
        }
        for (int i = m - 1; i >= 0; --i) {  // advance the lexicographic tuple
            if (++tuple[i] < factors[i]) break;
            tuple[i] = 0;
        }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Digraph(n, arcs);
}

Digraph transitive_family(int which, int n) {
    switch (which) {
        case 1:
            if (n < 2) throw std::invalid_argument("family 1 needs n >= 2");
            return cayley({n}, {{1}});
        case 2:
            if (n < 2) throw std::invalid_argument("family 2 needs n >= 2");
            return cayley({2 * n}, {{1}, {2}});
        case 3:
            if (n < 3) throw std::invalid_argument("family 3 needs n >= 3");
            return cayley({2, n}, {{1, 0}, {0, 1}});
        case 4:
            if (n < 3) throw std::invalid_argument("family 4 needs n >= 3");
            return cayley({2, 2 * n}, {{1, 0}, {0, 1}, {0, 2}});
        default:
            throw std::invalid_argument("transitive_family index must be 1..4");
    }
}

Digraph one_dim_order3(int which) {
    static std::mutex mu;
    static std::vector<Digraph> catalog;
    std::scoped_lock lk(mu);
    if (catalog.empty()) {
        catalog.resize(4);
        catalog[0] = Digraph(3, {{0, 1}, {1, 2}, {2, 1}, {2, 0}});
        catalog[1] = Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}});
        // 3 and 4: sweep all 64 order-3 arc sets, keep the strongly connected
        // 1-dimensional classes not isomorphic to the seeds, order by arc count
        std::map<Fingerprint, Digraph> found;
        for (uint32_t mask = 0; mask < 64; ++mask) {
            std::vector<std::pair<int, int>> arcs;
            int bit = 0;
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) {
                    if (u == v) continue;
                    if ((mask >> bit) & 1) arcs.emplace_back(u, v);
                    ++bit;
                }
            Digraph g(3, arcs);
            if (!is_strongly_connected(g)) continue;
            if (weak_metric_dimension(g).dim != 1) continue;
            found.emplace(canonical_form(g), g);
        }
        found.erase(canonical_form(catalog[0]));
        found.erase(canonical_form(catalog[1]));
        if (found.size() != 2) throw std::logic_error("order-3 catalog derivation failed");
        std::vector<Digraph> rest;
        for (auto& [fp, g] : found) rest.push_back(g);
        if (rest[0].arc_count() > rest[1].arc_count()) std::swap(rest[0], rest[1]);
        catalog[2] = rest[0];
        catalog[3] = rest[1];
    }
    if (which < 1 || which > 4) throw std::invalid_argument("one_dim_order3 index must be 1..4");
    return catalog[which - 1];
}

}  // namespace wdim
