#include "wdim/products.hpp"

#include <stdexcept>

#include "wdim/constructions.hpp"

namespace wdim {

Digraph disjoint_union(const Digraph& g, const Digraph& h) {
    std::vector<std::pair<int, int>> arcs = g.arcs();
    const int off = g.order();
    for (auto [u, v] : h.arcs()) arcs.emplace_back(off + u, off + v);
    return Digraph(g.order() + h.order(), arcs);
}

Digraph join(const Digraph& g, const Digraph& h) {
    std::vector<std::pair<int, int>> arcs = g.arcs();
    const int off = g.order();
    for (auto [u, v] : h.arcs()) arcs.emplace_back(off + u, off + v);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) {
            arcs.emplace_back(u, off + v);
            arcs.emplace_back(off + v, u);
        }
    return Digraph(g.order() + h.order(), arcs);
}

Digraph lex_product(const Digraph& outer, std::span<const Digraph> inner) {
    if (static_cast<int>(inner.size()) != outer.order())
        throw std::invalid_argument("lex_product needs one inner digraph per outer vertex");
    std::vector<int> offset(outer.order() + 1, 0);
    for (int i = 0; i < outer.order(); ++i) {
        if (inner[i].order() < 1) throw std::invalid_argument("lex_product blocks must be nonempty");
        offset[i + 1] = offset[i] + inner[i].order();
    }
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < outer.order(); ++i)
        for (auto [u, v] : inner[i].arcs()) arcs.emplace_back(offset[i] + u, offset[i] + v);
    for (auto [i, j] : outer.arcs())
        for (int u = 0; u < inner[i].order(); ++u)
            for (int v = 0; v < inner[j].order(); ++v)
                arcs.emplace_back(offset[i] + u, offset[j] + v);
    return Digraph(offset.back(), arcs);
}

namespace {

Digraph seed_blowup(int which, const Digraph& b0, const Digraph& b1, const Digraph& b2) {
    const Digraph outer = one_dim_order3(which);
    const Digraph inner[3] = {b0, b1, b2};
    return lex_product(outer, inner);
}

std::string kname(const char* kind, int t) { return std::string(kind) + std::to_string(t); }

}  // namespace

std::vector<FamilyInstance> codim2_digraph_families(int n) {
    if (n < 4) throw std::invalid_argument("codim2_digraph_families needs n >= 4");
    std::vector<FamilyInstance> out;
    const Digraph k1 = complete_digraph(1);
    if (n == 4)
        out.push_back({"D2[K1,P2,K1]", seed_blowup(2, k1, directed_path(2), k1)});
    for (int t = 1; t <= n - 2; ++t) {
        const Digraph kt = complete_digraph(t), ks = complete_digraph(n - t - 1);
        out.push_back({"D1[K1," + kname("K", t) + "," + kname("K", n - t - 1) + "]",
                       seed_blowup(1, k1, kt, ks)});
        out.push_back({"D2[K1," + kname("K", t) + "," + kname("K", n - t - 1) + "]",
                       seed_blowup(2, k1, kt, ks)});
        out.push_back({"D2[" + kname("K", t) + "," + kname("K", n - t - 1) + ",K1]",
                       seed_blowup(2, kt, ks, k1)});
    }
    out.push_back({"D2[K1," + kname("N", n - 2) + ",K1]",
                   seed_blowup(2, k1, null_digraph(n - 2), k1)});
    return out;
}

std::vector<FamilyInstance> codim2_graph_families(int n) {
    if (n < 4) throw std::invalid_argument("codim2_graph_families needs n >= 4");
    std::vector<FamilyInstance> out;
    for (int t = 1; t <= n - 2; ++t) {
        out.push_back({kname("N", t) + "+" + kname("N", n - t),
                       join(null_digraph(t), null_digraph(n - t))});
        out.push_back({kname("K", t) + "+" + kname("N", n - t),
                       join(complete_digraph(t), null_digraph(n - t))});
        out.push_back({kname("K", t) + "+(K1 u " + kname("K", n - t - 1) + ")",
                       join(complete_digraph(t),
                            disjoint_union(complete_digraph(1), complete_digraph(n - t - 1)))});
    }
    return out;
}

}  // namespace wdim
