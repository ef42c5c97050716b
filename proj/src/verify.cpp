#include "wdim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <tuple>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wdim/constructions.hpp"
#include "wdim/dimension.hpp"
#include "wdim/enumerate.hpp"
#include "wdim/products.hpp"
#include "wdim/symmetry.hpp"

namespace wdim {

namespace {

using Params = std::map<std::string, long long>;

struct ParamSpec {
    const char* key;
    long long def, lo, hi;
};

Params resolve_params(const std::string& id, const Params& given,
                      const std::vector<ParamSpec>& specs) {
    Params out;
    for (const auto& s : specs) out[s.key] = s.def;
    for (const auto& [key, value] : given) {
        const ParamSpec* spec = nullptr;
        for (const auto& s : specs)
            if (key == s.key) spec = &s;
        if (!spec)
            throw std::invalid_argument("check '" + id + "' does not accept parameter '" + key +
                                        "'");
        if (value < spec->lo || value > spec->hi)
            throw std::invalid_argument("parameter '" + key + "' of check '" + id +
                                        "' must be in [" + std::to_string(spec->lo) + ", " +
                                        std::to_string(spec->hi) + "]");
        out[key] = value;
    }
    return out;
}

struct Session {
    VerificationReport rep;
    bool partial = false;
    long long instances = 0;

    void fail(std::string fingerprint, const Digraph& g, std::string violation) {
        rep.counterexamples.push_back(
            Counterexample{std::move(fingerprint), g.arcs(), std::move(violation)});
    }
};

struct ClassEntry {
    Digraph g;
    std::string fp;
    int dim = 0;
};

std::string fpstr(const Digraph& g) { return canonical_form(g).to_string(); }

// All strongly connected isomorphism classes of one order with canonical
// fingerprints and dimensions, computed once per process.
const std::vector<ClassEntry>& classes_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<ClassEntry>> cache;
    std::scoped_lock lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Digraph> reps = sc_representatives(n);
    std::vector<ClassEntry> entries(reps.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
        Digraph g = reps[i];
        const int dim = weak_metric_dimension(g).dim;  // also fills g's distance cache
        std::string fp = fpstr(g);
        entries[i] = ClassEntry{std::move(g), std::move(fp), dim};
    }
    return cache.emplace(n, std::move(entries)).first->second;
}

std::string num(long long v) { return std::to_string(v); }

struct Named {
    std::string label;
    Digraph g;
};

// Every named construction with order at most max_order, used by the bound
// checks (the bounds are universal, so any instance mix is valid).
std::vector<Named> bound_family_instances(int max_order) {
    std::vector<Named> out;
    auto add = [&](std::string label, Digraph g) {
        if (g.order() <= max_order) out.push_back(Named{std::move(label), std::move(g)});
    };
    for (int n = 2; n <= max_order; ++n) add("K" + num(n), complete_digraph(n));
    for (int n = 2; n <= max_order; ++n) add("C" + num(n), directed_cycle(n));
    for (int n = 2; n <= max_order; ++n) add("upath" + num(n), undirected_path(n));
    for (int d = 2; d < max_order; ++d)
        for (int n = d + 1; n <= max_order; ++n)
            add("fan(" + num(n) + "," + num(d) + ")", fan_digraph(n, d));
    auto gamma_hi = [&](int d) { return d == 2 ? 18 : (d == 3 ? 12 : d * d + 1); };
    for (int d = 2; d <= 4; ++d)
        for (int n = d + 1; n <= std::min(max_order, gamma_hi(d)); ++n)
            add("gamma(" + num(n) + "," + num(d) + ")", gamma(n, d));
    for (int k = 1; k <= 2; ++k)
        for (int d = 1; d <= 4; ++d)
            if (sat_pow(d, 2 * k) + k <= max_order)
                add("gamma_bar(" + num(k) + "," + num(d) + ")", gamma_bar(k, d));
    for (int n = 2; n <= max_order; ++n) add("vt1(" + num(n) + ")", transitive_family(1, n));
    for (int n = 2; 2 * n <= max_order; ++n) add("vt2(" + num(n) + ")", transitive_family(2, n));
    for (int n = 3; 2 * n <= max_order; ++n) add("vt3(" + num(n) + ")", transitive_family(3, n));
    for (int n = 3; 4 * n <= max_order; ++n) add("vt4(" + num(n) + ")", transitive_family(4, n));
    for (int i = 0; i < 4; ++i)
        add("chordedC4[" + num(i) + "]", chorded_c4_family().member[i]);
    for (int i = 1; i <= 4; ++i) add("order3[" + num(i) + "]", one_dim_order3(i));
    for (int n = 4; n <= std::min(max_order, 7); ++n) {
        for (auto& inst : codim2_digraph_families(n)) add(inst.label, inst.digraph);
        for (auto& inst : codim2_graph_families(n)) add(inst.label, inst.digraph);
    }
    return out;
}

// The four vertex-transitive one-dimensional families, all members with order
// at most max_order.
std::vector<Named> vt_members(int max_order) {
    std::vector<Named> out;
    for (int n = 2; n <= max_order; ++n)
        out.push_back({"vt1(" + num(n) + ")", transitive_family(1, n)});
    for (int n = 2; 2 * n <= max_order; ++n)
        out.push_back({"vt2(" + num(n) + ")", transitive_family(2, n)});
    for (int n = 3; 2 * n <= max_order; ++n)
        out.push_back({"vt3(" + num(n) + ")", transitive_family(3, n)});
    for (int n = 3; 4 * n <= max_order; ++n)
        out.push_back({"vt4(" + num(n) + ")", transitive_family(4, n)});
    return out;
}

// nd / nkd: dimension and order bounds, exhaustively and on families.
void check_bounds(Session& s, const Params& p, bool order_side) {
    auto describe = [&](const DimBoundsReport& r) {
        if (order_side)
            return "order " + num(r.n) + " outside [k+d, d^2k+k] = [" + num(r.order_lower) + ", " +
                   num(r.order_upper) + "] at dim " + num(r.dim) + ", diameter " + num(r.diameter);
        return "dim " + num(r.dim) + " outside [f(n,d), n-d] = [" + num(r.dim_lower) + ", " +
               num(r.dim_upper) + "] at order " + num(r.n) + ", diameter " + num(r.diameter);
    };
    for (int n = 2; n <= p.at("max_order"); ++n)
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            DimBoundsReport r = check_dim_bounds(e.g);
            if (!(order_side ? r.order_ok : r.dim_ok)) s.fail(e.fp, e.g, describe(r));
        }
    for (const auto& inst : bound_family_instances(static_cast<int>(p.at("family_max_order")))) {
        ++s.instances;
        DimBoundsReport r = check_dim_bounds(inst.g);
        if (!(order_side ? r.order_ok : r.dim_ok)) s.fail(inst.label, inst.g, describe(r));
    }
}

// ag: arc-count bounds with both equality characterizations.
void check_ag(Session& s, const Params& p) {
    for (int n = 2; n <= p.at("max_order"); ++n) {
        const std::string cycle_fp = fpstr(directed_cycle(n));
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            ArcBoundsReport r = check_arc_bounds(e.g);
            if (!r.ok)
                s.fail(e.fp, e.g,
                       "arc count " + num(r.arcs) + " outside [" + num(r.lower) + ", " +
                           num(r.upper) + "] at dim " + num(r.dim) + ", diameter " +
                           num(r.diameter));
            if (r.lower_equality != (e.fp == cycle_fp))
                s.fail(e.fp, e.g,
                       r.lower_equality ? "meets the arc floor but is not the directed cycle"
                                        : "directed cycle misses the arc floor");
        }
    }
    auto expect_ceiling = [&](const std::string& label, const Digraph& g, int k, int d) {
        ++s.instances;
        ArcBoundsReport r = check_arc_bounds(g);
        if (r.dim != k || r.diameter != d)
            s.fail(label, g,
                   "expected dim " + num(k) + " and diameter " + num(d) + ", found dim " +
                       num(r.dim) + " and diameter " + num(r.diameter));
        else if (!r.upper_equality)
            s.fail(label, g,
                   "arc count " + num(r.arcs) + " misses the ceiling " + num(r.upper));
    };
    for (int d = 1; d <= 3; ++d)
        expect_ceiling("gamma(" + num(d * d + 1) + "," + num(d) + ")", gamma(d * d + 1, d), 1, d);
    for (int k = 1; k <= 3; ++k) expect_ceiling("K" + num(k + 1), complete_digraph(k + 1), k, 1);
    for (int k = 1; k <= 2; ++k)
        expect_ceiling("gamma_bar(" + num(k) + ",2)", gamma_bar(k, 2), k, 2);
}

// eg1: the fan digraph meets the dimension ceiling n - d at diameter d.
void check_eg1(Session& s, const Params& p) {
    const int max_n = static_cast<int>(p.at("max_order"));
    for (int d = 2; d < max_n; ++d)
        for (int n = d + 1; n <= max_n; ++n) {
            ++s.instances;
            Digraph g = fan_digraph(n, d);
            const int dim = weak_metric_dimension(g).dim;
            const int diam = g.distances().diameter();
            if (dim != n - d || diam != d)
                s.fail("fan(" + num(n) + "," + num(d) + ")", g,
                       "expected dim " + num(n - d) + " and diameter " + num(d) + ", found dim " +
                           num(dim) + " and diameter " + num(diam));
        }
}

// eg2: gamma meets the dimension floor; diameters as claimed.
void check_eg2(Session& s, const Params& p) {
    auto expect = [&](int n, int d, int want_dim, int want_diam) {
        ++s.instances;
        Digraph g = gamma(n, d);
        const int dim = weak_metric_dimension(g).dim;
        const int diam = g.distances().diameter();
        if (dim != want_dim || diam != want_diam)
            s.fail("gamma(" + num(n) + "," + num(d) + ")", g,
                   "expected dim " + num(want_dim) + " and diameter " + num(want_diam) +
                       ", found dim " + num(dim) + " and diameter " + num(diam));
        return diam;
    };
    for (int d = 2; d <= 4; ++d)
        for (int n = d + 1; n <= d * d + 1; ++n) expect(n, d, 1, d);
    long long diam3 = 0;  // how often the one-diameter-off variant would hold
    for (int n = 3; n <= p.at("n2_max"); ++n)
        if (expect(n, 2, dim_lower_bound(n, 2), 2) == 3) ++diam3;
    for (int n = 4; n <= p.at("n3_max"); ++n) expect(n, 3, dim_lower_bound(n, 3), 3);
    s.rep.stats["gamma_n2_with_diameter_3"] = diam3;
}

// ekd: tuple-to-tuple arc count of the full-range gamma equals the closed
// form.
void check_ekd(Session& s, const Params& p) {
    const long long max_size = p.at("max_size");
    for (int d = 1; static_cast<long long>(d) * d + 1 <= max_size; ++d)
        for (int k = 1; sat_pow(d, 2 * k) + k <= max_size; ++k) {
            ++s.instances;
            const int order = static_cast<int>(sat_pow(d, 2 * k) + k);
            Digraph g = gamma(order, d);
            long long f3 = 0;
            for (auto [u, v] : g.arcs())
                if (u >= k && v >= k) ++f3;
            if (f3 != e_count(k, d))
                s.fail("gamma(" + num(order) + "," + num(d) + ")", g,
                       "tuple-to-tuple arc count " + num(f3) + " != closed form " +
                           num(e_count(k, d)) + " at k=" + num(k) + ", d=" + num(d));
        }
}

// complete: dim = n - 1 exactly for the complete digraph.
void check_complete(Session& s, const Params& p) {
    const long long max_n = p.at("max_order");
    for (int n = 2; n <= max_n; ++n) {
        ++s.instances;
        Digraph g = complete_digraph(n);
        const int dim = weak_metric_dimension(g).dim;
        if (dim != n - 1)
            s.fail("K" + num(n), g, "complete digraph has dim " + num(dim) + ", not " + num(n - 1));
    }
    for (int n = 2; n <= std::min<long long>(max_n, kMaxExhaustiveOrder); ++n) {
        const std::string kfp = fpstr(complete_digraph(n));
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            if ((e.dim == n - 1) != (e.fp == kfp))
                s.fail(e.fp, e.g,
                       e.dim == n - 1 ? "dim n-1 digraph that is not complete"
                                      : "complete digraph misses dim n-1");
        }
    }
}

// fig1: the chorded 4-cycle fixtures.
void check_fig1(Session& s, const Params&) {
    const ChordedC4Family fam = chorded_c4_family();
    auto expect = [&](bool ok, int i, const std::string& what) {
        ++s.instances;
        if (!ok) s.fail("chordedC4[" + num(i) + "]", fam.member[i], what);
    };
    expect(is_isomorphic(fam.member[0], directed_cycle(4)).has_value(), 0,
           "member 0 is not the directed 4-cycle");
    const std::vector<int> zero{0};
    for (int i = 1; i <= 3; ++i) {
        const Digraph& g = fam.member[i];
        expect(weak_metric_dimension(g).dim == 1, i, "dimension is not 1");
        expect(check_weakly_resolving(g.distances(), zero).resolving, i, "{0} is not a basis");
        expect(g.distances().diameter() == 3, i, "diameter is not 3");
        expect(g.distances().girth() == 3, i, "girth is not 3");
    }
    expect(!is_isomorphic(fam.member[1], fam.member[3]).has_value(), 1,
           "members 1 and 3 are isomorphic");
    expect(has_directed_cycle(fam.member[1], 4), 1, "member 1 has no directed 4-cycle");
    expect(!has_directed_cycle(fam.member[3], 4), 3, "member 3 has a directed 4-cycle");
}

// All abelian-group Cayley digraph candidates of one order (both factor
// shapes), strongly connected ones only, deduplicated by fingerprint.
std::vector<Digraph> abelian_cayley_candidates(const std::vector<std::vector<int>>& factorings) {
    std::vector<Digraph> out;
    std::set<std::string> seen;
    for (const auto& factors : factorings) {
        std::vector<std::vector<int>> elements;
        std::vector<int> cur(factors.size(), 0);
        for (;;) {
            elements.push_back(cur);
            size_t i = 0;
            while (i < factors.size() && ++cur[i] == factors[i]) cur[i++] = 0;
            if (i == factors.size()) break;
        }
        elements.erase(elements.begin());  // drop the identity
        for (uint64_t pick = 1; pick < (uint64_t{1} << elements.size()); ++pick) {
            std::vector<std::vector<int>> gens;
            for (size_t i = 0; i < elements.size(); ++i)
                if ((pick >> i) & 1) gens.push_back(elements[i]);
            Digraph g = cayley(factors, gens);
            if (!is_strongly_connected(g)) continue;
            if (seen.insert(fpstr(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

// vt1dim: the vertex-transitive one-dimensional classification.
void check_vt1dim(Session& s, const Params& p) {
    const int family_max = static_cast<int>(p.at("family_max_order"));
    for (const auto& inst : vt_members(family_max)) {
        ++s.instances;
        const Digraph& g = inst.g;
        if (!is_vertex_transitive(g, g.order()))
            s.fail(inst.label, g, "family member is not vertex-transitive");
        if (weak_metric_dimension(g).dim != 1)
            s.fail(inst.label, g, "family member does not have dimension 1");
        if (!is_weakly_distance_regular(g).thin)
            s.fail(inst.label, g, "family member is not thin weakly distance-regular");
    }
    const long long max_order = p.at("max_order");
    for (int n = 2; n <= std::min<long long>(max_order, kMaxExhaustiveOrder); ++n) {
        std::set<std::string> family_fps;
        for (const auto& inst : vt_members(n))
            if (inst.g.order() == n) family_fps.insert(fpstr(inst.g));
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            const bool vt1 = e.dim == 1 && is_vertex_transitive(e.g);
            const bool in_family = family_fps.count(e.fp) > 0;
            if (vt1 && !in_family)
                s.fail(e.fp, e.g,
                       "vertex-transitive with dimension 1 but outside the classified families");
            if (!vt1 && in_family)
                s.fail(e.fp, e.g,
                       "classified family member without vertex-transitivity or dimension 1");
        }
    }
    if (max_order >= 6) {
        // Only Cayley digraphs of the abelian groups of order 6 are swept, so
        // the order-6 converse is not exhaustive.
        s.partial = true;
        std::set<std::string> family_fps;
        for (const auto& inst : vt_members(6))
            if (inst.g.order() == 6) family_fps.insert(fpstr(inst.g));
        long long dim1 = 0;
        std::vector<Digraph> candidates = abelian_cayley_candidates({{6}, {2, 3}});
        for (const Digraph& g : candidates) {
            ++s.instances;
            if (weak_metric_dimension(g).dim != 1) continue;
            ++dim1;
            if (!family_fps.count(fpstr(g)))
                s.fail(fpstr(g), g,
                       "order-6 abelian Cayley digraph with dimension 1 outside the classified "
                       "families");
        }
        s.rep.stats["order6_candidates"] = static_cast<long long>(candidates.size());
        s.rep.stats["order6_dim1_classes"] = dim1;
    }
}

// obs1: {x} weakly resolving iff every two-way class from x is a singleton.
void check_obs1(Session& s, const Params& p) {
    for (int n = 2; n <= p.at("max_order"); ++n)
        for (const auto& e : classes_of(n)) {
            const auto profiles = single_vertex_profiles(e.g);
            const auto& m = e.g.distances();
            for (int x = 0; x < n; ++x) {
                ++s.instances;
                const std::vector<int> set{x};
                const bool resolving = check_weakly_resolving(m, set).resolving;
                if (resolving != profiles[x].all_singleton)
                    s.fail(e.fp, e.g,
                           "vertex " + num(x) + ": singleton-class criterion " +
                               (profiles[x].all_singleton ? "holds" : "fails") +
                               " but {x} resolving = " + (resolving ? "true" : "false"));
            }
        }
}

// wdt_chain: vertex-transitive + dim 1 implies weakly distance-transitive
// implies weakly distance-regular.
void check_wdt_chain(Session& s, const Params& p) {
    for (int n = 2; n <= p.at("max_order"); ++n)
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            const bool wdt = is_weakly_distance_transitive(e.g);
            if (wdt && !is_weakly_distance_regular(e.g).regular)
                s.fail(e.fp, e.g, "weakly distance-transitive but not weakly distance-regular");
            if (e.dim == 1 && is_vertex_transitive(e.g) && !wdt)
                s.fail(e.fp, e.g,
                       "vertex-transitive with dimension 1 but not weakly distance-transitive");
        }
    for (const auto& inst : vt_members(static_cast<int>(p.at("family_max_order")))) {
        ++s.instances;
        if (!is_weakly_distance_transitive(inst.g, inst.g.order()))
            s.fail(inst.label, inst.g, "family member is not weakly distance-transitive");
        if (!is_weakly_distance_regular(inst.g).regular)
            s.fail(inst.label, inst.g, "family member is not weakly distance-regular");
    }
}

// type_bound: an arc of type (1,r) caps the dimension at n - r.
void check_type_bound_id(Session& s, const Params& p) {
    for (int n = 2; n <= p.at("max_order"); ++n)
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            TypeBoundReport r = check_type_bound(e.g);
            if (r.ok) continue;
            for (const auto& entry : r.entries)
                if (!entry.ok) {
                    s.fail(e.fp, e.g,
                           "arc (" + num(entry.arc.first) + "," + num(entry.arc.second) +
                               ") of type (1," + num(entry.r) + ") with dim " + num(r.dim) +
                               " > n-r = " + num(r.n - entry.r));
                    break;
                }
        }
}

// lem12: dim = n-2 forces every arc type into {(1,1), (1,2)}.
void check_lem12(Session& s, const Params& p) {
    for (int n = 3; n <= p.at("max_order"); ++n)
        for (const auto& e : classes_of(n)) {
            if (e.dim != n - 2) continue;
            ++s.instances;
            TypeBoundReport r = check_type_bound(e.g);
            if (r.codim2_types_ok) continue;
            for (const auto& entry : r.entries)
                if (entry.r > 2) {
                    s.fail(e.fp, e.g,
                           "dim n-2 digraph with arc (" + num(entry.arc.first) + "," +
                               num(entry.arc.second) + ") of type (1," + num(entry.r) + ")");
                    break;
                }
        }
}

// gik: dim(G_i[K_1, K_t, K_s]) = s + t - 1.
void check_gik(Session& s, const Params& p) {
    const int t_max = static_cast<int>(p.at("t_max"));
    for (int i = 1; i <= 2; ++i)
        for (int t = 1; t <= t_max; ++t)
            for (int u = 1; u <= t_max; ++u) {
                ++s.instances;
                const std::vector<Digraph> blocks{complete_digraph(1), complete_digraph(t),
                                                  complete_digraph(u)};
                Digraph g = lex_product(one_dim_order3(i), blocks);
                const int dim = weak_metric_dimension(g).dim;
                if (dim != u + t - 1)
                    s.fail("D" + num(i) + "[K1,K" + num(t) + ",K" + num(u) + "]", g,
                           "dim " + num(dim) + " != s+t-1 = " + num(u + t - 1));
            }
}

// n2main / graph_n2: the codimension-2 classifications as fingerprint-set
// equalities.
void check_codim2(Session& s, const Params& p, bool graphs) {
    for (int n = 4; n <= p.at("max_order"); ++n) {
        std::map<std::string, const ClassEntry*> lhs;
        for (const auto& e : classes_of(n)) {
            ++s.instances;
            if (e.dim == n - 2 && is_undirected_graph(e.g) == graphs) lhs.emplace(e.fp, &e);
        }
        std::map<std::string, FamilyInstance> rhs;
        for (auto& inst : graphs ? codim2_graph_families(n) : codim2_digraph_families(n))
            rhs.emplace(fpstr(inst.digraph), inst);
        const char* side = graphs ? "graph" : "non-graph";
        for (const auto& [fp, e] : lhs)
            if (!rhs.count(fp))
                s.fail(fp, e->g,
                       std::string("dim n-2 ") + side + " class at n=" + num(n) +
                           " missing from the classification");
        for (const auto& [fp, inst] : rhs)
            if (!lhs.count(fp))
                s.fail(fp, inst.digraph,
                       "classified family " + inst.label + " is not a dim n-2 " + side +
                           " class at n=" + num(n));
    }
}

// embed: every digraph embeds into gamma_bar(dim, diameter).
void check_embed(Session& s, const Params& p) {
    auto run_one = [&](const std::string& label, const Digraph& g) {
        ++s.instances;
        const DimensionResult r = weak_metric_dimension(g);
        const EmbedResult er = embed_into_gamma_bar(g, r.basis);
        if (er.ok) return;
        std::string what =
            er.failed_arc.first >= 0
                ? "arc (" + num(er.failed_arc.first) + "," + num(er.failed_arc.second) +
                      ") has no image arc in gamma_bar(" + num(er.k) + "," + num(er.d) + ")"
                : "embedding into gamma_bar(" + num(er.k) + "," + num(er.d) + ") failed";
        s.fail(label, g, std::move(what));
    };
    run_one("chordedC4[1]", chorded_c4_family().member[1]);
    run_one("C5", directed_cycle(5));
    run_one("gamma(5,2)", gamma(5, 2));
    std::mt19937_64 rng(static_cast<uint64_t>(p.at("seed")));
    const long long samples = p.at("samples");
    const uint64_t span = static_cast<uint64_t>(p.at("max_rand_order")) - 1;
    for (long long produced = 0; produced < samples;) {
        const int n = 2 + static_cast<int>(rng() % span);
        const int bits = n * (n - 1);
        const uint64_t mask = rng() & ((uint64_t{1} << bits) - 1);
        Digraph g = digraph_from_arc_mask(n, mask);
        if (!is_strongly_connected(g)) continue;
        ++produced;
        run_one("random#" + num(produced) + "(n=" + num(n) + ")", g);
    }
}

struct CheckDef {
    std::vector<ParamSpec> specs;
    std::function<void(Session&, const Params&)> run;
};

const std::vector<std::pair<std::string, CheckDef>>& registry() {
    static const std::vector<std::pair<std::string, CheckDef>> defs = [] {
        std::vector<std::pair<std::string, CheckDef>> v;
        const ParamSpec exh{"max_order", 5, 2, 5};
        const ParamSpec fam17{"family_max_order", 17, 2, 18};
        const ParamSpec fam12{"family_max_order", 12, 2, 16};
        v.push_back({"nd", {{exh, fam17},
                            [](Session& s, const Params& p) { check_bounds(s, p, false); }}});
        v.push_back({"nkd", {{exh, fam17},
                             [](Session& s, const Params& p) { check_bounds(s, p, true); }}});
        v.push_back({"ag", {{exh}, check_ag}});
        v.push_back({"eg1", {{{"max_order", 9, 3, 12}}, check_eg1}});
        v.push_back({"eg2", {{{"n2_max", 18, 3, 30}, {"n3_max", 12, 4, 20}}, check_eg2}});
        v.push_back({"ekd", {{{"max_size", 100, 2, 200}}, check_ekd}});
        v.push_back({"complete", {{{"max_order", 6, 2, 8}}, check_complete}});
        v.push_back({"fig1", {{}, check_fig1}});
        v.push_back({"vt1dim", {{{"max_order", 5, 2, 6}, fam12}, check_vt1dim}});
        v.push_back({"obs1", {{exh}, check_obs1}});
        v.push_back({"wdt_chain", {{exh, fam12}, check_wdt_chain}});
        v.push_back({"type_bound", {{{"max_order", 4, 2, 5}}, check_type_bound_id}});
        v.push_back({"lem12", {{{"max_order", 4, 3, 5}}, check_lem12}});
        v.push_back({"gik", {{{"t_max", 3, 1, 4}}, check_gik}});
        v.push_back({"n2main", {{{"max_order", 5, 4, 5}},
                                [](Session& s, const Params& p) { check_codim2(s, p, false); }}});
        v.push_back({"graph_n2", {{{"max_order", 5, 4, 5}},
                                  [](Session& s, const Params& p) { check_codim2(s, p, true); }}});
        v.push_back({"embed", {{{"samples", 50, 0, 500},
                                {"seed", 1, 0, 1LL << 31},
                                {"max_rand_order", 6, 2, 6}},
                               check_embed}});
        return v;
    }();
    return defs;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, def] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::map<std::string, long long> default_params(const std::string& theorem_id) {
    for (const auto& [id, def] : registry())
        if (id == theorem_id) return resolve_params(theorem_id, {}, def.specs);
    throw std::invalid_argument("unknown check id '" + theorem_id + "'");
}

VerificationReport verify(const std::string& theorem_id,
                          const std::map<std::string, long long>& params) {
    const CheckDef* def = nullptr;
    for (const auto& [id, d] : registry())
        if (id == theorem_id) def = &d;
    if (!def) throw std::invalid_argument("unknown check id '" + theorem_id + "'");

    Session s;
    s.rep.theorem = theorem_id;
    s.rep.params = resolve_params(theorem_id, params, def->specs);

    const auto t0 = std::chrono::steady_clock::now();
    def->run(s, s.rep.params);
    const auto t1 = std::chrono::steady_clock::now();

    std::sort(s.rep.counterexamples.begin(), s.rep.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::tie(a.fingerprint, a.violation) <
                         std::tie(b.fingerprint, b.violation);
              });
    s.rep.stats["instances"] = s.instances;
    s.rep.verdict = !s.rep.counterexamples.empty() ? "counterexample"
                    : s.partial                    ? "partially-checked"
                                                   : "verified";
    s.rep.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return s.rep;
}

}  // namespace wdim
