#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "support/oracles.hpp"
#include "wdim/constructions.hpp"
#include "wdim/dimension.hpp"
#include "wdim/enumerate.hpp"
#include "wdim/symmetry.hpp"

using namespace wdim;
using wdim::testing::random_permutation;
using wdim::testing::random_sc_digraph;
using wdim::testing::relabel;

TEST_CASE("arc bit indexing and masks") {
    CHECK(arc_bit_index(3, 0, 1) == 0);
    CHECK(arc_bit_index(3, 0, 2) == 1);
    CHECK(arc_bit_index(3, 1, 0) == 2);
    CHECK(arc_bit_index(3, 1, 2) == 3);
    CHECK(arc_bit_index(3, 2, 0) == 4);
    CHECK(arc_bit_index(3, 2, 1) == 5);

    std::mt19937_64 rng(5);
    for (int n = 2; n <= 6; ++n) {
        const Digraph g = *random_sc_digraph(rng, n);
        CHECK(digraph_from_arc_mask(n, arc_mask_of(g)).arcs() == g.arcs());
    }
    CHECK_THROWS_AS(arc_mask_of(complete_digraph(9)), std::invalid_argument);
    CHECK_THROWS_AS(digraph_from_arc_mask(9, 0), std::invalid_argument);
}

TEST_CASE("canonical fingerprints are relabeling invariants") {
    std::mt19937_64 rng(13);
    for (const Digraph& g : {directed_cycle(5), gamma(5, 2),
                             chorded_c4_family().member[1], transitive_family(2, 3)}) {
        const auto fp = canonical_form(g);
        for (int trial = 0; trial < 5; ++trial) {
            const auto p = random_permutation(rng, g.order());
            CHECK(canonical_form(relabel(g, p)) == fp);
        }
    }
    // Orders 9 and 10 exercise the wide-mask path.
    for (int n : {9, 10}) {
        const Digraph c = directed_cycle(n);
        const auto p = random_permutation(rng, n);
        CHECK(canonical_form(relabel(c, p)) == canonical_form(c));
    }
    CHECK_THROWS_AS(canonical_form(directed_cycle(11)), std::invalid_argument);
}

TEST_CASE("fingerprint format and ordering") {
    const auto fp = canonical_form(directed_cycle(4));
    CHECK(fp.to_string().substr(0, 5) == "n4-0x");
    CHECK(canonical_form(directed_cycle(3)) < fp);  // smaller order sorts first
    std::set<Fingerprint> order3;
    for (const auto& g : sc_representatives(3)) order3.insert(canonical_form(g));
    CHECK(order3.size() == 5);
}

TEST_CASE("isomorphism witnesses") {
    const auto fam = chorded_c4_family();
    CHECK(!is_isomorphic(fam.member[1], fam.member[3]).has_value());
    CHECK(canonical_form(fam.member[1]) != canonical_form(fam.member[3]));

    // Pinned relabeling of the first order-3 seed.
    const Digraph h(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
    const auto w = is_isomorphic(h, one_dim_order3(1));
    REQUIRE(w.has_value());
    CHECK(relabel(h, *w).arcs() == one_dim_order3(1).arcs());

    std::mt19937_64 rng(17);
    for (int n = 2; n <= 6; ++n) {
        const Digraph g = *random_sc_digraph(rng, n);
        const Digraph shuffled = relabel(g, random_permutation(rng, n));
        const auto witness = is_isomorphic(g, shuffled);
        REQUIRE(witness.has_value());
        CHECK(relabel(g, *witness).arcs() == shuffled.arcs());
        // Equal fingerprints exactly when isomorphic.
        CHECK(canonical_form(g) == canonical_form(shuffled));
    }
    CHECK(!is_isomorphic(directed_cycle(3), complete_digraph(3)).has_value());
    CHECK(!is_isomorphic(directed_cycle(3), directed_cycle(4)).has_value());
}

TEST_CASE("automorphism groups") {
    for (int n = 3; n <= 7; ++n)
        CHECK(automorphisms(directed_cycle(n)).size() == static_cast<size_t>(n));
    const auto only_id = automorphisms(one_dim_order3(1));
    REQUIRE(only_id.size() == 1);
    CHECK(only_id[0] == VertexPermutation{0, 1, 2});
    CHECK(automorphisms(complete_digraph(3)).size() == 6);

    // Closure under composition and inverse.
    const auto auts = automorphisms(gamma(5, 2));
    std::set<VertexPermutation> group(auts.begin(), auts.end());
    for (const auto& a : auts) {
        VertexPermutation inv(a.size());
        for (size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<int>(i);
        CHECK(group.count(inv) == 1);
        for (const auto& b : auts) {
            VertexPermutation ab(a.size());
            for (size_t i = 0; i < a.size(); ++i) ab[i] = a[b[i]];
            CHECK(group.count(ab) == 1);
        }
    }
    CHECK_THROWS_AS(automorphisms(directed_cycle(11)), std::invalid_argument);
}

TEST_CASE("vertex transitivity") {
    for (int n = 2; n <= 6; ++n) CHECK(is_vertex_transitive(directed_cycle(n)));
    CHECK(is_vertex_transitive(transitive_family(2, 3)));
    CHECK(is_vertex_transitive(transitive_family(3, 3)));
    CHECK(is_vertex_transitive(cayley({2, 4}, {{1, 0}, {0, 1}, {0, 2}})));
    CHECK(!is_vertex_transitive(one_dim_order3(1)));
    CHECK(!is_vertex_transitive(gamma(5, 2)));
}

TEST_CASE("single-vertex profiles") {
    for (const auto& p : single_vertex_profiles(directed_cycle(5))) CHECK(p.all_singleton);
    for (const auto& p : single_vertex_profiles(complete_digraph(3))) CHECK(!p.all_singleton);

    const auto profiles = single_vertex_profiles(chorded_c4_family().member[1]);
    CHECK(profiles[0].all_singleton);

    // Classes partition the vertex set and (0,0) holds only the base vertex.
    for (const auto& p : single_vertex_profiles(gamma(5, 2))) {
        int total = 0;
        for (const auto& [key, members] : p.classes) {
            total += static_cast<int>(members.size());
            if (key == std::pair<int, int>{0, 0})
                CHECK(members == std::vector<int>{p.vertex});
        }
        CHECK(total == 5);
    }

    // A singleton profile at some vertex is the same thing as dimension 1.
    for (const auto& g : sc_representatives(4)) {
        bool flagged = false;
        for (const auto& p : single_vertex_profiles(g)) flagged = flagged || p.all_singleton;
        CHECK(flagged == (weak_metric_dimension(g).dim == 1));
    }
}

TEST_CASE("weak distance regularity") {
    for (int n = 3; n <= 8; ++n) {
        const auto r = is_weakly_distance_regular(directed_cycle(n));
        CHECK(r.regular);
        CHECK(r.thin);
        CHECK(!r.violation.has_value());
    }
    for (int which = 1; which <= 4; ++which) {
        const auto r = is_weakly_distance_regular(transitive_family(which, 3));
        CHECK(r.regular);
        CHECK(r.thin);
    }
    const auto k3 = is_weakly_distance_regular(complete_digraph(3));
    CHECK(k3.regular);
    CHECK(!k3.thin);  // class (1,1) has two members

    const auto g52 = is_weakly_distance_regular(gamma(5, 2));
    CHECK(!g52.thin);
    if (!g52.regular) {
        REQUIRE(g52.violation.has_value());
        CHECK(g52.violation->first_count != g52.violation->second_count);
    }
}

TEST_CASE("weak distance transitivity") {
    for (int n = 3; n <= 8; ++n) CHECK(is_weakly_distance_transitive(directed_cycle(n)));
    CHECK(is_weakly_distance_transitive(transitive_family(2, 2)));
    // Transitive implies regular.
    for (const auto& g : sc_representatives(4))
        if (is_weakly_distance_transitive(g))
            CHECK(is_weakly_distance_regular(g).regular);
}

TEST_CASE("embedding into the extremal digraph") {
    const Digraph g1 = chorded_c4_family().member[1];
    const auto e1 = embed_into_gamma_bar(g1, {0});
    CHECK(e1.ok);
    CHECK(e1.k == 1);
    CHECK(e1.d == 3);
    CHECK(e1.image[0] == 0);  // basis vertex lands on the hub
    std::vector<int> sorted = e1.image;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    const auto e2 = embed_into_gamma_bar(directed_cycle(5), {0});
    CHECK(e2.ok);
    CHECK(e2.k == 1);
    CHECK(e2.d == 4);

    // The extremal digraph embeds into itself by the identity.
    const auto self = embed_into_gamma_bar(gamma(5, 2), {0});
    CHECK(self.ok);
    CHECK(self.image == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(embed_into_gamma_bar(complete_digraph(3), {0}),
                    std::invalid_argument);  // {0} does not resolve K3
    CHECK_THROWS_AS(embed_into_gamma_bar(g1, {}), std::invalid_argument);
}

TEST_CASE("embedding random digraphs on computed bases") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Digraph g = *random_sc_digraph(rng, n);
        const auto basis = weak_metric_dimension(g).basis;
        const auto e = embed_into_gamma_bar(g, basis);
        CHECK(e.ok);
    }
}
