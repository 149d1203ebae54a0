// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "catalog.hpp"
#include "topology.hpp"

using namespace fcspec;

namespace {

FiniteSpace sierpinski() {
    // hand-built two-point space with closed sets {}, {0}, {0,1}
    FiniteSpace sp;
    sp.kind = SpaceKind::all_submodules;
    sp.point_count = 2;
    Bitset empty(2), lower(2), full(2);
    lower.set(0);
    full.set();
    sp.closed = {empty, lower, full};
    for (std::uint32_t c = 0; c < sp.closed.size(); ++c) sp.closed_lookup[sp.closed[c]] = c;
    for (const auto& c : sp.closed) sp.open.push_back(~c);
    sp.axioms_ok = true;
    sp.is_top_fc = true;
    return sp;
}

Bitset points_bits(std::uint32_t n, std::initializer_list<std::uint32_t> xs) {
    Bitset b(n);
    for (auto x : xs) b.set(x);
    return b;
}

}  // namespace

TEST_CASE("frozen spaces on the catalog") {
    const ModuleAnalysis z4 = analyze(catalog_module("Z4"));
    const FiniteSpace sp4 = build_space(z4, SpaceKind::all_submodules);
    CHECK(sp4.point_count == 1);
    CHECK(sp4.closed.size() == 2);
    CHECK(sp4.axioms_ok);
    CHECK(sp4.is_top_fc);

    const ModuleAnalysis z23 = analyze(catalog_module("Z2xZ3"));
    const FiniteSpace sp23 = build_space(z23, SpaceKind::all_submodules);
    CHECK(sp23.point_count == 2);
    CHECK(sp23.closed.size() == 4);

    const ModuleAnalysis v4 = analyze(catalog_module("V4overF2"));
    const FiniteSpace spv4 = build_space(v4, SpaceKind::fully_invariant);
    CHECK(spv4.point_count == 1);
    CHECK(spv4.closed.size() == 2);
    // same family from all submodules: varieties of the lines are empty
    const FiniteSpace spv4_all = build_space(v4, SpaceKind::all_submodules);
    CHECK(spv4_all.closed == spv4.closed);
}

TEST_CASE("the two generating families give the same closed sets") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const ModuleAnalysis a = analyze(catalog_module(name));
        const FiniteSpace fi = build_space(a, SpaceKind::fully_invariant);
        const FiniteSpace all = build_space(a, SpaceKind::all_submodules);
        CHECK(fi.closed == all.closed);
        CHECK(fi.axioms_ok);
        CHECK(all.axioms_ok);
    }
}

TEST_CASE("closure agrees with the family route and obeys the closure laws") {
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        const FiniteSpace sp = build_space(a, SpaceKind::all_submodules);
        const std::uint32_t np = sp.point_count;
        for (std::uint64_t mask = 0; mask < (1ull << np); ++mask) {
            Bitset s(np);
            for (std::uint32_t p = 0; p < np; ++p)
                if (mask & (1ull << p)) s.set(p);
            const Bitset cl = closure_of(a, sp, s);
            CHECK(s.is_subset_of(cl));                 // extensive
            CHECK(closure_of(a, sp, cl) == cl);        // idempotent
            for (std::uint64_t sub = mask; ; sub = (sub - 1) & mask) {
                Bitset t(np);
                for (std::uint32_t p = 0; p < np; ++p)
                    if (sub & (1ull << p)) t.set(p);
                CHECK(closure_of(a, sp, t).is_subset_of(cl));  // monotone
                if (sub == 0) break;
            }
        }
    }
}

TEST_CASE("closure of the empty set and of everything") {
    const ModuleAnalysis a = analyze(catalog_module("Z2xZ3"));
    const FiniteSpace sp = build_space(a, SpaceKind::all_submodules);
    CHECK(closure_of(a, sp, Bitset(2)).none());
    Bitset all(2);
    all.set();
    CHECK(closure_of(a, sp, all) == all);
    CHECK(closure_of(a, sp, points_bits(2, {0})) == points_bits(2, {0}));
}

TEST_CASE("separation records") {
    const ModuleAnalysis z23 = analyze(catalog_module("Z2xZ3"));
    const auto sep = separation(build_space(z23, SpaceKind::all_submodules));
    CHECK(sep.t0);
    CHECK(sep.t1);
    CHECK(sep.t2);
    CHECK(sep.discrete);

    const auto sp = sierpinski();
    const auto s2 = separation(sp);
    CHECK(s2.t0);
    CHECK(!s2.t1);
    CHECK(!s2.t2);
    CHECK(!s2.discrete);

    // T0 always holds on spectrum spaces
    for (const auto& name : catalog_names())
        CHECK(separation(build_space(analyze(catalog_module(name)), SpaceKind::all_submodules)).t0);
}

TEST_CASE("connectivity records") {
    const auto one_point = build_space(analyze(catalog_module("Z4")), SpaceKind::all_submodules);
    const auto c1 = connectivity(one_point);
    CHECK(c1.connected == Tri::yes);
    CHECK(c1.irreducible == Tri::yes);
    CHECK(c1.ultraconnected == Tri::yes);

    const auto discrete2 = build_space(analyze(catalog_module("Z2xZ3")), SpaceKind::all_submodules);
    const auto c2 = connectivity(discrete2);
    CHECK(c2.connected == Tri::no);
    CHECK(c2.irreducible == Tri::no);
    CHECK(c2.ultraconnected == Tri::no);

    FiniteSpace empty;
    empty.point_count = 0;
    const auto c3 = connectivity(empty);
    CHECK(c3.connected == Tri::vacuous);
    CHECK(c3.irreducible == Tri::vacuous);
    CHECK(c3.ultraconnected == Tri::vacuous);
}

TEST_CASE("irreducible subsets match full coprimality of their sum on duo modules") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const ModuleAnalysis a = analyze(catalog_module(name));
        if (!a.preds.duo) continue;
        const auto rep = irreducible_subsets(a, build_space(a, SpaceKind::all_submodules));
        CHECK(rep.exhaustive);
        CHECK(rep.mismatches.empty());
    }
}

TEST_CASE("singletons and chains are irreducible") {
    const ModuleAnalysis a = analyze(catalog_module("Z2xZ3"));
    const FiniteSpace sp = build_space(a, SpaceKind::all_submodules);
    CHECK(subspace_irreducible(sp, points_bits(2, {0})));
    CHECK(subspace_irreducible(sp, points_bits(2, {1})));
    CHECK(!subspace_irreducible(sp, points_bits(2, {0, 1})));  // two incomparable points
    CHECK(!subspace_irreducible(sp, Bitset(2)));               // empty set excluded
}

TEST_CASE("generic points, components and soberness") {
    const ModuleAnalysis z23 = analyze(catalog_module("Z2xZ3"));
    const auto rep = generic_points_and_sober(z23, build_space(z23, SpaceKind::all_submodules));
    CHECK(rep.sober);
    CHECK(rep.components.size() == 2);
    for (const auto& [closed_idx, generics] : rep.generic_points) {
        (void)closed_idx;
        CHECK(generics.size() == 1);
    }

    const ModuleAnalysis z4 = analyze(catalog_module("Z4"));
    const auto rep4 = generic_points_and_sober(z4, build_space(z4, SpaceKind::all_submodules));
    CHECK(rep4.sober);
    CHECK(rep4.components.size() == 1);
}

TEST_CASE("specialization order is submodule containment") {
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        const FiniteSpace sp = build_space(a, SpaceKind::all_submodules);
        for (std::uint32_t p = 0; p < sp.point_count; ++p) {
            Bitset single(sp.point_count);
            single.set(p);
            const Bitset cl = closure_of(a, sp, single);
            for (std::uint32_t q = 0; q < sp.point_count; ++q)
                CHECK(cl.test(q) == a.lattice.leq(a.points[q], a.points[p]));
        }
    }
}

TEST_CASE("chain conditions and the coradical bijection") {
    const ModuleAnalysis z4 = analyze(catalog_module("Z4"));
    const auto rep = chain_conditions(z4, build_space(z4, SpaceKind::all_submodules));
    CHECK(rep.noetherian);
    CHECK(rep.artinian);
    CHECK(rep.coradicals.size() == 2);
    CHECK(rep.bijection_ok);

    const ModuleAnalysis z23 = analyze(catalog_module("Z2xZ3"));
    const auto rep23 = chain_conditions(z23, build_space(z23, SpaceKind::all_submodules));
    CHECK(rep23.coradicals.size() == 4);
    CHECK(rep23.bijection_ok);

    // round trip: Corad(H(V(L))) = Corad(L) for every submodule
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        for (std::uint32_t L = 0; L < a.lattice.size(); ++L)
            CHECK(a.sum_of_points(a.v_fc(L)) == a.corad(L));
    }
}

TEST_CASE("comparability of connected subsets") {
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        const auto rep = connected_comparability(a, build_space(a, SpaceKind::all_submodules));
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("local finiteness with the proof-shaped witnesses") {
    const ModuleAnalysis z23 = analyze(catalog_module("Z2xZ3"));
    const FiniteSpace sp = build_space(z23, SpaceKind::all_submodules);
    // the collection of all simples (they are points here)
    std::vector<std::uint32_t> collection;
    for (auto s : z23.simples) collection.push_back(z23.point_pos[s]);
    const auto rep = locally_finite(z23, sp, collection);
    CHECK(rep.locally_finite);
    CHECK(rep.witnesses_ok);
    // the empty and singleton collections are trivially locally finite
    CHECK(locally_finite(z23, sp, {}).locally_finite);
    CHECK(locally_finite(z23, sp, {collection[0]}).locally_finite);
}

TEST_CASE("compactness with witness subcovers") {
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        const auto rec = compactness(build_space(a, SpaceKind::all_submodules));
        CHECK(rec.compact);
        CHECK(rec.countably_compact);
        if (a.points.empty())
            CHECK(rec.witness_subcover_size == 0);
        else
            CHECK(rec.witness_subcover_size >= 1);
    }
}

TEST_CASE("empty and all-point varieties behave under the stated hypotheses") {
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        if (a.preds.self_injective && a.preds.duo) {
            // an empty basic open set forces the socle under L
            for (std::uint32_t L = 0; L < a.lattice.size(); ++L) {
                const Bitset open_part = ~a.v_fc(L);
                if (open_part.none())
                    CHECK(a.lattice.leq(a.socle, L));
            }
        }
        if (a.preds.s_iad) {
            for (std::uint32_t L = 0; L < a.lattice.size(); ++L)
                CHECK((a.v_fc(L).none()) == (L == a.lattice.zero_index));
        }
    }
}

TEST_CASE("export edges are covering relations") {
    const ModuleAnalysis z23 = analyze(catalog_module("Z2xZ3"));
    CHECK(specialization_cover_edges(z23).empty());
    const ModuleAnalysis z4 = analyze(catalog_module("Z4"));
    CHECK(specialization_cover_edges(z4).empty());
}

TEST_CASE("homeomorphism induced by an explicit isomorphism") {
    // Z6 and Z6scrambled with the explicit residue map
    const FiniteModule z6 = catalog_module("Z6");
    const FiniteModule z6s = catalog_module("Z6scrambled");
    ModuleIso theta;
    theta.map.resize(6);
    for (std::uint32_t x = 0; x < 6; ++x)
        theta.map[x] = z6s.encode({static_cast<int>(x % 3), static_cast<int>(x % 2)});
    REQUIRE(validate_isomorphism(z6, z6s, theta));
    const auto rep = check_homeomorphism(analyze(z6), analyze(z6s), theta);
    CHECK(rep.spectrum_bijection);
    CHECK(rep.closed_sets_match);
    CHECK(rep.corad_matches);
    CHECK(rep.property_records_match);
    CHECK(rep.ok());
}

TEST_CASE("scrambled copies of every catalog module are homeomorphic") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const FiniteModule m = catalog_module(name);
        const auto [n, theta] = make_scrambled_copy(m, 0x5cab1edull);
        REQUIRE(validate_isomorphism(m, n, theta));
        const auto rep = check_homeomorphism(analyze(m), analyze(n), theta);
        CHECK(rep.ok());
    }
}
