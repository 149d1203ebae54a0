// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
//
// Property-style checks over the catalog plus a deterministic stream of
// random modules.
#include <doctest.h>

#include "catalog.hpp"
#include "oracles.hpp"
#include "verifier.hpp"

using namespace fcspec;

namespace {

std::vector<FiniteModule> sample_modules() {
    std::vector<FiniteModule> out;
    for (const auto& name : catalog_names()) out.push_back(catalog_module(name));
    FuzzConfig cfg;
    cfg.seed = 99;
    cfg.count = 15;
    cfg.max_size = 24;
    for (auto& m : generate_random_modules(cfg)) out.push_back(std::move(m));
    return out;
}

}  // namespace

TEST_CASE("encode and decode are mutually inverse") {
    for (const auto& m : sample_modules()) {
        for (std::uint32_t x = 0; x < m.size(); ++x) CHECK(m.encode(m.decode(x)) == x);
        const auto& r = m.ring();
        for (std::uint32_t x = 0; x < r.size(); ++x) CHECK(r.encode(r.decode(x)) == x);
    }
}

TEST_CASE("lattice enumeration agrees with the power-set oracle") {
    for (const auto& m : sample_modules()) {
        CAPTURE(m.name());
        const auto lat = enumerate_submodules(m);
        const auto expected = oracle::submodules(m);
        REQUIRE(lat.size() == expected.size());
        for (std::uint32_t i = 0; i < lat.size(); ++i) CHECK(lat.all[i].members == expected[i]);
    }
}

TEST_CASE("Galois and variety laws hold on random modules") {
    for (const auto& m : sample_modules()) {
        CAPTURE(m.name());
        const ModuleAnalysis a = analyze(m);

        // Galois: L within Ke(An(L)); An antitone
        for (std::uint32_t i = 0; i < a.lattice.size(); ++i) {
            CHECK(a.sub(i).members.is_subset_of(kernel_intersection(a.S, a.an[i])));
            for (std::uint32_t j = 0; j < a.lattice.size(); ++j)
                if (a.lattice.leq(i, j)) CHECK(a.an[j].is_subset_of(a.an[i]));
        }

        // odot: monotone in the second argument, X+Y below X (.) Y
        for (std::size_t x = 0; x < a.fi.size(); ++x)
            for (std::size_t y = 0; y < a.fi.size(); ++y) {
                const Bitset sum =
                    submodule_join(m, a.sub(a.fi[x]).members, a.sub(a.fi[y]).members);
                CHECK(sum.is_subset_of(a.sub(a.odot_fi[x][y]).members));
                for (std::size_t y2 = 0; y2 < a.fi.size(); ++y2)
                    if (a.lattice.leq(a.fi[y], a.fi[y2]))
                        CHECK(a.lattice.leq(a.odot_fi[x][y], a.odot_fi[x][y2]));
            }

        // coradical: idempotent and monotone
        for (std::uint32_t L = 0; L < a.lattice.size(); ++L) {
            CHECK(a.corad(a.corad(L)) == a.corad(L));
            for (std::uint32_t K = 0; K < a.lattice.size(); ++K)
                if (a.lattice.leq(L, K)) CHECK(a.lattice.leq(a.corad(L), a.corad(K)));
        }
    }
}

TEST_CASE("self-injectivity implies intrinsic injectivity") {
    for (const auto& m : sample_modules()) {
        CAPTURE(m.name());
        const ModuleAnalysis a = analyze(m);
        if (a.preds.self_injective) CHECK(a.preds.intrinsically_injective);
        if (a.preds.self_injective && a.preds.duo) CHECK(a.preds.min_property);
        if (a.preds.b_coprime) CHECK(a.preds.fully_coprime_module);
    }
}

TEST_CASE("simple fully invariant submodules are points of self-injective modules") {
    for (const auto& m : sample_modules()) {
        CAPTURE(m.name());
        const ModuleAnalysis a = analyze(m);
        if (!a.preds.self_injective) continue;
        for (auto s : a.fi_simples) CHECK(a.is_point(s));
    }
}
