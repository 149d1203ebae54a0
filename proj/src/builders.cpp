// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "builders.hpp"

#include "endo.hpp"

namespace fcspec {

FiniteRing make_zn_ring(int n, const Bounds& bounds) {
    if (n < 2) throw ValidationError("Zn ring needs n >= 2");
    std::vector<std::vector<std::vector<int>>> mul(1, {{1 % n}});
    return FiniteRing::make({n}, std::move(mul), {1 % n}, bounds);
}

FiniteRing make_product_ring(const std::vector<FiniteRing>& factors, const Bounds& bounds) {
    if (factors.empty()) throw ValidationError("product ring needs at least one factor");
    std::vector<int> orders;
    std::vector<int> one;
    std::vector<std::size_t> offset;
    for (const auto& f : factors) {
        offset.push_back(orders.size());
        orders.insert(orders.end(), f.additive_orders().begin(), f.additive_orders().end());
        one.insert(one.end(), f.one_coefficients().begin(), f.one_coefficients().end());
    }
    const std::size_t k = orders.size();
    std::vector<std::vector<std::vector<int>>> mul(
        k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    for (std::size_t p = 0; p < factors.size(); ++p) {
        const auto& fm = factors[p].mul_table();
        const auto kp = fm.size();
        for (std::size_t i = 0; i < kp; ++i)
            for (std::size_t j = 0; j < kp; ++j)
                for (std::size_t t = 0; t < kp; ++t)
                    mul[offset[p] + i][offset[p] + j][offset[p] + t] = fm[i][j][t];
    }
    return FiniteRing::make(std::move(orders), std::move(mul), std::move(one), bounds);
}

FiniteRing make_matrix_ring(const FiniteRing& base, int dim, const Bounds& bounds) {
    if (dim < 1) throw ValidationError("matrix ring needs a positive dimension");
    const auto kb = static_cast<std::size_t>(base.generator_count());
    const auto d = static_cast<std::size_t>(dim);
    const std::size_t k = d * d * kb;
    auto gen = [&](std::size_t u, std::size_t v, std::size_t t) { return (u * d + v) * kb + t; };

    std::vector<int> orders(k);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t t = 0; t < kb; ++t) orders[gen(u, v, t)] = base.additive_orders()[t];

    std::vector<std::vector<std::vector<int>>> mul(
        k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    const auto& bm = base.mul_table();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w)
                for (std::size_t z = 0; z < d; ++z) {
                    if (v != w) continue;  // E_uv * E_wz = 0 unless v = w
                    for (std::size_t t1 = 0; t1 < kb; ++t1)
                        for (std::size_t t2 = 0; t2 < kb; ++t2)
                            for (std::size_t t3 = 0; t3 < kb; ++t3)
                                mul[gen(u, v, t1)][gen(w, z, t2)][gen(u, z, t3)] = bm[t1][t2][t3];
                }

    std::vector<int> one(k, 0);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t t = 0; t < kb; ++t) one[gen(u, u, t)] = base.one_coefficients()[t];
    return FiniteRing::make(std::move(orders), std::move(mul), std::move(one), bounds);
}

FiniteModule make_zn_module(RingPtr zn, std::vector<int> orders, std::string name,
                            const Bounds& bounds) {
    const auto m = orders.size();
    std::vector<std::vector<std::vector<int>>> action(
        1, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
    for (std::size_t i = 0; i < m; ++i) action[0][i][i] = 1 % orders[i];
    return FiniteModule::make(std::move(zn), std::move(orders), std::move(action),
                              std::move(name), bounds);
}

SubmoduleAsModule submodule_as_module(const FiniteModule& m, const Submodule& L,
                                      const Bounds& bounds) {
    const GroupBasis gb = group_basis(m, L);
    if (gb.basis.empty()) throw ValidationError("the zero submodule is not a module here");

    std::vector<int> orders(gb.orders.begin(), gb.orders.end());
    const auto t = gb.basis.size();
    const int k = m.ring().generator_count();
    std::vector<std::vector<std::vector<int>>> action(
        k, std::vector<std::vector<int>>(t, std::vector<int>(t)));
    for (int g = 0; g < k; ++g)
        for (std::size_t i = 0; i < t; ++i) {
            std::uint32_t packed = gb.coords_of.at(m.act_gen(g, gb.basis[i]));
            for (std::size_t j = 0; j < t; ++j) {
                action[g][i][j] = static_cast<int>(packed % gb.orders[j]);
                packed = static_cast<std::uint32_t>(packed / gb.orders[j]);
            }
        }

    SubmoduleAsModule out{
        FiniteModule::make(m.ring_ptr(), std::move(orders), std::move(action),
                           m.name() + "/sub", bounds),
        {},
        {}};
    out.to_ambient.resize(out.module.size());
    out.from_ambient.assign(m.size(), 0);
    for (const auto& [ambient, packed] : gb.coords_of) {
        out.to_ambient[packed] = ambient;
        out.from_ambient[ambient] = packed;
    }
    return out;
}

}  // namespace fcspec
