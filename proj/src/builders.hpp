// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "submodule.hpp"

namespace fcspec {

FiniteRing make_zn_ring(int n, const Bounds& bounds = Bounds{});
FiniteRing make_product_ring(const std::vector<FiniteRing>& factors, const Bounds& bounds = Bounds{});
FiniteRing make_matrix_ring(const FiniteRing& base, int dim, const Bounds& bounds = Bounds{});

// the regular module of a Z/n presentation: orders over the ring itself
FiniteModule make_zn_module(RingPtr zn, std::vector<int> orders, std::string name,
                            const Bounds& bounds = Bounds{});

// a submodule repackaged as a standalone module, together with the element
// correspondence into the ambient module
struct SubmoduleAsModule {
    FiniteModule module;
    std::vector<std::uint32_t> to_ambient;    // sub element index -> ambient index
    std::vector<std::uint32_t> from_ambient;  // ambient index -> sub index (members only)
};
SubmoduleAsModule submodule_as_module(const FiniteModule& m, const Submodule& L,
                                      const Bounds& bounds = Bounds{});

}  // namespace fcspec
