// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "catalog.hpp"

#include <algorithm>

#include "builders.hpp"
#include "specfile.hpp"

namespace fcspec {

namespace {

FiniteModule regular_zn(int n, const std::string& name, const Bounds& bounds) {
    auto ring = std::make_shared<const FiniteRing>(make_zn_ring(n, bounds));
    return make_zn_module(std::move(ring), {n}, name, bounds);
}

FiniteModule zn_with_orders(int n, std::vector<int> orders, const std::string& name,
                            const Bounds& bounds) {
    auto ring = std::make_shared<const FiniteRing>(make_zn_ring(n, bounds));
    return make_zn_module(std::move(ring), std::move(orders), name, bounds);
}

FiniteModule m2f2_column(const Bounds& bounds) {
    auto ring = std::make_shared<const FiniteRing>(
        make_matrix_ring(make_zn_ring(2, bounds), 2, bounds));
    // generator (u,v) acts as the matrix unit E_uv on column vectors
    std::vector<std::vector<std::vector<int>>> action(
        4, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) action[u * 2 + v][v][u] = 1;
    return FiniteModule::make(std::move(ring), {2, 2}, std::move(action), "M2F2col", bounds);
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names = {"M2F2col", "V4overF2", "Z2xZ3", "Z4",
                                      "Z6",      "Z6scrambled", "Z8",  "Z9"};
    return names;
}

bool catalog_has(const std::string& name) {
    const auto names = catalog_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

FiniteModule catalog_module(const std::string& name, const Bounds& bounds) {
    if (name == "Z4") return regular_zn(4, "Z4", bounds);
    if (name == "Z6") return regular_zn(6, "Z6", bounds);
    if (name == "Z8") return regular_zn(8, "Z8", bounds);
    if (name == "Z9") return regular_zn(9, "Z9", bounds);
    if (name == "Z2xZ3") return zn_with_orders(6, {2, 3}, "Z2xZ3", bounds);
    if (name == "Z6scrambled") return zn_with_orders(6, {3, 2}, "Z6scrambled", bounds);
    if (name == "V4overF2") return zn_with_orders(2, {2, 2}, "V4overF2", bounds);
    if (name == "M2F2col") return m2f2_column(bounds);
    throw ValidationError("unknown catalog module \"" + name + "\" (try: M2F2col, V4overF2, "
                          "Z2xZ3, Z4, Z6, Z6scrambled, Z8, Z9)");
}

FiniteModule open_module(const std::string& spec, const Bounds& bounds) {
    const std::string prefix = "catalog:";
    if (spec.rfind(prefix, 0) == 0) return catalog_module(spec.substr(prefix.size()), bounds);
    return load_module_file(spec, bounds);
}

}  // namespace fcspec
