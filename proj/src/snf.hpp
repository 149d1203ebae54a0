// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace fcspec {

// Spanning set (as columns) of the lattice { v in Z^n : A v = 0 (mod m_r)
// row-wise }.  A is rows x n.
std::vector<std::vector<long long>> congruence_kernel(
    const std::vector<std::vector<long long>>& A, const std::vector<long long>& row_moduli,
    std::size_t n_cols);

struct CyclicDecomposition {
    // combos[i] is an integer combination of the input generators; the
    // subgroup is the direct sum of the cyclic groups generated by these
    // combinations, with the stated orders (each > 1).
    std::vector<std::vector<long long>> combos;
    std::vector<long long> orders;
};

// Decomposes the subgroup of Z_{moduli[0]} x ... x Z_{moduli[c-1]} generated
// by the given coordinate vectors into a direct sum of cyclic groups.
CyclicDecomposition cyclic_decomposition(const std::vector<std::vector<long long>>& gens,
                                         const std::vector<long long>& moduli);

}  // namespace fcspec
