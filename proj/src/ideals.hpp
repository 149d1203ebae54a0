// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "endo.hpp"

namespace fcspec {

enum class IdealSide { left, right, two_sided };

struct EndoIdeal {
    Bitset members;  // over S indices
    Sidedness sidedness;
};

// All additive subgroups of S closed under the requested multiplications,
// canonically ordered.
std::vector<EndoIdeal> enumerate_ideals(const EndoRing& S, IdealSide side,
                                        const Bounds& bounds = Bounds{});

// Proper two-sided ideals P with aSb in P implying a in P or b in P.
std::vector<Bitset> prime_ideals(const EndoRing& S, const std::vector<EndoIdeal>& two_sided);

Bitset prime_radical(const EndoRing& S, const std::vector<Bitset>& primes);

bool every_prime_maximal(const EndoRing& S, const std::vector<EndoIdeal>& two_sided,
                         const std::vector<Bitset>& primes);

// Module-level predicates that need the lattice and S together.
bool is_duo(const EndoRing& S, const SubmoduleLattice& lattice);
bool is_self_injective(const FiniteModule& m, const SubmoduleLattice& lattice, const EndoRing& S,
                       const Bounds& bounds = Bounds{});
bool is_self_cogenerator(const FiniteModule& m, const SubmoduleLattice& lattice,
                         const EndoRing& S);
bool is_intrinsically_injective(const FiniteModule& m, const EndoRing& S,
                                const Bounds& bounds = Bounds{});

}  // namespace fcspec
