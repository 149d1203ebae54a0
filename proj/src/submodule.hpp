// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"
#include "module.hpp"

namespace fcspec {

// A submodule as a bit vector over module element indices plus its derived
// minimal generator list (greedy, ascending element index).  Equality and
// hashing look at the bit vector only.
struct Submodule {
    Bitset members;
    std::vector<std::uint32_t> gens;

    bool contains(std::uint32_t x) const { return members.test(x); }
    std::size_t size() const { return members.count(); }
    bool operator==(const Submodule& o) const { return members == o.members; }
};

// closure of a set of elements under addition, negation and the ring action
Bitset submodule_closure(const FiniteModule& m, const std::vector<std::uint32_t>& gens);

// additive span only (used for sums of submodules, where action closure is
// automatic)
Bitset additive_span(const FiniteModule& m, const Bitset& seed);

Submodule make_submodule(const FiniteModule& m, Bitset members);
Submodule cyclic_submodule(const FiniteModule& m, std::uint32_t x);

// sorted minimal generator coefficient tuples in angle brackets; the zero
// submodule is labelled by the zero tuple
std::string submodule_label(const FiniteModule& m, const Submodule& s);

struct SubmoduleLattice {
    std::vector<Submodule> all;  // canonical order: popcount, then bit-lex
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> index_of;
    std::uint32_t zero_index = 0;
    std::uint32_t full_index = 0;

    std::uint32_t index(const Bitset& members) const { return index_of.at(members); }
    bool leq(std::uint32_t a, std::uint32_t b) const {
        return all[a].members.is_subset_of(all[b].members);
    }
    std::uint32_t size() const { return static_cast<std::uint32_t>(all.size()); }
};

// Every subset of M closed under addition and the ring action, exactly once,
// canonically ordered.  Seeds with cyclic submodules and closes under
// pairwise join.
SubmoduleLattice enumerate_submodules(const FiniteModule& m, const Bounds& bounds = Bounds{});

// sum of two submodules inside the same module
Bitset submodule_join(const FiniteModule& m, const Bitset& a, const Bitset& b);

// (L :_R M) = { r in R | rM is contained in L }, as a bit vector over R
Bitset colon_ring(const FiniteModule& m, const Bitset& L);

// { r in R | rX = 0 } for a submodule X
Bitset ring_annihilator(const FiniteModule& m, const Submodule& X);

// (L :_M I) = { x in M | rx in L for all r in I }.  Always additively
// closed; throws NotASubmoduleError when the result is not closed under the
// ring action (I was not a suitable ideal).
Submodule colon_module(const FiniteModule& m, const Bitset& L, const Bitset& ring_subset);

}  // namespace fcspec
