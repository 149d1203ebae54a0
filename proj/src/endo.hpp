// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "submodule.hpp"

namespace fcspec {

// A submodule decomposed as a direct sum of cyclic groups.  coords_of packs
// the cyclic coordinates of each member in mixed radix over `orders`.
struct GroupBasis {
    std::vector<std::uint32_t> basis;   // ambient elements, one per cyclic factor
    std::vector<long long> orders;      // cyclic orders, each > 1
    std::vector<std::uint32_t> members; // ascending ambient indices
    std::unordered_map<std::uint32_t, std::uint32_t> coords_of;
};

GroupBasis group_basis(const FiniteModule& m, const Submodule& L);

// All additive, action-commuting maps from a submodule of one module into a
// target module over the same ring.  Maps are stored as images of the source
// basis, in lexicographic order.
struct HomSet {
    GroupBasis source;
    const FiniteModule* target = nullptr;
    std::vector<std::vector<std::uint32_t>> maps;

    std::uint32_t evaluate(std::size_t map_idx, std::uint32_t x) const;
    std::size_t size() const { return maps.size(); }
};

HomSet hom_set(const FiniteModule& src_module, const Submodule& source,
               const FiniteModule& target, const Bounds& bounds = Bounds{});

// S = End(M) with the opposite composition product: (f * g)(x) = g(f(x)).
class EndoRing {
  public:
    static EndoRing make(const FiniteModule& m, const Bounds& bounds = Bounds{});

    const FiniteModule& module() const { return *module_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t zero() const { return zero_; }
    std::uint32_t identity() const { return identity_; }

    std::uint32_t apply(std::uint32_t f, std::uint32_t x) const { return value_[f][x]; }
    const std::vector<std::uint32_t>& value_table(std::uint32_t f) const { return value_[f]; }

    // opposite composition: apply f first, then g
    std::uint32_t star(std::uint32_t f, std::uint32_t g) const;
    std::uint32_t add(std::uint32_t f, std::uint32_t g) const;
    std::uint32_t neg(std::uint32_t f) const;

    // m x m generator matrix of f (row i = image of module generator i)
    std::vector<std::vector<int>> matrix_of(std::uint32_t f) const;

    // the ring presentation of S (product is the opposite composition)
    const FiniteRing& as_ring() const { return *as_ring_; }
    std::uint32_t endo_to_ring(std::uint32_t f) const { return endo_to_ring_[f]; }
    std::uint32_t ring_to_endo(std::uint32_t r) const { return ring_to_endo_[r]; }

    const GroupBasis& basis() const { return basis_; }

    std::uint32_t index_of_images(const std::vector<std::uint32_t>& images) const {
        return lookup_.at(images);
    }

  private:
    const FiniteModule* module_ = nullptr;
    GroupBasis basis_;                                  // basis of M
    std::vector<std::vector<std::uint32_t>> images_;    // canonical sort key
    std::vector<std::vector<std::uint32_t>> value_;     // full value tables
    std::map<std::vector<std::uint32_t>, std::uint32_t> lookup_;
    std::vector<std::uint32_t> compose_;                // f * |S| + g, if small enough
    std::vector<std::uint32_t> add_;                    // same layout as compose_
    std::vector<std::uint32_t> neg_;
    std::uint32_t zero_ = 0, identity_ = 0;
    std::shared_ptr<const FiniteRing> as_ring_;
    std::vector<std::uint32_t> endo_to_ring_, ring_to_endo_;
};

// An(L) = { f in S | f(L) = 0 }, as a bit vector over S indices.
Bitset annihilator(const EndoRing& S, const Submodule& L);

// Ke(I) = intersection of kernels; the empty set yields all of M.
Bitset kernel_intersection(const EndoRing& S, const Bitset& ideal_members);

struct Sidedness {
    bool left = false;
    bool right = false;
};
Sidedness ideal_sidedness(const EndoRing& S, const Bitset& members);

bool is_fully_invariant(const EndoRing& S, const Submodule& L);

}  // namespace fcspec
