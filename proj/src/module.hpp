// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"

namespace fcspec {

// A finite unital left module over a FiniteRing.  The additive group is
// Z_{e_1} x ... x Z_{e_m}; the ring acts through one m x m matrix per ring
// additive generator (row i = image of module generator i).
class FiniteModule {
  public:
    static FiniteModule make(RingPtr ring, std::vector<int> orders,
                             std::vector<std::vector<std::vector<int>>> action,
                             std::string name = {}, const Bounds& bounds = Bounds{});

    const FiniteRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }
    const std::string& name() const { return name_; }
    std::uint32_t size() const { return element_count_; }
    int generator_count() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& orders() const { return orders_; }
    const std::vector<std::vector<std::vector<int>>>& action_matrices() const { return action_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t encode(const std::vector<int>& coeffs) const;
    std::vector<int> decode(std::uint32_t x) const;
    std::uint32_t gen_index(int i) const;

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t neg(std::uint32_t x) const;
    // integer scalar action on the additive group
    std::uint32_t scale(long long c, std::uint32_t x) const;
    // action of the i-th ring additive generator
    std::uint32_t act_gen(int i, std::uint32_t x) const { return gen_action_[i][x]; }
    // action of an arbitrary ring element
    std::uint32_t act(std::uint32_t r, std::uint32_t x) const;

  private:
    FiniteModule() = default;

    RingPtr ring_;
    std::string name_;
    std::vector<int> orders_;
    std::vector<std::vector<std::vector<int>>> action_;
    std::uint32_t element_count_ = 0;
    std::vector<std::uint32_t> radix_;
    std::vector<std::vector<std::uint32_t>> gen_action_;  // per ring generator, per element
};

}  // namespace fcspec
