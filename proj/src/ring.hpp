// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fcspec {

// A finite associative unital ring.  The additive group is the product of
// cyclic groups Z_{d_1} x ... x Z_{d_k}; multiplication is given by
// structure constants on the additive generators and extended bilinearly.
// Elements are addressed by their mixed-radix index (first coordinate
// varies fastest).
//
// Validation levels: `full` additionally sweeps all element triples
// (exhaustively up to 512 elements, sampled above) as garbage-in protection
// for loaded tables.  `generator_level` keeps the complete checks that
// bilinearity lifts to all elements (order compatibility, generator
// associativity, the unit law on every element) and is meant for rings the
// engine constructs itself.
enum class RingValidation { full, generator_level };

class FiniteRing {
  public:
    // Throws ValidationError on any axiom failure (associativity,
    // distributivity compatibility, unit laws).
    static FiniteRing make(std::vector<int> additive_orders,
                           std::vector<std::vector<std::vector<int>>> mul_table,
                           std::vector<int> one,
                           const Bounds& bounds = Bounds{},
                           RingValidation validation = RingValidation::full);

    std::uint32_t size() const { return element_count_; }
    int generator_count() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& additive_orders() const { return orders_; }
    const std::vector<std::vector<std::vector<int>>>& mul_table() const { return mul_; }
    const std::vector<int>& one_coefficients() const { return one_coeffs_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return one_; }

    std::uint32_t encode(const std::vector<int>& coeffs) const;
    std::vector<int> decode(std::uint32_t x) const;

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t neg(std::uint32_t x) const;
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;

    // gen_index(i) is the element with coefficient vector e_i; the order-1
    // coordinates collapse to zero.
    std::uint32_t gen_index(int i) const;

  private:
    FiniteRing() = default;

    std::vector<int> orders_;
    std::vector<std::vector<std::vector<int>>> mul_;
    std::vector<int> one_coeffs_;
    std::uint32_t one_ = 0;
    std::uint32_t element_count_ = 0;
    std::vector<std::uint32_t> radix_;  // place values for the mixed radix
    // full multiplication table, only kept for small rings
    std::vector<std::uint32_t> mul_cache_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace fcspec
