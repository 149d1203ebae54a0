// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace fcspec {

// Element sets (submodules, ideals, point sets) are bit vectors indexed by
// the canonical mixed-radix element index.
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline std::size_t bitset_hash(const Bitset& b) {
    std::vector<Bitset::block_type> blocks(b.num_blocks());
    boost::to_block_range(b, blocks.begin());
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : blocks) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return bitset_hash(b); }
};

// Canonical total order: popcount first, then lexicographic on the bit
// string read from index 0 (absent bit sorts before present bit).
inline bool canonical_less(const Bitset& a, const Bitset& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    std::vector<Bitset::block_type> wa(a.num_blocks()), wb(b.num_blocks());
    boost::to_block_range(a, wa.begin());
    boost::to_block_range(b, wb.begin());
    for (std::size_t i = 0; i < wa.size(); ++i) {
        if (wa[i] == wb[i]) continue;
        const auto diff = wa[i] ^ wb[i];
        const auto low = diff & (~diff + 1);
        return (wa[i] & low) == 0;
    }
    return false;
}

inline std::vector<std::uint32_t> bit_indices(const Bitset& b) {
    std::vector<std::uint32_t> out;
    out.reserve(b.count());
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

}  // namespace fcspec
