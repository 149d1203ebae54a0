// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "module.hpp"

#include <random>

namespace fcspec {

std::uint32_t FiniteModule::encode(const std::vector<int>& coeffs) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int c = coeffs[i] % orders_[i];
        if (c < 0) c += orders_[i];
        idx += static_cast<std::uint32_t>(c) * radix_[i];
    }
    return idx;
}

std::vector<int> FiniteModule::decode(std::uint32_t x) const {
    std::vector<int> coeffs(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        coeffs[i] = static_cast<int>(x % orders_[i]);
        x /= orders_[i];
    }
    return coeffs;
}

std::uint32_t FiniteModule::gen_index(int i) const {
    return orders_[i] > 1 ? radix_[i] : 0;
}

std::uint32_t FiniteModule::add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto d = static_cast<std::uint32_t>(orders_[i]);
        std::uint32_t c = x % d + y % d;
        if (c >= d) c -= d;
        idx += c * radix_[i];
        x /= d;
        y /= d;
    }
    return idx;
}

std::uint32_t FiniteModule::neg(std::uint32_t x) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto d = static_cast<std::uint32_t>(orders_[i]);
        const std::uint32_t c = x % d;
        idx += (c ? d - c : 0) * radix_[i];
        x /= d;
    }
    return idx;
}

std::uint32_t FiniteModule::scale(long long c, std::uint32_t x) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto d = orders_[i];
        long long v = (c % d) * (x % d) % d;
        if (v < 0) v += d;
        idx += static_cast<std::uint32_t>(v) * radix_[i];
        x /= d;
    }
    return idx;
}

std::uint32_t FiniteModule::act(std::uint32_t r, std::uint32_t x) const {
    const auto& ring = *ring_;
    std::uint32_t acc = 0;
    const auto& ro = ring.additive_orders();
    for (std::size_t i = 0; i < ro.size(); ++i) {
        const auto c = static_cast<long long>(r % ro[i]);
        r /= ro[i];
        if (c == 0) continue;
        acc = add(acc, scale(c, gen_action_[i][x]));
    }
    return acc;
}

FiniteModule FiniteModule::make(RingPtr ring, std::vector<int> orders,
                                std::vector<std::vector<std::vector<int>>> action,
                                std::string name, const Bounds& bounds) {
    if (!ring) throw ValidationError("module needs a ring");
    if (orders.empty()) throw ValidationError("module needs at least one additive order");
    long long n = 1;
    for (int e : orders) {
        if (e < 1) throw ValidationError("module additive orders must be positive");
        n *= e;
        if (n > bounds.max_elements)
            throw BoundExceeded("module has more than " + std::to_string(bounds.max_elements) +
                                " elements");
    }
    if (n < 2) throw ValidationError("module must be non-zero");

    const auto m = orders.size();
    const auto k = static_cast<std::size_t>(ring->generator_count());
    if (action.size() != k)
        throw ValidationError("module action needs one matrix per ring generator");
    for (std::size_t g = 0; g < k; ++g) {
        if (action[g].size() != m)
            throw ValidationError("action matrix " + std::to_string(g) + " has wrong row count");
        for (std::size_t i = 0; i < m; ++i) {
            if (action[g][i].size() != m)
                throw ValidationError("action matrix " + std::to_string(g) + " row " +
                                      std::to_string(i) + " has wrong length");
            for (std::size_t j = 0; j < m; ++j) {
                const int c = action[g][i][j];
                if (c < 0 || c >= orders[j])
                    throw ValidationError("action matrix " + std::to_string(g) + " entry (" +
                                          std::to_string(i) + "," + std::to_string(j) +
                                          ") out of range");
                // well-definedness: the generator order must kill the image
                if ((static_cast<long long>(orders[i]) * c) % orders[j] != 0)
                    throw ValidationError("action matrix " + std::to_string(g) + " entry (" +
                                          std::to_string(i) + "," + std::to_string(j) +
                                          ") is not compatible with the generator orders");
                // the ring generator order must kill the image as well
                if ((static_cast<long long>(ring->additive_orders()[g]) * c) % orders[j] != 0)
                    throw ValidationError("action matrix " + std::to_string(g) + " entry (" +
                                          std::to_string(i) + "," + std::to_string(j) +
                                          ") is not compatible with the ring generator order");
            }
        }
    }

    FiniteModule mod;
    mod.ring_ = std::move(ring);
    mod.name_ = std::move(name);
    mod.orders_ = std::move(orders);
    mod.action_ = std::move(action);
    mod.element_count_ = static_cast<std::uint32_t>(n);
    mod.radix_.resize(m);
    std::uint32_t place = 1;
    for (std::size_t i = 0; i < m; ++i) {
        mod.radix_[i] = place;
        place *= static_cast<std::uint32_t>(mod.orders_[i]);
    }

    const auto& R = *mod.ring_;
    mod.gen_action_.assign(k, std::vector<std::uint32_t>(mod.element_count_));
    for (std::size_t g = 0; g < k; ++g)
        for (std::uint32_t x = 0; x < mod.element_count_; ++x) {
            std::uint32_t rest = x, acc = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const auto c = static_cast<long long>(rest % mod.orders_[i]);
                rest /= mod.orders_[i];
                if (c == 0) continue;
                // image of c * gen_i under generator g
                std::uint32_t img = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    const long long v = c * mod.action_[g][i][j] % mod.orders_[j];
                    img += static_cast<std::uint32_t>(v) * mod.radix_[j];
                }
                acc = mod.add(acc, img);
            }
            mod.gen_action_[g][x] = acc;
        }

    // 1_R must act as the identity; additivity reduces this to generators,
    // but the full scan is cheap at desk scale.
    for (std::uint32_t x = 0; x < mod.element_count_; ++x)
        if (mod.act(R.one(), x) != x)
            throw ValidationError("1 does not act as identity on module element " +
                                  std::to_string(x));

    // Associativity r(sx) = (rs)x on ring generators and module generators
    // lifts to all elements by additivity.
    for (std::size_t g = 0; g < k; ++g)
        for (std::size_t h = 0; h < k; ++h) {
            const std::uint32_t rg = R.gen_index(static_cast<int>(g));
            const std::uint32_t rh = R.gen_index(static_cast<int>(h));
            const std::uint32_t prod = R.mul(rg, rh);
            for (std::uint32_t x = 0; x < mod.element_count_; ++x)
                if (mod.act(rg, mod.act(rh, x)) != mod.act(prod, x))
                    throw ValidationError("module action is not associative on generators (" +
                                          std::to_string(g) + "," + std::to_string(h) +
                                          ") at element " + std::to_string(x));
        }

    // Deterministic sample of full triples as a belt-and-braces check.
    std::mt19937_64 rng(0x9e3779b9u);
    const long long full = static_cast<long long>(R.size()) * R.size() * mod.element_count_;
    const long long budget = 1 << 16;
    if (full <= budget) {
        for (std::uint32_t r = 0; r < R.size(); ++r)
            for (std::uint32_t s = 0; s < R.size(); ++s)
                for (std::uint32_t x = 0; x < mod.element_count_; ++x)
                    if (mod.act(r, mod.act(s, x)) != mod.act(R.mul(r, s), x))
                        throw ValidationError("module action is not associative");
    } else {
        for (int t = 0; t < 20000; ++t) {
            const auto r = static_cast<std::uint32_t>(rng() % R.size());
            const auto s = static_cast<std::uint32_t>(rng() % R.size());
            const auto x = static_cast<std::uint32_t>(rng() % mod.element_count_);
            if (mod.act(r, mod.act(s, x)) != mod.act(R.mul(r, s), x))
                throw ValidationError("module action is not associative");
        }
    }
    return mod;
}

}  // namespace fcspec
