// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "ring.hpp"

#include <random>
#include <sstream>

namespace fcspec {

namespace {

long long checked_product(const std::vector<int>& orders, const Bounds& bounds) {
    long long n = 1;
    for (int d : orders) {
        if (d < 1) throw ValidationError("ring additive orders must be positive");
        n *= d;
        if (n > bounds.max_elements)
            throw BoundExceeded("ring has more than " + std::to_string(bounds.max_elements) +
                                " elements");
    }
    return n;
}

}  // namespace

std::uint32_t FiniteRing::encode(const std::vector<int>& coeffs) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int c = coeffs[i] % orders_[i];
        if (c < 0) c += orders_[i];
        idx += static_cast<std::uint32_t>(c) * radix_[i];
    }
    return idx;
}

std::vector<int> FiniteRing::decode(std::uint32_t x) const {
    std::vector<int> coeffs(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        coeffs[i] = static_cast<int>(x % orders_[i]);
        x /= orders_[i];
    }
    return coeffs;
}

std::uint32_t FiniteRing::add(std::uint32_t x, std::uint32_t y) const {
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

std::uint32_t FiniteRing::neg(std::uint32_t x) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto d = static_cast<std::uint32_t>(orders_[i]);
        const std::uint32_t c = x % d;
        idx += (c ? d - c : 0) * radix_[i];
        x /= d;
    }
    return idx;
}

std::uint32_t FiniteRing::mul(std::uint32_t x, std::uint32_t y) const {
    if (!mul_cache_.empty()) return mul_cache_[x * element_count_ + y];
    const auto xs = decode(x), ys = decode(y);
    const auto k = orders_.size();
    std::vector<long long> acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (xs[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (ys[j] == 0) continue;
            const long long scale = static_cast<long long>(xs[i]) * ys[j];
            const auto& c = mul_[i][j];
            for (std::size_t t = 0; t < k; ++t) acc[t] += scale * c[t];
        }
    }
    std::uint32_t idx = 0;
    for (std::size_t t = 0; t < k; ++t)
        idx += static_cast<std::uint32_t>(acc[t] % orders_[t]) * radix_[t];
    return idx;
}

std::uint32_t FiniteRing::gen_index(int i) const {
    return orders_[i] > 1 ? radix_[i] : 0;
}

FiniteRing FiniteRing::make(std::vector<int> additive_orders,
                            std::vector<std::vector<std::vector<int>>> mul_table,
                            std::vector<int> one, const Bounds& bounds,
                            RingValidation validation) {
    if (additive_orders.empty()) throw ValidationError("ring needs at least one additive order");
    const long long n = checked_product(additive_orders, bounds);
    if (n < 2) throw ValidationError("ring must have 1 distinct from 0");

    const auto k = additive_orders.size();
    if (mul_table.size() != k) throw ValidationError("mul table must have one row per generator");
    for (std::size_t i = 0; i < k; ++i) {
        if (mul_table[i].size() != k)
            throw ValidationError("mul table row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < k; ++j) {
            if (mul_table[i][j].size() != k)
                throw ValidationError("mul table entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") has wrong length");
            for (std::size_t t = 0; t < k; ++t) {
                const int c = mul_table[i][j][t];
                if (c < 0 || c >= additive_orders[t])
                    throw ValidationError("mul table entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") coefficient " + std::to_string(t) +
                                          " out of range");
            }
        }
    }
    if (one.size() != k) throw ValidationError("unit coefficient vector has wrong length");
    for (std::size_t t = 0; t < k; ++t)
        if (one[t] < 0 || one[t] >= additive_orders[t])
            throw ValidationError("unit coefficient " + std::to_string(t) + " out of range");

    FiniteRing r;
    r.orders_ = std::move(additive_orders);
    r.mul_ = std::move(mul_table);
    r.one_coeffs_ = std::move(one);
    r.element_count_ = static_cast<std::uint32_t>(n);
    r.radix_.resize(k);
    std::uint32_t place = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r.radix_[i] = place;
        place *= static_cast<std::uint32_t>(r.orders_[i]);
    }
    r.one_ = r.encode(r.one_coeffs_);
    if (r.one_ == 0) throw ValidationError("ring must have 1 distinct from 0");

    // The bilinear extension is well defined (and distributive) exactly when
    // every product of generators is killed by both generator orders.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t) {
                const long long c = r.mul_[i][j][t];
                if ((static_cast<long long>(r.orders_[i]) * c) % r.orders_[t] != 0 ||
                    (static_cast<long long>(r.orders_[j]) * c) % r.orders_[t] != 0)
                    throw ValidationError(
                        "mul table entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not compatible with the generator orders");
            }

    if (r.element_count_ <= 1024) {
        std::vector<std::uint32_t> cache(static_cast<std::size_t>(n) * n);
        for (std::uint32_t x = 0; x < r.element_count_; ++x)
            for (std::uint32_t y = 0; y < r.element_count_; ++y)
                cache[x * r.element_count_ + y] = r.mul(x, y);
        r.mul_cache_ = std::move(cache);
    }

    // Generator-level associativity, which bilinearity lifts to all elements.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t) {
                const std::uint32_t gi = r.gen_index(static_cast<int>(i));
                const std::uint32_t gj = r.gen_index(static_cast<int>(j));
                const std::uint32_t gt = r.gen_index(static_cast<int>(t));
                if (r.mul(r.mul(gi, gj), gt) != r.mul(gi, r.mul(gj, gt)))
                    throw ValidationError("ring multiplication is not associative on generators (" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(t) + ")");
            }

    for (std::uint32_t x = 0; x < r.element_count_; ++x) {
        if (r.mul(r.one_, x) != x || r.mul(x, r.one_) != x)
            throw ValidationError("declared unit does not act as identity on element " +
                                  std::to_string(x));
    }

    if (validation == RingValidation::generator_level) return r;

    auto check_triple = [&r](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
        if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) {
            std::ostringstream os;
            os << "ring multiplication is not associative on elements (" << x << "," << y << ","
               << z << ")";
            throw ValidationError(os.str());
        }
        if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z)) ||
            r.mul(z, r.add(x, y)) != r.add(r.mul(z, x), r.mul(z, y))) {
            std::ostringstream os;
            os << "ring multiplication is not distributive on elements (" << x << "," << y << ","
               << z << ")";
            throw ValidationError(os.str());
        }
    };
    if (r.element_count_ <= 512) {
        for (std::uint32_t x = 0; x < r.element_count_; ++x)
            for (std::uint32_t y = 0; y < r.element_count_; ++y)
                for (std::uint32_t z = 0; z < r.element_count_; ++z) check_triple(x, y, z);
    } else {
        std::mt19937_64 rng(0x5bd1e995u);
        for (int s = 0; s < 100000; ++s)
            check_triple(static_cast<std::uint32_t>(rng() % r.element_count_),
                         static_cast<std::uint32_t>(rng() % r.element_count_),
                         static_cast<std::uint32_t>(rng() % r.element_count_));
    }

    return r;
}

}  // namespace fcspec
