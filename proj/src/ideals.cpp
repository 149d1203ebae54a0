// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "ideals.hpp"

#include <algorithm>

namespace fcspec {

namespace {

// additive closure of a seed set inside (S, +)
Bitset additive_span_endo(const EndoRing& S, const std::vector<std::uint32_t>& seed) {
    Bitset set(S.size());
    set.set(S.zero());
    std::vector<std::uint32_t> present{S.zero()};
    std::vector<std::uint32_t> work(seed);
    while (!work.empty()) {
        const std::uint32_t x = work.back();
        work.pop_back();
        if (set.test(x)) continue;
        set.set(x);
        present.push_back(x);
        work.push_back(S.neg(x));
        for (auto y : present) work.push_back(S.add(x, y));
    }
    return set;
}

Bitset cyclic_ideal(const EndoRing& S, std::uint32_t f, IdealSide side) {
    std::vector<std::uint32_t> seed;
    switch (side) {
        case IdealSide::left:
            for (std::uint32_t s = 0; s < S.size(); ++s) seed.push_back(S.star(s, f));
            break;
        case IdealSide::right:
            for (std::uint32_t s = 0; s < S.size(); ++s) seed.push_back(S.star(f, s));
            break;
        case IdealSide::two_sided: {
            Bitset left(S.size());
            for (std::uint32_t s = 0; s < S.size(); ++s) left.set(S.star(s, f));
            const Bitset span = additive_span_endo(S, bit_indices(left));
            Bitset prod(S.size());
            for (auto g = span.find_first(); g != Bitset::npos; g = span.find_next(g))
                for (std::uint32_t t = 0; t < S.size(); ++t)
                    prod.set(S.star(static_cast<std::uint32_t>(g), t));
            seed = bit_indices(prod);
            break;
        }
    }
    return additive_span_endo(S, seed);
}

Bitset ideal_join(const EndoRing& S, const Bitset& a, const Bitset& b) {
    Bitset out(S.size());
    for (auto i = a.find_first(); i != Bitset::npos; i = a.find_next(i))
        for (auto j = b.find_first(); j != Bitset::npos; j = b.find_next(j))
            out.set(S.add(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
    return out;
}

}  // namespace

std::vector<EndoIdeal> enumerate_ideals(const EndoRing& S, IdealSide side, const Bounds& bounds) {
    std::vector<Bitset> ideals;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
    auto insert = [&](Bitset b) {
        if (seen.count(b)) return;
        seen.emplace(b, static_cast<std::uint32_t>(ideals.size()));
        ideals.push_back(std::move(b));
        if (static_cast<long>(ideals.size()) > bounds.max_submodules)
            throw BoundExceeded("ideal count exceeds " + std::to_string(bounds.max_submodules));
    };
    for (std::uint32_t f = 0; f < S.size(); ++f) insert(cyclic_ideal(S, f, side));
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (ideals[j].is_subset_of(ideals[i])) continue;
            insert(ideal_join(S, ideals[i], ideals[j]));
        }
    std::sort(ideals.begin(), ideals.end(), canonical_less);
    std::vector<EndoIdeal> out;
    out.reserve(ideals.size());
    for (auto& b : ideals) {
        EndoIdeal id;
        id.sidedness = ideal_sidedness(S, b);
        id.members = std::move(b);
        out.push_back(std::move(id));
    }
    return out;
}

std::vector<Bitset> prime_ideals(const EndoRing& S, const std::vector<EndoIdeal>& two_sided) {
    std::vector<Bitset> primes;
    for (const auto& ideal : two_sided) {
        const Bitset& P = ideal.members;
        if (P.count() == S.size()) continue;  // proper only
        bool prime = true;
        for (std::uint32_t a = 0; a < S.size() && prime; ++a) {
            if (P.test(a)) continue;
            for (std::uint32_t b = 0; b < S.size() && prime; ++b) {
                if (P.test(b)) continue;
                // s = identity settles most pairs immediately
                bool witness = !P.test(S.star(a, b));
                for (std::uint32_t s = 0; s < S.size() && !witness; ++s)
                    if (!P.test(S.star(S.star(a, s), b))) witness = true;
                if (!witness) prime = false;
            }
        }
        if (prime) primes.push_back(P);
    }
    return primes;
}

Bitset prime_radical(const EndoRing& S, const std::vector<Bitset>& primes) {
    Bitset out(S.size());
    out.set();
    for (const auto& p : primes) out &= p;
    return out;
}

bool every_prime_maximal(const EndoRing& S, const std::vector<EndoIdeal>& two_sided,
                         const std::vector<Bitset>& primes) {
    for (const auto& p : primes)
        for (const auto& j : two_sided) {
            if (j.members.count() == S.size() || j.members == p) continue;
            if (p.is_subset_of(j.members)) return false;
        }
    return true;
}

bool is_duo(const EndoRing& S, const SubmoduleLattice& lattice) {
    for (const auto& L : lattice.all)
        if (!is_fully_invariant(S, L)) return false;
    return true;
}

bool is_self_injective(const FiniteModule& m, const SubmoduleLattice& lattice, const EndoRing& S,
                       const Bounds& bounds) {
    for (const auto& L : lattice.all) {
        const HomSet homs = hom_set(m, L, m, bounds);
        const auto& basis = homs.source.basis;
        std::vector<std::vector<std::uint32_t>> restrictions;
        restrictions.reserve(S.size());
        for (std::uint32_t f = 0; f < S.size(); ++f) {
            std::vector<std::uint32_t> r(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) r[i] = S.apply(f, basis[i]);
            restrictions.push_back(std::move(r));
        }
        std::sort(restrictions.begin(), restrictions.end());
        for (const auto& h : homs.maps)
            if (!std::binary_search(restrictions.begin(), restrictions.end(), h)) return false;
    }
    return true;
}

bool is_self_cogenerator(const FiniteModule& m, const SubmoduleLattice& lattice,
                         const EndoRing& S) {
    (void)m;
    for (const auto& L : lattice.all)
        if (kernel_intersection(S, annihilator(S, L)) != L.members) return false;
    return true;
}

bool is_intrinsically_injective(const FiniteModule& m, const EndoRing& S, const Bounds& bounds) {
    const auto right = enumerate_ideals(S, IdealSide::right, bounds);
    for (const auto& I : right) {
        const Bitset ke = kernel_intersection(S, I.members);
        const Submodule sub = make_submodule(m, ke);
        if (annihilator(S, sub) != I.members) return false;
    }
    return true;
}

}  // namespace fcspec
