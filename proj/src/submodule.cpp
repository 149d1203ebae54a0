// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "submodule.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace fcspec {

Bitset submodule_closure(const FiniteModule& m, const std::vector<std::uint32_t>& gens) {
    Bitset set(m.size());
    set.set(0);
    std::vector<std::uint32_t> present{0};
    std::deque<std::uint32_t> work(gens.begin(), gens.end());
    const int k = m.ring().generator_count();
    while (!work.empty()) {
        const std::uint32_t x = work.front();
        work.pop_front();
        if (set.test(x)) continue;
        set.set(x);
        present.push_back(x);
        work.push_back(m.neg(x));
        for (int g = 0; g < k; ++g) work.push_back(m.act_gen(g, x));
        for (std::uint32_t y : present) work.push_back(m.add(x, y));
    }
    return set;
}

Bitset additive_span(const FiniteModule& m, const Bitset& seed) {
    Bitset set(m.size());
    set.set(0);
    std::vector<std::uint32_t> present{0};
    std::deque<std::uint32_t> work;
    for (auto i = seed.find_first(); i != Bitset::npos; i = seed.find_next(i))
        work.push_back(static_cast<std::uint32_t>(i));
    while (!work.empty()) {
        const std::uint32_t x = work.front();
        work.pop_front();
        if (set.test(x)) continue;
        set.set(x);
        present.push_back(x);
        work.push_back(m.neg(x));
        for (std::uint32_t y : present) work.push_back(m.add(x, y));
    }
    return set;
}

Submodule make_submodule(const FiniteModule& m, Bitset members) {
    Submodule s;
    s.members = std::move(members);
    if (s.members.count() == 1) {
        s.gens = {0};
        return s;
    }
    Bitset span(m.size());
    span.set(0);
    while (span != s.members) {
        const Bitset missing = s.members & ~span;
        const auto x = static_cast<std::uint32_t>(missing.find_first());
        s.gens.push_back(x);
        span = submodule_closure(m, s.gens);
    }
    return s;
}

Submodule cyclic_submodule(const FiniteModule& m, std::uint32_t x) {
    return make_submodule(m, submodule_closure(m, {x}));
}

std::string submodule_label(const FiniteModule& m, const Submodule& s) {
    std::ostringstream os;
    os << "⟨";
    for (std::size_t t = 0; t < s.gens.size(); ++t) {
        if (t) os << ",";
        const auto coeffs = m.decode(s.gens[t]);
        if (coeffs.size() == 1) {
            os << coeffs[0];
        } else {
            os << "(";
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (i) os << ",";
                os << coeffs[i];
            }
            os << ")";
        }
    }
    os << "⟩";
    return os.str();
}

Bitset submodule_join(const FiniteModule& m, const Bitset& a, const Bitset& b) {
    Bitset out(m.size());
    for (auto i = a.find_first(); i != Bitset::npos; i = a.find_next(i))
        for (auto j = b.find_first(); j != Bitset::npos; j = b.find_next(j))
            out.set(m.add(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
    return out;
}

SubmoduleLattice enumerate_submodules(const FiniteModule& m, const Bounds& bounds) {
    std::vector<Bitset> subs;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
    auto insert = [&](Bitset b) -> bool {
        if (seen.count(b)) return false;
        seen.emplace(b, static_cast<std::uint32_t>(subs.size()));
        subs.push_back(std::move(b));
        if (static_cast<long>(subs.size()) > bounds.max_submodules)
            throw BoundExceeded("submodule count exceeds " +
                                std::to_string(bounds.max_submodules));
        return true;
    };

    for (std::uint32_t x = 0; x < m.size(); ++x) insert(submodule_closure(m, {x}));

    // close under pairwise join; newly found submodules re-enter the loop
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (subs[j].is_subset_of(subs[i])) continue;
            insert(submodule_join(m, subs[i], subs[j]));
        }

    std::sort(subs.begin(), subs.end(), canonical_less);
    SubmoduleLattice lat;
    lat.all.reserve(subs.size());
    for (auto& b : subs) lat.all.push_back(make_submodule(m, std::move(b)));
    for (std::uint32_t i = 0; i < lat.size(); ++i) lat.index_of.emplace(lat.all[i].members, i);
    lat.zero_index = 0;
    lat.full_index = lat.size() - 1;
    return lat;
}

Bitset colon_ring(const FiniteModule& m, const Bitset& L) {
    const auto& R = m.ring();
    Bitset out(R.size());
    const int gens = m.generator_count();
    for (std::uint32_t r = 0; r < R.size(); ++r) {
        bool ok = true;
        for (int i = 0; ok && i < gens; ++i) ok = L.test(m.act(r, m.gen_index(i)));
        if (ok) out.set(r);
    }
    return out;
}

Bitset ring_annihilator(const FiniteModule& m, const Submodule& X) {
    const auto& R = m.ring();
    // additive generators of X: ring-generator images of the minimal
    // generator list (1 is an additive combination of the generators)
    std::vector<std::uint32_t> span_gens;
    for (auto g : X.gens) {
        span_gens.push_back(g);
        for (int i = 0; i < R.generator_count(); ++i) span_gens.push_back(m.act_gen(i, g));
    }
    Bitset out(R.size());
    for (std::uint32_t r = 0; r < R.size(); ++r) {
        bool ok = true;
        for (auto x : span_gens)
            if (m.act(r, x) != 0) {
                ok = false;
                break;
            }
        if (ok) out.set(r);
    }
    return out;
}

Submodule colon_module(const FiniteModule& m, const Bitset& L, const Bitset& ring_subset) {
    Bitset out(m.size());
    const auto rs = bit_indices(ring_subset);
    for (std::uint32_t x = 0; x < m.size(); ++x) {
        bool ok = true;
        for (auto r : rs)
            if (!L.test(m.act(r, x))) {
                ok = false;
                break;
            }
        if (ok) out.set(x);
    }
    for (auto i = out.find_first(); i != Bitset::npos; i = out.find_next(i))
        for (int g = 0; g < m.ring().generator_count(); ++g)
            if (!out.test(m.act_gen(g, static_cast<std::uint32_t>(i))))
                throw NotASubmoduleError(
                    "colon set is not closed under the ring action; the given "
                    "ring subset is not a suitable ideal");
    return make_submodule(m, std::move(out));
}

}  // namespace fcspec
