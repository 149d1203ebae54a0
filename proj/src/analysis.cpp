// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcspec {

Bitset ModuleAnalysis::v_fc(std::uint32_t L) const { return v_fc_members(sub(L).members); }

Bitset ModuleAnalysis::v_fc_members(const Bitset& members) const {
    Bitset out(points.size());
    for (std::size_t p = 0; p < points.size(); ++p)
        if (sub(points[p]).members.is_subset_of(members)) out.set(p);
    return out;
}

std::uint32_t ModuleAnalysis::sum_of_points(const Bitset& point_set) const {
    Bitset acc(module->size());
    acc.set(0);
    for (auto p = point_set.find_first(); p != Bitset::npos; p = point_set.find_next(p))
        acc = submodule_join(*module, acc, sub(points[p]).members);
    return lattice.index(acc);
}

std::uint32_t ModuleAnalysis::corad(std::uint32_t L) const {
    return sum_of_points(v_fc(L));
}

std::vector<std::uint32_t> ModuleAnalysis::maximal_under(std::uint32_t L) const {
    const Bitset under = v_fc(L);
    std::vector<std::uint32_t> out;
    for (auto p = under.find_first(); p != Bitset::npos; p = under.find_next(p)) {
        bool maximal = true;
        for (auto q = under.find_first(); q != Bitset::npos; q = under.find_next(q)) {
            if (p == q) continue;
            if (lattice.leq(points[p], points[q]) && points[p] != points[q]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(static_cast<std::uint32_t>(p));
    }
    return out;
}

std::uint32_t ModuleAnalysis::odot(std::uint32_t X, std::uint32_t Y) const {
    return odot_fi[fi_pos[X]][fi_pos[Y]];
}

bool ModuleAnalysis::is_fully_coprime_in(std::uint32_t K) const {
    if (K == lattice.zero_index || !fully_inv[K]) return false;
    for (std::size_t x = 0; x < fi.size(); ++x)
        for (std::size_t y = 0; y < fi.size(); ++y) {
            if (!lattice.leq(K, odot_fi[x][y])) continue;
            if (!lattice.leq(K, fi[x]) && !lattice.leq(K, fi[y])) return false;
        }
    return true;
}

Bitset odot_members(const ModuleAnalysis& a, const Bitset& X, const Bitset& Y) {
    const auto n = a.module->size();
    Bitset out(n);
    out.set();
    const Bitset anx = a.an[a.lattice.index(X)];
    for (auto f = anx.find_first(); f != Bitset::npos; f = anx.find_next(f))
        for (std::uint32_t x = 0; x < n; ++x)
            if (out.test(x) && !Y.test(a.S.apply(static_cast<std::uint32_t>(f), x))) out.reset(x);
    return out;
}

Bitset odot_via_ke(const ModuleAnalysis& a, const Bitset& X, const Bitset& Y) {
    const Bitset anx = a.an[a.lattice.index(X)];
    const Bitset any = a.an[a.lattice.index(Y)];
    Bitset products(a.S.size());
    for (auto f = anx.find_first(); f != Bitset::npos; f = anx.find_next(f))
        for (auto g = any.find_first(); g != Bitset::npos; g = any.find_next(g))
            products.set(a.S.star(static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(g)));
    return kernel_intersection(a.S, products);
}

namespace {

void compute_spectrum(ModuleAnalysis& a) {
    const auto& m = *a.module;
    const auto nfi = a.fi.size();
    a.odot_fi.assign(nfi, std::vector<std::uint32_t>(nfi));
    for (std::size_t x = 0; x < nfi; ++x)
        for (std::size_t y = 0; y < nfi; ++y) {
            const Bitset o = odot_members(a, a.sub(a.fi[x]).members, a.sub(a.fi[y]).members);
            const auto it = a.lattice.index_of.find(o);
            if (it == a.lattice.index_of.end())
                throw std::logic_error("odot result is not a submodule");
            a.odot_fi[x][y] = it->second;
        }

    a.point_pos.assign(a.lattice.size(), ModuleAnalysis::npos);
    for (auto L : a.fi) {
        if (L == a.lattice.zero_index) continue;
        if (a.is_fully_coprime_in(L)) {
            a.point_pos[L] = static_cast<std::uint32_t>(a.points.size());
            a.points.push_back(L);
        }
    }
    (void)m;
}

void compute_simples(ModuleAnalysis& a) {
    const auto n = a.lattice.size();
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i == a.lattice.zero_index) continue;
        bool minimal = true;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (j == a.lattice.zero_index || j == i) continue;
            if (a.lattice.leq(j, i)) {
                minimal = false;
                break;
            }
        }
        if (minimal) a.simples.push_back(i);
    }
    for (auto i : a.fi) {
        if (i == a.lattice.zero_index) continue;
        bool minimal = true;
        for (auto j : a.fi) {
            if (j == a.lattice.zero_index || j == i) continue;
            if (a.lattice.leq(j, i)) {
                minimal = false;
                break;
            }
        }
        if (minimal) a.fi_simples.push_back(i);
    }
    Bitset soc(a.module->size());
    soc.set(0);
    for (auto s : a.simples) soc = submodule_join(*a.module, soc, a.sub(s).members);
    a.socle = a.lattice.index(soc);
}

bool min_property_by_definition(const ModuleAnalysis& a) {
    for (auto s : a.simples) {
        Bitset others(a.module->size());
        others.set(0);
        for (auto t : a.simples)
            if (t != s) others = submodule_join(*a.module, others, a.sub(t).members);
        if (a.sub(s).members.is_subset_of(others)) return false;
    }
    return true;
}

bool min_property_by_isomorphism(const ModuleAnalysis& a) {
    const auto& m = *a.module;
    for (std::size_t i = 0; i < a.simples.size(); ++i) {
        const HomSet homs = hom_set(m, a.sub(a.simples[i]), m, a.bounds);
        for (std::size_t j = 0; j < a.simples.size(); ++j) {
            if (i == j) continue;
            const auto& target = a.sub(a.simples[j]).members;
            for (const auto& images : homs.maps) {
                bool nonzero = false, inside = true;
                for (auto y : images) {
                    nonzero |= y != 0;
                    inside &= target.test(y);
                }
                if (nonzero && inside) return false;  // isomorphic pair found
            }
        }
    }
    return true;
}

void compute_predicates(ModuleAnalysis& a) {
    const auto& m = *a.module;
    auto& p = a.preds;
    const auto n = a.lattice.size();
    const auto zero = a.lattice.zero_index;
    const auto full = a.lattice.full_index;

    p.duo = a.fi.size() == a.lattice.size();

    {
        Bitset acc(m.size());
        acc.set();
        for (std::uint32_t i = 0; i < n; ++i)
            if (i != zero) acc &= a.sub(i).members;
        p.colocal = acc.count() > 1;
    }
    {
        p.uniform = true;
        for (std::uint32_t i = 0; i < n && p.uniform; ++i)
            for (std::uint32_t j = 0; j < n && p.uniform; ++j) {
                if (i == zero || j == zero) continue;
                if ((a.sub(i).members & a.sub(j).members).count() <= 1) p.uniform = false;
            }
    }
    {
        p.atomic = true;
        for (std::uint32_t i = 0; i < n && p.atomic; ++i) {
            if (i == zero) continue;
            bool has = false;
            for (auto s : a.simples)
                if (a.lattice.leq(s, i)) {
                    has = true;
                    break;
                }
            p.atomic = has;
        }
    }
    {
        p.fi_atomic = true;
        for (auto i : a.fi) {
            if (i == zero) continue;
            bool has = false;
            for (auto s : a.fi_simples)
                if (a.lattice.leq(s, i)) {
                    has = true;
                    break;
                }
            if (!has) {
                p.fi_atomic = false;
                break;
            }
        }
    }
    {
        p.multiplication = true;
        for (std::uint32_t i = 0; i < n && p.multiplication; ++i) {
            const Bitset I = colon_ring(m, a.sub(i).members);
            Bitset products(m.size());
            products.set(0);
            for (auto r = I.find_first(); r != Bitset::npos; r = I.find_next(r))
                for (std::uint32_t x = 0; x < m.size(); ++x)
                    products.set(m.act(static_cast<std::uint32_t>(r), x));
            if (additive_span(m, products) != a.sub(i).members) p.multiplication = false;
        }
    }
    {
        p.comultiplication = true;
        Bitset zero_set(m.size());
        zero_set.set(0);
        for (std::uint32_t i = 0; i < n && p.comultiplication; ++i) {
            const Bitset ann = ring_annihilator(m, a.sub(i));
            const Submodule back = colon_module(m, zero_set, ann);
            if (back.members != a.sub(i).members) p.comultiplication = false;
        }
    }
    {
        p.b_coprime = true;
        for (std::uint32_t i = 0; i < n && p.b_coprime; ++i) {
            if (i == full) continue;
            Bitset seeds(m.size());
            seeds.set(0);
            const Bitset& anL = a.an[i];
            for (auto f = anL.find_first(); f != Bitset::npos; f = anL.find_next(f))
                for (auto b : a.S.basis().basis)
                    seeds.set(a.S.apply(static_cast<std::uint32_t>(f), b));
            if (additive_span(m, seeds).count() != m.size()) p.b_coprime = false;
        }
    }

    p.self_injective = is_self_injective(m, a.lattice, a.S, a.bounds);
    p.self_cogenerator = is_self_cogenerator(m, a.lattice, a.S);
    p.intrinsically_injective = is_intrinsically_injective(m, a.S, a.bounds);
    p.s_iad = p.self_injective && p.atomic && p.duo;

    p.min_property = min_property_by_definition(a);
    if (p.min_property != min_property_by_isomorphism(a))
        throw std::logic_error("min-property computations disagree");

    p.fc_coprimeless = a.points.empty();
    p.fc_coradical_module = a.corad(full) == full;
    p.fully_coprime_module = a.is_point(full);

    p.every_prime_maximal_s = every_prime_maximal(a.S, a.two_sided, a.primes);

    {
        // the variety family over all submodules, checked for union closure
        std::vector<Bitset> family;
        std::unordered_map<Bitset, char, BitsetHash> seen;
        for (std::uint32_t i = 0; i < n; ++i) {
            Bitset v = a.v_fc(i);
            if (seen.emplace(v, 1).second) family.push_back(std::move(v));
        }
        p.top_fc = true;
        for (std::size_t i = 0; i < family.size() && p.top_fc; ++i)
            for (std::size_t j = 0; j < family.size() && p.top_fc; ++j)
                if (!seen.count(family[i] | family[j])) p.top_fc = false;
    }
}

}  // namespace

ModuleAnalysis analyze_spectrum_only(FiniteModule m, const Bounds& bounds) {
    ModuleAnalysis a;
    a.owned = std::make_shared<const FiniteModule>(std::move(m));
    a.module = a.owned.get();
    a.bounds = bounds;
    a.lattice = enumerate_submodules(*a.module, bounds);
    a.S = EndoRing::make(*a.module, bounds);

    const auto n = a.lattice.size();
    a.an.reserve(n);
    a.an_side.reserve(n);
    a.fully_inv.assign(n, 0);
    a.fi_pos.assign(n, ModuleAnalysis::npos);
    for (std::uint32_t i = 0; i < n; ++i) {
        a.an.push_back(annihilator(a.S, a.sub(i)));
        a.an_side.push_back(ideal_sidedness(a.S, a.an.back()));
        a.fully_inv[i] = is_fully_invariant(a.S, a.sub(i)) ? 1 : 0;
        if (a.fully_inv[i]) {
            a.fi_pos[i] = static_cast<std::uint32_t>(a.fi.size());
            a.fi.push_back(i);
        }
    }

    // An(L) of a fully invariant submodule is two-sided; anything else is an
    // implementation bug upstream.
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!a.an_side[i].right)
            throw std::logic_error("An(L) must always be a right ideal");
        if (a.fully_inv[i] && !a.an_side[i].left)
            throw std::logic_error("An(L) of a fully invariant submodule must be two-sided");
    }

    compute_spectrum(a);
    compute_simples(a);
    return a;
}

ModuleAnalysis analyze(FiniteModule m, const Bounds& bounds) {
    ModuleAnalysis a = analyze_spectrum_only(std::move(m), bounds);

    a.two_sided = enumerate_ideals(a.S, IdealSide::two_sided, bounds);
    a.primes = prime_ideals(a.S, a.two_sided);
    a.prad = prime_radical(a.S, a.primes);
    for (auto L : a.fi) {
        if (L == a.lattice.zero_index) continue;
        for (const auto& prime : a.primes)
            if (a.an[L] == prime) {
                a.e_primes.push_back(L);
                break;
            }
    }

    compute_predicates(a);
    return a;
}

}  // namespace fcspec
