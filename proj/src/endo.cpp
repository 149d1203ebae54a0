// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "endo.hpp"

#include <algorithm>
#include <stdexcept>

#include "snf.hpp"

namespace fcspec {

namespace {

// additive generators of a submodule: the minimal generators together with
// their images under the ring additive generators
std::vector<std::uint32_t> additive_generators(const FiniteModule& m, const Submodule& L) {
    std::vector<std::uint32_t> out;
    for (auto g : L.gens) {
        out.push_back(g);
        for (int i = 0; i < m.ring().generator_count(); ++i) out.push_back(m.act_gen(i, g));
    }
    return out;
}

}  // namespace

GroupBasis group_basis(const FiniteModule& m, const Submodule& L) {
    GroupBasis out;
    out.members = bit_indices(L.members);

    const auto gens = additive_generators(m, L);
    std::vector<std::vector<long long>> gen_coords;
    std::vector<long long> moduli(m.orders().begin(), m.orders().end());
    for (auto g : gens) {
        const auto c = m.decode(g);
        gen_coords.emplace_back(c.begin(), c.end());
    }
    if (L.members.count() > 1) {
        const auto dec = cyclic_decomposition(gen_coords, moduli);
        for (std::size_t t = 0; t < dec.orders.size(); ++t) {
            std::uint32_t e = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                e = m.add(e, m.scale(dec.combos[t][i], gens[i]));
            out.basis.push_back(e);
            out.orders.push_back(dec.orders[t]);
        }
    }

    // walk all coordinate tuples to index the members
    long long total = 1;
    for (auto o : out.orders) total *= o;
    if (total != static_cast<long long>(L.members.count()))
        throw std::logic_error("cyclic decomposition does not match the subgroup size");
    std::vector<long long> digits(out.basis.size(), 0);
    for (long long idx = 0; idx < total; ++idx) {
        std::uint32_t e = 0;
        long long rest = idx;
        for (std::size_t t = 0; t < out.basis.size(); ++t) {
            const long long d = rest % out.orders[t];
            rest /= out.orders[t];
            if (d) e = m.add(e, m.scale(d, out.basis[t]));
        }
        if (!L.members.test(e)) throw std::logic_error("basis span leaves the subgroup");
        if (!out.coords_of.emplace(e, static_cast<std::uint32_t>(idx)).second)
            throw std::logic_error("basis span is not a direct sum");
    }
    return out;
}

std::uint32_t HomSet::evaluate(std::size_t map_idx, std::uint32_t x) const {
    const auto& t = *target;
    std::uint32_t rest = source.coords_of.at(x);
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < source.basis.size(); ++i) {
        const auto d = static_cast<long long>(rest % source.orders[i]);
        rest = static_cast<std::uint32_t>(rest / source.orders[i]);
        if (d) out = t.add(out, t.scale(d, maps[map_idx][i]));
    }
    return out;
}

HomSet hom_set(const FiniteModule& src_module, const Submodule& source,
               const FiniteModule& target, const Bounds& bounds) {
    if (&src_module.ring() != &target.ring())
        throw std::logic_error("hom_set requires modules over the same ring");
    HomSet hs;
    hs.source = group_basis(src_module, source);
    hs.target = &target;
    const auto t = hs.source.basis.size();
    const int ring_gens = src_module.ring().generator_count();

    if (t == 0) {
        hs.maps.push_back({});  // only the zero map
        return hs;
    }

    // candidates per basis element: target elements killed by the order
    std::vector<std::vector<std::uint32_t>> candidates(t);
    double candidate_space = 1.0;
    for (std::size_t i = 0; i < t; ++i) {
        for (std::uint32_t y = 0; y < target.size(); ++y)
            if (target.scale(hs.source.orders[i], y) == 0) candidates[i].push_back(y);
        candidate_space *= static_cast<double>(candidates[i].size());
    }

    // linearity data: coordinates of g . b_i in the source basis
    std::vector<std::vector<std::vector<long long>>> act_coords(
        ring_gens, std::vector<std::vector<long long>>(t));
    for (int g = 0; g < ring_gens; ++g)
        for (std::size_t i = 0; i < t; ++i) {
            std::uint32_t packed =
                hs.source.coords_of.at(src_module.act_gen(g, hs.source.basis[i]));
            std::vector<long long> c(t);
            for (std::size_t j = 0; j < t; ++j) {
                c[j] = packed % hs.source.orders[j];
                packed = static_cast<std::uint32_t>(packed / hs.source.orders[j]);
            }
            act_coords[g][i] = std::move(c);
        }

    auto linear_ok = [&](const std::vector<std::uint32_t>& images) {
        for (int g = 0; g < ring_gens; ++g)
            for (std::size_t i = 0; i < t; ++i) {
                const std::uint32_t lhs = target.act_gen(g, images[i]);
                std::uint32_t rhs = 0;
                for (std::size_t j = 0; j < t; ++j) {
                    const long long c = act_coords[g][i][j];
                    if (c) rhs = target.add(rhs, target.scale(c, images[j]));
                }
                if (lhs != rhs) return false;
            }
        return true;
    };

    if (candidate_space <= static_cast<double>(bounds.max_hom_candidates)) {
        std::vector<std::size_t> pos(t, 0);
        std::vector<std::uint32_t> images(t);
        while (true) {
            for (std::size_t i = 0; i < t; ++i) images[i] = candidates[i][pos[i]];
            if (linear_ok(images)) {
                hs.maps.push_back(images);
                if (static_cast<long>(hs.maps.size()) > bounds.max_homs)
                    throw BoundExceeded("hom set exceeds " + std::to_string(bounds.max_homs) +
                                        " maps");
            }
            std::size_t i = 0;
            while (i < t && ++pos[i] == candidates[i].size()) pos[i++] = 0;
            if (i == t) break;
        }
    } else {
        // solve the congruence system for the basis images
        const auto& fo = target.orders();
        const std::size_t mm = fo.size();
        const std::size_t unknowns = t * mm;  // coordinate l of image i at i*mm + l
        std::vector<std::vector<long long>> A;
        std::vector<long long> row_moduli;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t l = 0; l < mm; ++l) {
                std::vector<long long> row(unknowns, 0);
                row[i * mm + l] = hs.source.orders[i] % fo[l];
                A.push_back(std::move(row));
                row_moduli.push_back(fo[l]);
            }
        const auto& act = target.action_matrices();
        for (int g = 0; g < ring_gens; ++g)
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t l = 0; l < mm; ++l) {
                    std::vector<long long> row(unknowns, 0);
                    for (std::size_t lp = 0; lp < mm; ++lp)
                        row[i * mm + lp] += act[g][lp][l];
                    for (std::size_t j = 0; j < t; ++j)
                        row[j * mm + l] -= act_coords[g][i][j];
                    A.push_back(std::move(row));
                    row_moduli.push_back(fo[l]);
                }
        const auto sol_gens = congruence_kernel(A, row_moduli, unknowns);

        // close the generated solution subgroup under addition
        auto to_images = [&](const std::vector<long long>& u) {
            std::vector<std::uint32_t> images(t);
            for (std::size_t i = 0; i < t; ++i) {
                std::vector<int> coeffs(mm);
                for (std::size_t l = 0; l < mm; ++l) {
                    long long v = u[i * mm + l] % fo[l];
                    if (v < 0) v += fo[l];
                    coeffs[l] = static_cast<int>(v);
                }
                images[i] = target.encode(coeffs);
            }
            return images;
        };
        std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
        std::vector<std::vector<std::uint32_t>> work;
        std::vector<std::uint32_t> zero(t, 0);
        seen.emplace(zero, 0);
        work.push_back(zero);
        std::vector<std::vector<std::uint32_t>> gen_images;
        for (const auto& u : sol_gens) gen_images.push_back(to_images(u));
        for (std::size_t w = 0; w < work.size(); ++w) {
            const auto cur = work[w];
            for (const auto& gi : gen_images) {
                std::vector<std::uint32_t> nxt(t);
                for (std::size_t i = 0; i < t; ++i) nxt[i] = target.add(cur[i], gi[i]);
                if (seen.emplace(nxt, 0).second) {
                    work.push_back(std::move(nxt));
                    if (static_cast<long>(work.size()) > bounds.max_homs)
                        throw BoundExceeded("hom set exceeds " + std::to_string(bounds.max_homs) +
                                            " maps");
                }
            }
        }
        for (const auto& [images, _] : seen) {
            (void)_;
            hs.maps.push_back(images);
        }
    }

    std::sort(hs.maps.begin(), hs.maps.end());
    return hs;
}

std::uint32_t EndoRing::star(std::uint32_t f, std::uint32_t g) const {
    if (!compose_.empty()) return compose_[f * size() + g];
    std::vector<std::uint32_t> images(basis_.basis.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = value_[g][value_[f][basis_.basis[i]]];
    return lookup_.at(images);
}

std::uint32_t EndoRing::add(std::uint32_t f, std::uint32_t g) const {
    if (!add_.empty()) return add_[f * size() + g];
    std::vector<std::uint32_t> images(basis_.basis.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = module_->add(images_[f][i], images_[g][i]);
    return lookup_.at(images);
}

std::uint32_t EndoRing::neg(std::uint32_t f) const {
    if (!neg_.empty()) return neg_[f];
    std::vector<std::uint32_t> images(basis_.basis.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = module_->neg(images_[f][i]);
    return lookup_.at(images);
}

std::vector<std::vector<int>> EndoRing::matrix_of(std::uint32_t f) const {
    const int m = module_->generator_count();
    std::vector<std::vector<int>> out(m);
    for (int i = 0; i < m; ++i) out[i] = module_->decode(value_[f][module_->gen_index(i)]);
    return out;
}

EndoRing EndoRing::make(const FiniteModule& m, const Bounds& bounds) {
    EndoRing S;
    S.module_ = &m;

    Bitset full(m.size());
    full.set();
    const Submodule whole = make_submodule(m, std::move(full));
    HomSet hs = hom_set(m, whole, m, bounds);
    if (static_cast<long>(hs.maps.size()) > bounds.max_elements)
        throw BoundExceeded("endomorphism ring has more than " +
                            std::to_string(bounds.max_elements) + " elements");

    S.basis_ = std::move(hs.source);
    S.images_ = std::move(hs.maps);
    for (std::uint32_t f = 0; f < S.images_.size(); ++f) S.lookup_.emplace(S.images_[f], f);

    S.value_.assign(S.images_.size(), std::vector<std::uint32_t>(m.size()));
    HomSet eval;
    eval.source = S.basis_;
    eval.target = &m;
    eval.maps = S.images_;
    for (std::uint32_t f = 0; f < S.images_.size(); ++f)
        for (std::uint32_t x = 0; x < m.size(); ++x) S.value_[f][x] = eval.evaluate(f, x);

    for (std::uint32_t f = 0; f < S.size(); ++f) {
        bool is_zero = true, is_id = true;
        for (std::uint32_t x = 0; x < m.size(); ++x) {
            is_zero &= S.value_[f][x] == 0;
            is_id &= S.value_[f][x] == x;
        }
        if (is_zero) S.zero_ = f;
        if (is_id) S.identity_ = f;
    }

    if (static_cast<std::size_t>(S.size()) * S.size() <= (1u << 22)) {
        S.compose_.resize(static_cast<std::size_t>(S.size()) * S.size());
        std::vector<std::uint32_t> images(S.basis_.basis.size());
        for (std::uint32_t f = 0; f < S.size(); ++f)
            for (std::uint32_t g = 0; g < S.size(); ++g) {
                for (std::size_t i = 0; i < images.size(); ++i)
                    images[i] = S.value_[g][S.value_[f][S.basis_.basis[i]]];
                S.compose_[f * S.size() + g] = S.lookup_.at(images);
            }
        std::vector<std::uint32_t> addtab(static_cast<std::size_t>(S.size()) * S.size());
        std::vector<std::uint32_t> negtab(S.size());
        for (std::uint32_t f = 0; f < S.size(); ++f) {
            for (std::size_t i = 0; i < images.size(); ++i)
                images[i] = m.neg(S.images_[f][i]);
            negtab[f] = S.lookup_.at(images);
            for (std::uint32_t g = 0; g < S.size(); ++g) {
                for (std::size_t i = 0; i < images.size(); ++i)
                    images[i] = m.add(S.images_[f][i], S.images_[g][i]);
                addtab[f * S.size() + g] = S.lookup_.at(images);
            }
        }
        S.add_ = std::move(addtab);
        S.neg_ = std::move(negtab);
    }

    // cyclic decomposition of (S, +) to present S as a FiniteRing; a greedy
    // generating set keeps the lattice computation small
    {
        const auto t = S.basis_.basis.size();
        const auto& eo = m.orders();
        const std::size_t mm = eo.size();
        std::vector<long long> moduli;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t l = 0; l < mm; ++l) moduli.push_back(eo[l]);

        std::vector<std::uint32_t> add_gens;
        {
            Bitset span(S.size());
            span.set(S.zero_);
            std::vector<std::uint32_t> present{S.zero_};
            for (std::uint32_t f = 0; f < S.size(); ++f) {
                if (span.test(f)) continue;
                add_gens.push_back(f);
                std::vector<std::uint32_t> work{f};
                while (!work.empty()) {
                    const std::uint32_t x = work.back();
                    work.pop_back();
                    if (span.test(x)) continue;
                    span.set(x);
                    present.push_back(x);
                    work.push_back(S.neg(x));
                    for (auto y : present) work.push_back(S.add(x, y));
                }
            }
        }
        std::vector<std::vector<long long>> gen_coords;
        for (auto f : add_gens) {
            std::vector<long long> c;
            for (std::size_t i = 0; i < t; ++i) {
                const auto d = m.decode(S.images_[f][i]);
                c.insert(c.end(), d.begin(), d.end());
            }
            gen_coords.push_back(std::move(c));
        }
        const auto dec = cyclic_decomposition(gen_coords, moduli);

        std::vector<std::uint32_t> ring_basis;  // endo indices of the cyclic basis
        for (std::size_t b = 0; b < dec.orders.size(); ++b) {
            std::vector<std::uint32_t> images(t, 0);
            for (std::size_t f = 0; f < add_gens.size(); ++f) {
                const long long c = dec.combos[b][f];
                if (!c) continue;
                for (std::size_t i = 0; i < t; ++i)
                    images[i] = m.add(images[i], m.scale(c, S.images_[add_gens[f]][i]));
            }
            ring_basis.push_back(S.lookup_.at(images));
        }

        long long total = 1;
        for (auto o : dec.orders) total *= o;
        if (total != static_cast<long long>(S.size()))
            throw std::logic_error("endomorphism ring decomposition size mismatch");

        const std::size_t k = dec.orders.size();
        S.ring_to_endo_.assign(S.size(), 0);
        S.endo_to_ring_.assign(S.size(), 0);
        std::vector<std::uint32_t> images(t);
        for (long long idx = 0; idx < total; ++idx) {
            std::fill(images.begin(), images.end(), 0);
            long long rest = idx;
            for (std::size_t b = 0; b < k; ++b) {
                const long long d = rest % dec.orders[b];
                rest /= dec.orders[b];
                if (!d) continue;
                for (std::size_t i = 0; i < t; ++i)
                    images[i] = m.add(images[i], m.scale(d, S.images_[ring_basis[b]][i]));
            }
            const std::uint32_t f = S.lookup_.at(images);
            S.ring_to_endo_[static_cast<std::uint32_t>(idx)] = f;
            S.endo_to_ring_[f] = static_cast<std::uint32_t>(idx);
        }

        std::vector<int> orders_int(dec.orders.begin(), dec.orders.end());
        std::vector<std::vector<std::vector<int>>> mul(
            k, std::vector<std::vector<int>>(k, std::vector<int>(k)));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                const std::uint32_t prod = S.star(ring_basis[a], ring_basis[b]);
                std::uint32_t packed = S.endo_to_ring_[prod];
                for (std::size_t c = 0; c < k; ++c) {
                    mul[a][b][c] = static_cast<int>(packed % dec.orders[c]);
                    packed = static_cast<std::uint32_t>(packed / dec.orders[c]);
                }
            }
        std::vector<int> one(k);
        {
            std::uint32_t packed = S.endo_to_ring_[S.identity_];
            for (std::size_t c = 0; c < k; ++c) {
                one[c] = static_cast<int>(packed % dec.orders[c]);
                packed = static_cast<std::uint32_t>(packed / dec.orders[c]);
            }
        }
        S.as_ring_ = std::make_shared<const FiniteRing>(
            FiniteRing::make(std::move(orders_int), std::move(mul), std::move(one), bounds,
                             RingValidation::generator_level));
    }
    return S;
}

Bitset annihilator(const EndoRing& S, const Submodule& L) {
    Bitset out(S.size());
    const auto gens = L.gens;
    for (std::uint32_t f = 0; f < S.size(); ++f) {
        bool kills = true;
        for (auto g : gens)
            if (S.apply(f, g) != 0) {
                kills = false;
                break;
            }
        if (kills) out.set(f);
    }
    return out;
}

Bitset kernel_intersection(const EndoRing& S, const Bitset& ideal_members) {
    const auto n = S.module().size();
    Bitset out(n);
    out.set();
    for (auto f = ideal_members.find_first(); f != Bitset::npos; f = ideal_members.find_next(f))
        for (std::uint32_t x = 0; x < n; ++x)
            if (out.test(x) && S.apply(static_cast<std::uint32_t>(f), x) != 0) out.reset(x);
    return out;
}

Sidedness ideal_sidedness(const EndoRing& S, const Bitset& members) {
    Sidedness sd{true, true};
    for (auto f = members.find_first(); f != Bitset::npos; f = members.find_next(f)) {
        for (std::uint32_t s = 0; s < S.size() && (sd.left || sd.right); ++s) {
            if (sd.left && !members.test(S.star(s, static_cast<std::uint32_t>(f)))) sd.left = false;
            if (sd.right && !members.test(S.star(static_cast<std::uint32_t>(f), s)))
                sd.right = false;
        }
        if (!sd.left && !sd.right) break;
    }
    return sd;
}

bool is_fully_invariant(const EndoRing& S, const Submodule& L) {
    for (std::uint32_t f = 0; f < S.size(); ++f)
        for (auto g : L.gens)
            if (!L.members.test(S.apply(f, g))) return false;
    return true;
}

}  // namespace fcspec
