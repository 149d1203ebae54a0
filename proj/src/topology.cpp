// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "topology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fcspec {

namespace {

constexpr std::size_t kExhaustiveSubsetCap = 15;
constexpr int kSubsetSamples = 10000;
constexpr std::uint64_t kSubsetSeed = 0x5eedf00du;

// deterministic visit of all subsets when 2^points is small, else a seeded
// sample of subsets
template <typename F>
void for_each_subset(std::uint32_t points, F&& visit) {
    if (points <= kExhaustiveSubsetCap) {
        const std::uint64_t total = 1ull << points;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Bitset s(points);
            for (std::uint32_t p = 0; p < points; ++p)
                if (mask & (1ull << p)) s.set(p);
            visit(std::move(s));
        }
    } else {
        std::mt19937_64 rng(kSubsetSeed);
        for (int i = 0; i < kSubsetSamples; ++i) {
            Bitset s(points);
            for (std::uint32_t p = 0; p < points; ++p)
                if (rng() & 1) s.set(p);
            visit(std::move(s));
        }
    }
}

bool subsets_exhaustive(std::uint32_t points) { return points <= kExhaustiveSubsetCap; }

}  // namespace

FiniteSpace build_space(const ModuleAnalysis& a, SpaceKind kind) {
    FiniteSpace sp;
    sp.kind = kind;
    sp.point_count = static_cast<std::uint32_t>(a.points.size());
    sp.variety_of.assign(a.lattice.size(), 0);

    std::vector<Bitset> family;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
    std::vector<std::uint32_t> generating;
    if (kind == SpaceKind::all_submodules) {
        generating.resize(a.lattice.size());
        for (std::uint32_t i = 0; i < a.lattice.size(); ++i) generating[i] = i;
    } else {
        generating = a.fi;
    }
    for (auto L : generating) {
        Bitset v = a.v_fc(L);
        if (!seen.count(v)) {
            seen.emplace(v, 0);
            family.push_back(std::move(v));
        }
    }
    std::sort(family.begin(), family.end(), canonical_less);
    sp.closed = std::move(family);
    for (std::uint32_t c = 0; c < sp.closed.size(); ++c) sp.closed_lookup[sp.closed[c]] = c;
    // varieties of arbitrary submodules land in the family because
    // V(L) = V(Corad(L)) and coradicals are fully invariant
    for (std::uint32_t i = 0; i < a.lattice.size(); ++i)
        sp.variety_of[i] = sp.closed_lookup.at(a.v_fc(i));
    for (const auto& c : sp.closed) sp.open.push_back(~c);
    sp.closed_rep.reserve(sp.closed.size());
    for (const auto& c : sp.closed) sp.closed_rep.push_back(a.sum_of_points(c));

    // axioms: empty and full present, closed under pairwise meets and joins
    Bitset empty(sp.point_count), full(sp.point_count);
    full.set();
    sp.axioms_ok = sp.closed_lookup.count(empty) && sp.closed_lookup.count(full);
    sp.is_top_fc = true;
    for (std::size_t i = 0; i < sp.closed.size() && sp.axioms_ok; ++i)
        for (std::size_t j = 0; j < sp.closed.size(); ++j) {
            if (!sp.closed_lookup.count(sp.closed[i] & sp.closed[j])) {
                sp.axioms_ok = false;
                break;
            }
            if (!sp.closed_lookup.count(sp.closed[i] | sp.closed[j])) {
                sp.is_top_fc = false;
                sp.axioms_ok = false;
                break;
            }
        }
    return sp;
}

Bitset closure_formula(const ModuleAnalysis& a, const FiniteSpace& sp, const Bitset& subset) {
    if (subset.none()) return Bitset(sp.point_count);
    return a.v_fc(a.sum_of_points(subset));
}

Bitset closure_smallest(const FiniteSpace& sp, const Bitset& subset) {
    Bitset smallest(sp.point_count);
    smallest.set();
    for (const auto& c : sp.closed)
        if (subset.is_subset_of(c) && c.count() < smallest.count()) smallest = c;
    return smallest;
}

Bitset closure_of(const ModuleAnalysis& a, const FiniteSpace& sp, const Bitset& subset) {
    const Bitset by_formula = closure_formula(a, sp, subset);
    if (by_formula != closure_smallest(sp, subset))
        throw std::logic_error("closure formula disagrees with the closed-set family");
    return by_formula;
}

SeparationRecord separation(const FiniteSpace& sp) {
    SeparationRecord r;
    const auto n = sp.point_count;
    auto point_closure = [&](std::uint32_t p) {
        Bitset single(n);
        single.set(p);
        Bitset smallest(n);
        smallest.set();
        for (const auto& c : sp.closed)
            if (single.is_subset_of(c) && c.count() < smallest.count()) smallest = c;
        return smallest;
    };
    r.t0 = true;
    for (std::uint32_t p = 0; p < n && r.t0; ++p)
        for (std::uint32_t q = p + 1; q < n; ++q)
            if (point_closure(p) == point_closure(q)) {
                r.t0 = false;
                break;
            }
    r.t1 = true;
    for (std::uint32_t p = 0; p < n; ++p) {
        Bitset single(n);
        single.set(p);
        if (!sp.is_closed(single)) {
            r.t1 = false;
            break;
        }
    }
    r.discrete = true;
    for (std::uint32_t p = 0; p < n; ++p) {
        Bitset single(n);
        single.set(p);
        if (std::find(sp.open.begin(), sp.open.end(), single) == sp.open.end()) {
            r.discrete = false;
            break;
        }
    }
    r.t2 = true;
    for (std::uint32_t p = 0; p < n && r.t2; ++p)
        for (std::uint32_t q = p + 1; q < n && r.t2; ++q) {
            bool separated = false;
            for (const auto& u : sp.open) {
                if (!u.test(p)) continue;
                for (const auto& v : sp.open) {
                    if (!v.test(q)) continue;
                    if ((u & v).none()) {
                        separated = true;
                        break;
                    }
                }
                if (separated) break;
            }
            r.t2 = separated;
        }
    return r;
}

ConnectivityRecord connectivity(const FiniteSpace& sp) {
    ConnectivityRecord r;
    if (sp.point_count == 0) return r;  // all vacuous on the empty space
    Bitset full(sp.point_count);
    full.set();

    r.connected = Tri::yes;
    for (const auto& c : sp.closed) {
        if (c.none() || c == full) continue;
        if (sp.is_closed(~c)) {
            r.connected = Tri::no;
            break;
        }
    }
    r.irreducible = Tri::yes;
    for (std::size_t i = 0; i < sp.closed.size() && r.irreducible == Tri::yes; ++i)
        for (std::size_t j = 0; j < sp.closed.size(); ++j) {
            if (sp.closed[i] == full || sp.closed[j] == full) continue;
            if ((sp.closed[i] | sp.closed[j]) == full) {
                r.irreducible = Tri::no;
                break;
            }
        }
    r.ultraconnected = Tri::yes;
    for (std::size_t i = 0; i < sp.closed.size() && r.ultraconnected == Tri::yes; ++i)
        for (std::size_t j = 0; j < sp.closed.size(); ++j) {
            if (sp.closed[i].none() || sp.closed[j].none()) continue;
            if ((sp.closed[i] & sp.closed[j]).none()) {
                r.ultraconnected = Tri::no;
                break;
            }
        }
    return r;
}

bool subspace_irreducible(const FiniteSpace& sp, const Bitset& subset) {
    if (subset.none()) return false;
    for (std::size_t i = 0; i < sp.closed.size(); ++i)
        for (std::size_t j = 0; j < sp.closed.size(); ++j) {
            if (!subset.is_subset_of(sp.closed[i] | sp.closed[j])) continue;
            if (!subset.is_subset_of(sp.closed[i]) && !subset.is_subset_of(sp.closed[j]))
                return false;
        }
    return true;
}

bool subspace_connected(const FiniteSpace& sp, const Bitset& subset) {
    if (subset.none()) return false;
    std::vector<Bitset> relative;
    std::unordered_map<Bitset, char, BitsetHash> seen;
    for (const auto& c : sp.closed) {
        Bitset r = c & subset;
        if (seen.emplace(r, 1).second) relative.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < relative.size(); ++i)
        for (std::size_t j = 0; j < relative.size(); ++j) {
            if (relative[i].none() || relative[j].none()) continue;
            if ((relative[i] & relative[j]).any()) continue;
            if ((relative[i] | relative[j]) == subset) return false;
        }
    return true;
}

IrreducibleSubsetsReport irreducible_subsets(const ModuleAnalysis& a, const FiniteSpace& sp) {
    IrreducibleSubsetsReport report;
    report.exhaustive = subsets_exhaustive(sp.point_count);
    for_each_subset(sp.point_count, [&](Bitset s) {
        if (s.none()) return;
        ++report.checked;
        const bool irr = subspace_irreducible(sp, s);
        if (irr) ++report.irreducible_count;
        const std::uint32_t h = a.sum_of_points(s);
        const bool coprime = a.is_fully_coprime_in(h);
        if (irr != coprime) report.mismatches.push_back(std::move(s));
    });
    return report;
}

SoberReport generic_points_and_sober(const ModuleAnalysis& a, const FiniteSpace& sp) {
    (void)a;
    SoberReport r;
    r.sober = true;
    std::vector<Bitset> irreducible_closed;
    for (std::uint32_t c = 0; c < sp.closed.size(); ++c) {
        if (!subspace_irreducible(sp, sp.closed[c])) continue;
        irreducible_closed.push_back(sp.closed[c]);
        std::vector<std::uint32_t> generic;
        for (auto p = sp.closed[c].find_first(); p != Bitset::npos;
             p = sp.closed[c].find_next(p)) {
            Bitset single(sp.point_count);
            single.set(p);
            Bitset smallest(sp.point_count);
            smallest.set();
            for (const auto& cl : sp.closed)
                if (single.is_subset_of(cl) && cl.count() < smallest.count()) smallest = cl;
            if (smallest == sp.closed[c]) generic.push_back(static_cast<std::uint32_t>(p));
        }
        if (generic.size() != 1) r.sober = false;
        r.generic_points.emplace_back(c, std::move(generic));
    }
    for (const auto& c : irreducible_closed) {
        bool maximal = true;
        for (const auto& d : irreducible_closed)
            if (c != d && c.is_subset_of(d)) {
                maximal = false;
                break;
            }
        if (maximal) r.components.push_back(c);
    }
    return r;
}

ChainReport chain_conditions(const ModuleAnalysis& a, const FiniteSpace& sp) {
    ChainReport r;
    // longest strict chain in the finite closed-set family witnesses both
    // chain conditions
    const auto n = sp.closed.size();
    std::vector<std::size_t> depth(n, 1);
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return sp.closed[x].count() < sp.closed[y].count();
    });
    for (auto i : order)
        for (auto j : order) {
            if (i == j || sp.closed[j].count() >= sp.closed[i].count()) continue;
            if (sp.closed[j].is_subset_of(sp.closed[i])) depth[i] = std::max(depth[i], depth[j] + 1);
        }
    for (auto d : depth) r.longest_closed_chain = std::max(r.longest_closed_chain, d);
    r.noetherian = true;
    r.artinian = true;

    for (std::uint32_t L = 0; L < a.lattice.size(); ++L)
        if (a.corad(L) == L) r.coradicals.push_back(L);

    r.bijection_ok = r.coradicals.size() == sp.closed.size();
    if (r.bijection_ok) {
        for (auto L : r.coradicals) {
            const Bitset v = a.v_fc(L);
            if (!sp.is_closed(v) || a.sum_of_points(v) != L) {
                r.bijection_ok = false;
                break;
            }
        }
    }
    if (r.bijection_ok) {
        // order preservation both ways
        for (auto L1 : r.coradicals)
            for (auto L2 : r.coradicals) {
                const bool sub_le = a.lattice.leq(L1, L2);
                const bool var_le = a.v_fc(L1).is_subset_of(a.v_fc(L2));
                if (sub_le != var_le) {
                    r.bijection_ok = false;
                    break;
                }
            }
    }
    return r;
}

ComparabilityReport connected_comparability(const ModuleAnalysis& a, const FiniteSpace& sp) {
    ComparabilityReport report;
    report.exhaustive = subsets_exhaustive(sp.point_count);
    for_each_subset(sp.point_count, [&](Bitset s) {
        if (s.count() < 2) return;
        if (!subspace_connected(sp, s)) return;
        ++report.connected_subsets_checked;
        const auto members = bit_indices(s);
        for (auto p : members) {
            bool comparable = false;
            for (auto q : members) {
                if (p == q) continue;
                if (a.lattice.leq(a.points[p], a.points[q]) ||
                    a.lattice.leq(a.points[q], a.points[p])) {
                    comparable = true;
                    break;
                }
            }
            if (!comparable) {
                report.violations.push_back(s);
                break;
            }
        }
    });
    return report;
}

LocallyFiniteReport locally_finite(const ModuleAnalysis& a, const FiniteSpace& sp,
                                   const std::vector<std::uint32_t>& collection_points) {
    LocallyFiniteReport r;
    // every point of a finite space has the whole space as a neighborhood
    // meeting finitely many members; decided from the definition anyway
    r.locally_finite = true;
    for (std::uint32_t p = 0; p < sp.point_count && r.locally_finite; ++p) {
        bool has_neighborhood = false;
        for (const auto& u : sp.open)
            if (u.test(p)) {
                std::size_t meets = 0;
                for (auto k : collection_points)
                    if (u.test(k)) ++meets;
                (void)meets;  // finite by construction
                has_neighborhood = true;
                break;
            }
        r.locally_finite = has_neighborhood;
    }

    // proof-shaped witness: F = sum of collection members not under L gives
    // an open neighborhood X(F) of L meeting exactly the members under L
    r.witnesses_ok = true;
    for (std::uint32_t p = 0; p < sp.point_count && r.witnesses_ok; ++p) {
        const std::uint32_t L = a.points[p];
        Bitset fmembers(a.module->size());
        fmembers.set(0);
        for (auto k : collection_points)
            if (!a.lattice.leq(a.points[k], L))
                fmembers = submodule_join(*a.module, fmembers, a.sub(a.points[k]).members);
        const std::uint32_t F = a.lattice.index(fmembers);
        if (a.lattice.leq(L, F)) {
            r.witnesses_ok = false;
            break;
        }
        for (auto k : collection_points) {
            const bool in_xf = !a.lattice.leq(a.points[k], F);
            const bool under_l = a.lattice.leq(a.points[k], L);
            if (in_xf != under_l) {
                r.witnesses_ok = false;
                break;
            }
        }
    }
    return r;
}

CompactnessRecord compactness(const FiniteSpace& sp) {
    CompactnessRecord r;
    Bitset full(sp.point_count);
    full.set();
    // greedy subcover of the cover by all open sets
    Bitset covered(sp.point_count);
    std::size_t used = 0;
    bool progress = true;
    while (covered != full && progress) {
        progress = false;
        std::size_t best = sp.open.size();
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < sp.open.size(); ++i) {
            const std::size_t gain = (sp.open[i] & ~covered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best != sp.open.size()) {
            covered |= sp.open[best];
            ++used;
            progress = true;
        }
    }
    r.compact = covered == full;
    r.countably_compact = r.compact;
    r.witness_subcover_size = used;
    return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> specialization_cover_edges(
    const ModuleAnalysis& a) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const auto np = a.points.size();
    for (std::uint32_t p = 0; p < np; ++p)
        for (std::uint32_t q = 0; q < np; ++q) {
            if (p == q) continue;
            if (!a.lattice.leq(a.points[p], a.points[q])) continue;
            bool covering = true;
            for (std::uint32_t r = 0; r < np && covering; ++r) {
                if (r == p || r == q) continue;
                if (a.lattice.leq(a.points[p], a.points[r]) &&
                    a.lattice.leq(a.points[r], a.points[q]))
                    covering = false;
            }
            if (covering) edges.emplace_back(p, q);
        }
    return edges;
}

bool validate_isomorphism(const FiniteModule& m, const FiniteModule& n, const ModuleIso& theta) {
    const bool same_ring = &m.ring() == &n.ring() ||
                           (m.ring().additive_orders() == n.ring().additive_orders() &&
                            m.ring().mul_table() == n.ring().mul_table() &&
                            m.ring().one_coefficients() == n.ring().one_coefficients());
    if (!same_ring || m.size() != n.size()) return false;
    if (theta.map.size() != m.size()) return false;
    Bitset image(n.size());
    for (auto y : theta.map) {
        if (y >= n.size()) return false;
        image.set(y);
    }
    if (image.count() != n.size()) return false;
    for (std::uint32_t x = 0; x < m.size(); ++x)
        for (std::uint32_t y = 0; y < m.size(); ++y)
            if (theta.map[m.add(x, y)] != n.add(theta.map[x], theta.map[y])) return false;
    for (int g = 0; g < m.ring().generator_count(); ++g)
        for (std::uint32_t x = 0; x < m.size(); ++x)
            if (theta.map[m.act_gen(g, x)] != n.act_gen(g, theta.map[x])) return false;
    return true;
}

std::pair<FiniteModule, ModuleIso> make_scrambled_copy(const FiniteModule& m, std::uint64_t seed,
                                                       const Bounds& bounds) {
    std::mt19937_64 rng(seed);
    const int mm = m.generator_count();
    const auto& orders = m.orders();

    for (int attempt = 0; attempt < 4096; ++attempt) {
        // random additive automorphism: random generator images of the right
        // order, kept when the induced map is a bijection
        std::vector<std::uint32_t> gen_imgs(mm);
        for (int i = 0; i < mm; ++i) {
            std::uint32_t y;
            do {
                y = static_cast<std::uint32_t>(rng() % m.size());
            } while (m.scale(orders[i], y) != 0);
            gen_imgs[i] = y;
        }
        std::vector<std::uint32_t> map(m.size());
        Bitset image(m.size());
        bool bij = true;
        for (std::uint32_t x = 0; x < m.size() && bij; ++x) {
            std::uint32_t rest = x, acc = 0;
            for (int i = 0; i < mm; ++i) {
                const auto d = static_cast<long long>(rest % orders[i]);
                rest /= static_cast<std::uint32_t>(orders[i]);
                if (d) acc = m.add(acc, m.scale(d, gen_imgs[i]));
            }
            map[x] = acc;
            if (image.test(acc)) bij = false;
            image.set(acc);
        }
        if (!bij) continue;

        // permute the coordinate layout as well
        std::vector<int> perm(mm);
        for (int i = 0; i < mm; ++i) perm[i] = i;
        for (int i = mm - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
        std::vector<int> new_orders(mm);
        for (int i = 0; i < mm; ++i) new_orders[i] = orders[perm[i]];

        // theta = relabel . automorphism
        std::vector<std::uint32_t> relabel(m.size());
        {
            std::vector<std::uint32_t> new_radix(mm);
            std::uint32_t place = 1;
            for (int i = 0; i < mm; ++i) {
                new_radix[i] = place;
                place *= static_cast<std::uint32_t>(new_orders[i]);
            }
            for (std::uint32_t x = 0; x < m.size(); ++x) {
                const auto c = m.decode(x);
                std::uint32_t y = 0;
                for (int i = 0; i < mm; ++i)
                    y += static_cast<std::uint32_t>(c[perm[i]]) * new_radix[i];
                relabel[x] = y;
            }
        }
        ModuleIso theta;
        theta.map.resize(m.size());
        std::vector<std::uint32_t> inverse(m.size());
        for (std::uint32_t x = 0; x < m.size(); ++x) theta.map[x] = relabel[map[x]];
        for (std::uint32_t x = 0; x < m.size(); ++x) inverse[theta.map[x]] = x;

        // conjugated action matrices in the new layout
        const int k = m.ring().generator_count();
        std::vector<std::vector<std::vector<int>>> action(
            k, std::vector<std::vector<int>>(mm, std::vector<int>(mm)));
        std::vector<std::uint32_t> new_radix(mm);
        std::uint32_t place = 1;
        for (int i = 0; i < mm; ++i) {
            new_radix[i] = place;
            place *= static_cast<std::uint32_t>(new_orders[i]);
        }
        for (int g = 0; g < k; ++g)
            for (int i = 0; i < mm; ++i) {
                const std::uint32_t ngen = new_orders[i] > 1 ? new_radix[i] : 0;
                const std::uint32_t img = theta.map[m.act_gen(g, inverse[ngen])];
                std::uint32_t rest = img;
                for (int j = 0; j < mm; ++j) {
                    action[g][i][j] = static_cast<int>(rest % new_orders[j]);
                    rest /= static_cast<std::uint32_t>(new_orders[j]);
                }
            }
        try {
            FiniteModule n = FiniteModule::make(m.ring_ptr(), new_orders, action,
                                                m.name() + "-scrambled", bounds);
            if (validate_isomorphism(m, n, theta)) return {std::move(n), std::move(theta)};
        } catch (const ValidationError&) {
            // fall through to the next attempt
        }
    }
    throw GenerationExhausted("could not build a scrambled isomorphic copy");
}

HomeomorphismReport check_homeomorphism(const ModuleAnalysis& a, const ModuleAnalysis& b,
                                        const ModuleIso& theta) {
    HomeomorphismReport r;
    // induced point map
    std::vector<std::uint32_t> point_map(a.points.size(), ModuleAnalysis::npos);
    bool ok = a.points.size() == b.points.size();
    for (std::size_t p = 0; ok && p < a.points.size(); ++p) {
        Bitset img(b.module->size());
        const auto& mem = a.sub(a.points[p]).members;
        for (auto x = mem.find_first(); x != Bitset::npos; x = mem.find_next(x))
            img.set(theta.map[x]);
        const auto it = b.lattice.index_of.find(img);
        if (it == b.lattice.index_of.end() || !b.is_point(it->second)) {
            ok = false;
            break;
        }
        point_map[p] = b.point_pos[it->second];
    }
    r.spectrum_bijection = ok;
    if (!ok) return r;

    const FiniteSpace sa = build_space(a, SpaceKind::all_submodules);
    const FiniteSpace sb = build_space(b, SpaceKind::all_submodules);
    auto transport = [&](const Bitset& c) {
        Bitset out(b.points.size());
        for (auto p = c.find_first(); p != Bitset::npos; p = c.find_next(p))
            out.set(point_map[p]);
        return out;
    };
    r.closed_sets_match = sa.closed.size() == sb.closed.size();
    for (const auto& c : sa.closed)
        if (!sb.is_closed(transport(c))) r.closed_sets_match = false;

    {
        const auto ca = a.corad(a.lattice.full_index);
        const auto cb = b.corad(b.lattice.full_index);
        Bitset img(b.module->size());
        const auto& mem = a.sub(ca).members;
        for (auto x = mem.find_first(); x != Bitset::npos; x = mem.find_next(x))
            img.set(theta.map[x]);
        r.corad_matches = img == b.sub(cb).members;
    }
    {
        const auto ra = separation(sa), rb = separation(sb);
        const auto ca = connectivity(sa), cb = connectivity(sb);
        const auto ka = compactness(sa), kb = compactness(sb);
        const auto sob_a = generic_points_and_sober(a, sa), sob_b = generic_points_and_sober(b, sb);
        r.property_records_match =
            ra.t0 == rb.t0 && ra.t1 == rb.t1 && ra.t2 == rb.t2 && ra.discrete == rb.discrete &&
            ca.connected == cb.connected && ca.irreducible == cb.irreducible &&
            ca.ultraconnected == cb.ultraconnected && ka.compact == kb.compact &&
            sob_a.sober == sob_b.sober && sob_a.components.size() == sob_b.components.size();
    }
    return r;
}

}  // namespace fcspec
