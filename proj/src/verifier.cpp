// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "verifier.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "builders.hpp"

namespace fcspec {

namespace {

struct CheckContext {
    const ModuleAnalysis& a;
    const FiniteSpace& fi_space;
    const FiniteSpace& all_space;
};

using CheckFn = TheoremCheck (*)(const CheckContext&);

TheoremCheck begin_check(std::string id, std::vector<std::pair<std::string, bool>> hyps) {
    TheoremCheck c;
    c.id = std::move(id);
    c.hypotheses = std::move(hyps);
    c.verdict = Verdict::verified;
    for (const auto& [name, value] : c.hypotheses) {
        (void)name;
        if (!value) c.verdict = Verdict::vacuous;
    }
    return c;
}

bool gated_out(const TheoremCheck& c) { return c.verdict == Verdict::vacuous; }

void falsify(TheoremCheck& c, std::string witness) {
    c.verdict = Verdict::falsified;
    c.details.push_back(std::move(witness));
}

std::string label_set(const ModuleAnalysis& a, const Bitset& point_set) {
    std::string out = "{";
    bool first = true;
    for (auto p = point_set.find_first(); p != Bitset::npos; p = point_set.find_next(p)) {
        if (!first) out += ", ";
        out += a.label(a.points[p]);
        first = false;
    }
    return out + "}";
}

bool points_equal_simples(const ModuleAnalysis& a) {
    std::vector<std::uint32_t> pts = a.points, simp = a.simples;
    std::sort(pts.begin(), pts.end());
    std::sort(simp.begin(), simp.end());
    return pts == simp;
}

// every fully coprime submodule (spectrum point) is simple
bool every_point_simple(const ModuleAnalysis& a) {
    for (auto p : a.points)
        if (std::find(a.simples.begin(), a.simples.end(), p) == a.simples.end()) return false;
    return true;
}

// simples as point positions; nullopt when some simple is not a point
std::optional<std::vector<std::uint32_t>> simples_as_points(const ModuleAnalysis& a) {
    std::vector<std::uint32_t> out;
    for (auto s : a.simples) {
        if (!a.is_point(s)) return std::nullopt;
        out.push_back(a.point_pos[s]);
    }
    return out;
}

TheoremCheck check_properties_1(const CheckContext& ctx) {
    auto c = begin_check("lemma-properties-1", {});
    const auto& a = ctx.a;
    if (a.v_fc(a.lattice.zero_index).any())
        falsify(c, "the variety of 0 is not empty");
    Bitset full(a.points.size());
    full.set();
    if (a.v_fc(a.lattice.full_index) != full)
        falsify(c, "the variety of M misses a spectrum point");
    return c;
}

TheoremCheck check_properties_2(const CheckContext& ctx) {
    auto c = begin_check("lemma-properties-2", {});
    const auto& a = ctx.a;
    const auto n = a.lattice.size();
    for (std::uint32_t i = 0; i < n && c.verdict == Verdict::verified; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            const Bitset meet = a.sub(i).members & a.sub(j).members;
            if ((a.v_fc(i) & a.v_fc(j)) != a.v_fc(a.lattice.index(meet))) {
                falsify(c, "intersection identity fails at (" + a.label(i) + ", " + a.label(j) +
                               ")");
                break;
            }
        }
    // seeded triples cover larger families
    std::mt19937_64 rng(0xfc5fec02u);
    for (int s = 0; s < 500 && c.verdict == Verdict::verified; ++s) {
        const std::uint32_t i = rng() % n, j = rng() % n, k = rng() % n;
        const Bitset meet = a.sub(i).members & a.sub(j).members & a.sub(k).members;
        if ((a.v_fc(i) & a.v_fc(j) & a.v_fc(k)) != a.v_fc(a.lattice.index(meet)))
            falsify(c, "triple intersection identity fails");
    }
    return c;
}

TheoremCheck check_properties_3(const CheckContext& ctx) {
    auto c = begin_check("lemma-properties-3", {});
    const auto& a = ctx.a;
    for (auto L1 : a.fi) {
        for (auto L2 : a.fi) {
            const Bitset sum = submodule_join(*a.module, a.sub(L1).members, a.sub(L2).members);
            const Bitset lhs = a.v_fc(L1) | a.v_fc(L2);
            if (lhs != a.v_fc(a.lattice.index(sum)) || lhs != a.v_fc(a.odot(L1, L2))) {
                falsify(c, "union identity fails at (" + a.label(L1) + ", " + a.label(L2) + ")");
                return c;
            }
        }
    }
    return c;
}

TheoremCheck check_topology(const CheckContext& ctx) {
    auto c = begin_check("thm-topology", {});
    if (!ctx.fi_space.axioms_ok)
        falsify(c, "the fully-invariant variety family violates the topology axioms");
    if (ctx.a.preds.duo && !ctx.all_space.axioms_ok)
        falsify(c, "duo module whose full variety family is not a topology");
    c.details.push_back(std::string("top-fc: ") + (ctx.a.preds.top_fc ? "yes" : "no"));
    return c;
}

TheoremCheck check_closure(const CheckContext& ctx) {
    auto c = begin_check("lemma-closure", {});
    const auto& a = ctx.a;
    auto run = [&](const FiniteSpace& sp) {
        bool ok = true;
        const std::uint32_t np = sp.point_count;
        const std::uint64_t total = np <= 15 ? (1ull << np) : 0;
        if (total) {
            for (std::uint64_t mask = 0; mask < total && ok; ++mask) {
                Bitset s(np);
                for (std::uint32_t p = 0; p < np; ++p)
                    if (mask & (1ull << p)) s.set(p);
                ok = closure_formula(a, sp, s) == closure_smallest(sp, s);
            }
        } else {
            std::mt19937_64 rng(0xc105u);
            for (int t = 0; t < 2000 && ok; ++t) {
                Bitset s(np);
                for (std::uint32_t p = 0; p < np; ++p)
                    if (rng() & 1) s.set(p);
                ok = closure_formula(a, sp, s) == closure_smallest(sp, s);
            }
        }
        return ok;
    };
    if (!run(ctx.fi_space)) falsify(c, "closure formula fails on the fully-invariant space");
    if (ctx.a.preds.top_fc && !run(ctx.all_space))
        falsify(c, "closure formula fails on the full space");
    return c;
}

TheoremCheck check_thm_11(const CheckContext& ctx) {
    auto c = begin_check("thm-11", {});
    if (!chain_conditions(ctx.a, ctx.fi_space).bijection_ok)
        falsify(c, "coradical/closed-set bijection fails on the fully-invariant space");
    if (ctx.a.preds.top_fc && !chain_conditions(ctx.a, ctx.all_space).bijection_ok)
        falsify(c, "coradical/closed-set bijection fails on the full space");
    return c;
}

TheoremCheck check_noth_art(const CheckContext& ctx) {
    auto c = begin_check("thm-noth-art", {});
    const auto r = chain_conditions(ctx.a, ctx.all_space);
    if (!r.noetherian || !r.artinian)
        falsify(c, "a finite space failed a chain condition");
    c.details.push_back("finite module: both chain conditions hold on both sides (consistency)");
    return c;
}

TheoremCheck check_duo_irr(const CheckContext& ctx) {
    auto c = begin_check("prop-duo-irr", {{"duo", ctx.a.preds.duo}});
    if (gated_out(c)) return c;
    const auto rep = irreducible_subsets(ctx.a, ctx.all_space);
    for (const auto& s : rep.mismatches)
        falsify(c, "irreducibility mismatch at " + label_set(ctx.a, s));
    std::ostringstream os;
    os << "subsets checked: " << rep.checked << (rep.exhaustive ? " (exhaustive)" : " (sampled)");
    c.details.push_back(os.str());
    return c;
}

TheoremCheck check_corad_fc_1(const CheckContext& ctx) {
    auto c = begin_check("thm-corad-fc-1", {{"duo", ctx.a.preds.duo}});
    if (gated_out(c)) return c;
    const bool irr = tri_bool(connectivity(ctx.all_space).irreducible);
    const bool coprime = ctx.a.is_fully_coprime_in(ctx.a.corad(ctx.a.lattice.full_index));
    if (irr != coprime)
        falsify(c, std::string("spectrum irreducible=") + (irr ? "yes" : "no") +
                       " but Corad(M) fully coprime=" + (coprime ? "yes" : "no"));
    return c;
}

TheoremCheck check_corad_fc_2(const CheckContext& ctx) {
    auto c = begin_check("thm-corad-fc-2",
                         {{"duo", ctx.a.preds.duo}, {"self-injective", ctx.a.preds.self_injective}});
    if (gated_out(c)) return c;
    const auto simple_points = simples_as_points(ctx.a);
    if (!simple_points) {
        falsify(c, "a simple submodule is not a spectrum point under the stated hypotheses");
        return c;
    }
    Bitset s(ctx.a.points.size());
    for (auto p : *simple_points) s.set(p);
    const bool irr = subspace_irreducible(ctx.all_space, s);
    const bool coprime = ctx.a.is_fully_coprime_in(ctx.a.socle);
    if (irr != coprime)
        falsify(c, std::string("S(M) irreducible=") + (irr ? "yes" : "no") +
                       " but Soc(M) fully coprime=" + (coprime ? "yes" : "no"));
    return c;
}

TheoremCheck check_max_irr(const CheckContext& ctx) {
    auto c = begin_check("prop-max-irr", {{"duo", ctx.a.preds.duo}});
    if (gated_out(c)) return c;
    const auto& a = ctx.a;
    const auto& sp = ctx.all_space;

    std::vector<Bitset> point_varieties;
    for (auto L : a.points) point_varieties.push_back(a.v_fc(L));
    std::sort(point_varieties.begin(), point_varieties.end(), canonical_less);
    std::vector<Bitset> irr_closed;
    for (const auto& cl : sp.closed)
        if (subspace_irreducible(sp, cl)) irr_closed.push_back(cl);
    std::sort(irr_closed.begin(), irr_closed.end(), canonical_less);
    if (point_varieties != irr_closed)
        falsify(c, "spectrum points do not biject onto irreducible closed sets");

    const auto sober = generic_points_and_sober(a, sp);
    std::vector<Bitset> max_varieties;
    for (auto p : a.maximal_under(a.lattice.full_index)) max_varieties.push_back(a.v_fc(a.points[p]));
    std::sort(max_varieties.begin(), max_varieties.end(), canonical_less);
    std::vector<Bitset> components = sober.components;
    std::sort(components.begin(), components.end(), canonical_less);
    if (max_varieties != components)
        falsify(c, "maximal points do not biject onto irreducible components");
    return c;
}

TheoremCheck check_sober(const CheckContext& ctx) {
    auto c = begin_check("cor-sober", {{"duo", ctx.a.preds.duo}});
    if (gated_out(c)) return c;
    const auto rep = generic_points_and_sober(ctx.a, ctx.all_space);
    if (!rep.sober) falsify(c, "an irreducible closed set lacks a unique generic point");
    return c;
}

TheoremCheck check_uniform(const CheckContext& ctx) {
    auto c = begin_check("prop-uniform", {{"s-iad", ctx.a.preds.s_iad}});
    if (gated_out(c)) return c;
    const bool ultra = tri_bool(connectivity(ctx.all_space).ultraconnected);
    if (ctx.a.preds.uniform != ultra)
        falsify(c, std::string("uniform=") + (ctx.a.preds.uniform ? "yes" : "no") +
                       " but ultraconnected=" + (ultra ? "yes" : "no"));
    return c;
}

TheoremCheck check_compact(const CheckContext& ctx) {
    auto c = begin_check("thm-compact", {{"s-iad", ctx.a.preds.s_iad}});
    if (gated_out(c)) return c;
    const auto rec = compactness(ctx.all_space);
    if (!rec.compact) falsify(c, "finite simple class but the space is not compact");
    if (!rec.countably_compact) falsify(c, "space is not countably compact");
    c.details.push_back("S(M) finite: consistency check only");
    return c;
}

TheoremCheck check_count_compact(const CheckContext& ctx) {
    auto c = begin_check("thm-count-compact", {{"s-iad", ctx.a.preds.s_iad},
                                               {"every-point-simple", every_point_simple(ctx.a)}});
    if (gated_out(c)) return c;
    const auto rec = compactness(ctx.all_space);
    const bool countable = true;  // S(M) is finite, hence countable
    if (rec.countably_compact != countable)
        falsify(c, "countable simple class but the space is not countably compact");
    if (!rec.compact) falsify(c, "finite simple class but the space is not compact");
    c.details.push_back("finite module: consistency check only");
    return c;
}

TheoremCheck check_it_irr(const CheckContext& ctx) {
    auto c = begin_check("prop-it-irr", {{"duo", ctx.a.preds.duo},
                                         {"spec-equals-simples", points_equal_simples(ctx.a)}});
    if (gated_out(c)) return c;
    const auto sep = separation(ctx.all_space);
    if (ctx.a.preds.min_property && !sep.discrete)
        falsify(c, "min-property holds but the space is not discrete");
    const bool unique_simple = ctx.a.simples.size() == 1;
    const bool rhs =
        ctx.a.preds.min_property && tri_bool(connectivity(ctx.all_space).connected);
    if (unique_simple != rhs)
        falsify(c, std::string("unique-simple=") + (unique_simple ? "yes" : "no") +
                       " but min-property&&connected=" + (rhs ? "yes" : "no"));
    return c;
}

TheoremCheck check_colocal(const CheckContext& ctx) {
    auto c = begin_check("thm-colocal", {{"s-iad", ctx.a.preds.s_iad},
                                         {"every-point-simple", every_point_simple(ctx.a)}});
    if (gated_out(c)) return c;
    const bool connected = tri_bool(connectivity(ctx.all_space).connected);
    if (ctx.a.preds.colocal != connected)
        falsify(c, std::string("colocal=") + (ctx.a.preds.colocal ? "yes" : "no") +
                       " but connected=" + (connected ? "yes" : "no"));
    return c;
}

TheoremCheck check_bireg(const CheckContext& ctx) {
    auto c = begin_check("lemma-bireg",
                         {{"self-injective", ctx.a.preds.self_injective},
                          {"self-cogenerator", ctx.a.preds.self_cogenerator},
                          {"duo", ctx.a.preds.duo},
                          {"every-prime-maximal", ctx.a.preds.every_prime_maximal_s}});
    if (gated_out(c)) return c;
    if (!points_equal_simples(ctx.a))
        falsify(c, "S(M) differs from the spectrum under the stated hypotheses");
    return c;
}

TheoremCheck check_1n(const CheckContext& ctx) {
    auto c = begin_check("lemma-1n", {{"top-fc", ctx.a.preds.top_fc}});
    if (gated_out(c)) return c;
    const auto rep = connected_comparability(ctx.a, ctx.all_space);
    for (const auto& s : rep.violations)
        falsify(c, "incomparable member in connected subset " + label_set(ctx.a, s));
    std::ostringstream os;
    os << "connected subsets checked: " << rep.connected_subsets_checked
       << (rep.exhaustive ? " (exhaustive)" : " (sampled)");
    c.details.push_back(os.str());
    return c;
}

TheoremCheck check_lf(const CheckContext& ctx) {
    auto c = begin_check("prop-lf", {{"s-iad", ctx.a.preds.s_iad},
                                     {"finitely-many-simples-under-each-point", true}});
    if (gated_out(c)) return c;
    const auto simple_points = simples_as_points(ctx.a);
    if (!simple_points) {
        falsify(c, "a simple submodule is not a spectrum point under the stated hypotheses");
        return c;
    }
    const auto rep = locally_finite(ctx.a, ctx.all_space, *simple_points);
    if (!rep.locally_finite) falsify(c, "the class of simples is not locally finite");
    if (!rep.witnesses_ok) falsify(c, "the proof-shaped witness neighborhood fails");
    return c;
}

TheoremCheck check_singleton(const CheckContext& ctx) {
    auto c = begin_check("lemma-singleton", {{"s-iad", ctx.a.preds.s_iad}});
    if (gated_out(c)) return c;
    const auto& a = ctx.a;
    for (std::uint32_t L = 0; L < a.lattice.size(); ++L) {
        const bool is_simple = std::find(a.simples.begin(), a.simples.end(), L) != a.simples.end();
        bool coprime_with_singleton_variety = false;
        bool singleton_closed = false;
        if (a.is_point(L)) {
            Bitset v = a.v_fc(L);
            Bitset single(a.points.size());
            single.set(a.point_pos[L]);
            coprime_with_singleton_variety = v == single;
            singleton_closed = ctx.all_space.is_closed(single);
        }
        if (is_simple != coprime_with_singleton_variety || is_simple != singleton_closed) {
            falsify(c, "singleton characterization fails at " + a.label(L));
            return c;
        }
    }
    return c;
}

TheoremCheck check_t1(const CheckContext& ctx) {
    auto c = begin_check("prop-T1", {{"s-iad", ctx.a.preds.s_iad}});
    if (gated_out(c)) return c;
    const bool lhs = points_equal_simples(ctx.a);
    const bool rhs = separation(ctx.all_space).t1;
    if (lhs != rhs)
        falsify(c, std::string("spec=S(M) is ") + (lhs ? "yes" : "no") + " but T1 is " +
                       (rhs ? "yes" : "no"));
    return c;
}

TheoremCheck check_t2(const CheckContext& ctx) {
    auto c = begin_check("thm-T2", {{"s-iad", ctx.a.preds.s_iad}});
    if (gated_out(c)) return c;
    const auto sep = separation(ctx.all_space);
    const bool eq = points_equal_simples(ctx.a);
    if (!(eq == sep.discrete && sep.discrete == sep.t2 && sep.t2 == sep.t1))
        falsify(c, "the four characterizations are not equivalent");
    return c;
}

TheoremCheck check_min(const CheckContext& ctx) {
    auto c = begin_check("lemma-min", {{"self-injective", ctx.a.preds.self_injective},
                                       {"duo", ctx.a.preds.duo}});
    if (gated_out(c)) return c;
    if (!ctx.a.preds.min_property)
        falsify(c, "self-injective duo module without the min-property");
    return c;
}

TheoremCheck check_corad_eq(const CheckContext& ctx) {
    auto c =
        begin_check("prop-corad=", {{"self-cogenerator", ctx.a.preds.self_cogenerator}});
    if (gated_out(c)) return c;
    const auto& a = ctx.a;
    for (auto L : a.e_primes)
        if (!a.is_point(L)) {
            falsify(c, "E-prime submodule " + a.label(L) + " is not a spectrum point");
            return c;
        }
    if (a.preds.intrinsically_injective) {
        std::vector<std::uint32_t> ep = a.e_primes, pts = a.points;
        std::sort(ep.begin(), ep.end());
        std::sort(pts.begin(), pts.end());
        if (ep != pts) {
            falsify(c, "EP(M) differs from the spectrum despite intrinsic injectivity");
            return c;
        }
        const auto corad_m = a.corad(a.lattice.full_index);
        if (a.prad != a.an[corad_m])
            falsify(c, "Prad(S) differs from An(Corad(M))");
        if (kernel_intersection(a.S, a.prad) != a.sub(corad_m).members)
            falsify(c, "Corad(M) differs from Ke(Prad(S))");
        c.details.push_back("intrinsically injective: equality and radical identities checked");
    } else {
        c.details.push_back("inclusion EP(M) within Spec checked; equality gate not met");
    }
    return c;
}

TheoremCheck check_inn_ideal(const CheckContext& ctx) {
    auto c =
        begin_check("lemma-inn-ideal", {{"self-cogenerator", ctx.a.preds.self_cogenerator}});
    if (gated_out(c)) return c;
    const auto& a = ctx.a;
    for (auto X : a.fi)
        for (auto Y : a.fi) {
            const Bitset direct = a.sub(a.odot(X, Y)).members;
            const Bitset via_ke = odot_via_ke(a, a.sub(X).members, a.sub(Y).members);
            if (direct != via_ke) {
                falsify(c, "products disagree at (" + a.label(X) + ", " + a.label(Y) + ")");
                return c;
            }
        }
    return c;
}

TheoremCheck check_ro_inn(const CheckContext& ctx) {
    auto c = begin_check("prop-ro-inn", {{"self-injective", ctx.a.preds.self_injective}});
    if (gated_out(c)) return c;
    const auto& a = ctx.a;
    for (auto L : a.fi) {
        if (L == a.lattice.zero_index) continue;
        const SubmoduleAsModule sam = submodule_as_module(*a.module, a.sub(L), a.bounds);
        const ModuleAnalysis sub = analyze_spectrum_only(sam.module, a.bounds);

        auto to_ambient_members = [&](const Bitset& sub_members) {
            Bitset out(a.module->size());
            for (auto x = sub_members.find_first(); x != Bitset::npos;
                 x = sub_members.find_next(x))
                out.set(sam.to_ambient[x]);
            return out;
        };

        // relative spectrum equality: fully invariant submodules of L that
        // are points of M are exactly the points of L
        std::vector<Bitset> lhs, rhs;
        for (auto K : sub.fi) {
            const Bitset amb = to_ambient_members(sub.sub(K).members);
            const auto it = a.lattice.index_of.find(amb);
            if (it != a.lattice.index_of.end() && a.is_point(it->second)) lhs.push_back(amb);
        }
        for (auto K : sub.points) rhs.push_back(to_ambient_members(sub.sub(K).members));
        std::sort(lhs.begin(), lhs.end(), canonical_less);
        std::sort(rhs.begin(), rhs.end(), canonical_less);
        if (lhs != rhs) {
            falsify(c, "relative spectrum differs inside " + a.label(L));
            return c;
        }

        // in particular: L is fully coprime in M iff L is a fully coprime module
        const bool in_m = a.is_point(L);
        const bool intrinsic = sub.is_point(sub.lattice.full_index);
        if (in_m != intrinsic) {
            falsify(c, "module-level coprimality disagrees at " + a.label(L));
            return c;
        }

        // continuity of the embedding: preimages of varieties are varieties
        const FiniteSpace sub_space = build_space(sub, SpaceKind::all_submodules);
        for (std::uint32_t N = 0; N < a.lattice.size(); ++N) {
            Bitset preimage(sub.points.size());
            for (std::size_t p = 0; p < sub.points.size(); ++p) {
                const Bitset amb = to_ambient_members(sub.sub(sub.points[p]).members);
                if (amb.is_subset_of(a.sub(N).members)) preimage.set(p);
            }
            const Bitset meet = a.sub(N).members & a.sub(L).members;
            Bitset meet_sub(sam.module.size());
            for (auto x = meet.find_first(); x != Bitset::npos; x = meet.find_next(x))
                meet_sub.set(sam.from_ambient[x]);
            const Bitset variety = sub.v_fc_members(meet_sub);
            if (preimage != variety || !sub_space.is_closed(preimage)) {
                falsify(c, "embedding is not continuous at " + a.label(L) + " with N = " +
                               a.label(N));
                return c;
            }
        }
    }
    return c;
}

TheoremCheck check_fc_max(const CheckContext& ctx) {
    auto c = begin_check("lemma-fc-max", {{"self-injective", ctx.a.preds.self_injective},
                                          {"fi-atomic", ctx.a.preds.fi_atomic}});
    if (gated_out(c)) return c;
    const auto& a = ctx.a;
    for (auto L : a.fi) {
        if (L == a.lattice.zero_index) continue;
        if (a.maximal_under(L).empty()) {
            falsify(c, "no maximal spectrum point under " + a.label(L));
            return c;
        }
    }
    return c;
}

TheoremCheck check_sub_cop(const CheckContext& ctx) {
    auto c = begin_check("remark-sub-cop", {{"self-injective", ctx.a.preds.self_injective}});
    if (gated_out(c)) return c;
    for (auto s : ctx.a.fi_simples)
        if (!ctx.a.is_point(s)) {
            falsify(c, "fully invariant simple " + ctx.a.label(s) + " is not a spectrum point");
            return c;
        }
    return c;
}

const std::vector<std::pair<const char*, CheckFn>>& registry() {
    static const std::vector<std::pair<const char*, CheckFn>> r = {
        {"lemma-properties-1", check_properties_1},
        {"lemma-properties-2", check_properties_2},
        {"lemma-properties-3", check_properties_3},
        {"thm-topology", check_topology},
        {"lemma-closure", check_closure},
        {"thm-11", check_thm_11},
        {"thm-noth-art", check_noth_art},
        {"prop-duo-irr", check_duo_irr},
        {"thm-corad-fc-1", check_corad_fc_1},
        {"thm-corad-fc-2", check_corad_fc_2},
        {"prop-max-irr", check_max_irr},
        {"cor-sober", check_sober},
        {"prop-uniform", check_uniform},
        {"thm-compact", check_compact},
        {"thm-count-compact", check_count_compact},
        {"prop-it-irr", check_it_irr},
        {"thm-colocal", check_colocal},
        {"lemma-bireg", check_bireg},
        {"lemma-1n", check_1n},
        {"prop-lf", check_lf},
        {"lemma-singleton", check_singleton},
        {"prop-T1", check_t1},
        {"thm-T2", check_t2},
        {"lemma-min", check_min},
        {"prop-corad=", check_corad_eq},
        {"lemma-inn-ideal", check_inn_ideal},
        {"prop-ro-inn", check_ro_inn},
        {"lemma-fc-max", check_fc_max},
        {"remark-sub-cop", check_sub_cop},
    };
    return r;
}

std::string describe_ring(const FiniteRing& r) {
    std::ostringstream os;
    os << r.size() << " elements, orders [";
    for (std::size_t i = 0; i < r.additive_orders().size(); ++i) {
        if (i) os << ",";
        os << r.additive_orders()[i];
    }
    os << "]";
    return os.str();
}

std::string describe_module(const FiniteModule& m) {
    std::ostringstream os;
    os << m.size() << " elements, orders [";
    for (std::size_t i = 0; i < m.orders().size(); ++i) {
        if (i) os << ",";
        os << m.orders()[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

std::size_t VerificationReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [v](const TheoremCheck& c) { return c.verdict == v; }));
}

const std::vector<std::string>& theorem_registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) {
            (void)fn;
            out.emplace_back(id);
        }
        return out;
    }();
    return ids;
}

VerificationReport run_all(const ModuleAnalysis& a) {
    VerificationReport rep;
    rep.module_name = a.module->name();
    rep.ring_desc = describe_ring(a.module->ring());
    rep.module_desc = describe_module(*a.module);
    rep.submodule_count = a.lattice.size();
    rep.fi_count = a.fi.size();
    rep.endo_count = a.S.size();
    rep.preds = a.preds;
    for (auto p : a.points) rep.point_labels.push_back(a.label(p));
    for (auto s : a.simples) rep.simple_labels.push_back(a.label(s));
    for (auto s : a.fi_simples) rep.fi_simple_labels.push_back(a.label(s));
    for (auto e : a.e_primes) rep.eprime_labels.push_back(a.label(e));
    rep.socle_label = a.label(a.socle);
    rep.corad_m_label = a.label(a.corad(a.lattice.full_index));
    for (std::uint32_t L = 0; L < a.lattice.size(); ++L)
        if (a.corad(L) == L) rep.coradical_labels.push_back(a.label(L));

    const FiniteSpace fi_space = build_space(a, SpaceKind::fully_invariant);
    const FiniteSpace all_space = build_space(a, SpaceKind::all_submodules);
    const CheckContext ctx{a, fi_space, all_space};
    for (const auto& [id, fn] : registry()) {
        (void)id;
        rep.checks.push_back(fn(ctx));
    }
    return rep;
}

VerificationReport run_all(const FiniteModule& m, const Bounds& bounds) {
    return run_all(analyze(m, bounds));
}

namespace {

std::vector<int> divisors_of(long n) {
    std::vector<int> out;
    for (long d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(static_cast<int>(d));
    return out;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

std::vector<FiniteModule> generate_random_modules(const FuzzConfig& cfg) {
    std::vector<FiniteModule> out;
    std::mt19937_64 rng(cfg.seed);
    long long attempts = 0;
    const long long attempt_budget = 20000 + 4000 * cfg.count;
    std::string last_family = "none";

    for (long idx = 0; idx < cfg.count; ++idx) {
        FiniteModule module = [&]() -> FiniteModule {
            while (true) {
                if (++attempts > attempt_budget)
                    throw GenerationExhausted("module generation ran out of attempts (family " +
                                              last_family + ")");
                const bool product_family = (rng() % 3) == 0;
                RingPtr ring;
                long exponent = 0;
                std::string ring_name;
                if (!product_family) {
                    const int n = 2 + static_cast<int>(rng() % 11);
                    ring = std::make_shared<const FiniteRing>(make_zn_ring(n, cfg.bounds));
                    exponent = n;
                    ring_name = "Z" + std::to_string(n);
                    last_family = ring_name;
                } else {
                    const int na = 2 + static_cast<int>(rng() % 5);
                    const int nb = 2 + static_cast<int>(rng() % 5);
                    std::vector<FiniteRing> factors;
                    factors.push_back(make_zn_ring(na, cfg.bounds));
                    factors.push_back(make_zn_ring(nb, cfg.bounds));
                    ring = std::make_shared<const FiniteRing>(
                        make_product_ring(factors, cfg.bounds));
                    exponent = std::lcm(static_cast<long>(na), static_cast<long>(nb));
                    ring_name = "Z" + std::to_string(na) + "xZ" + std::to_string(nb);
                    last_family = ring_name;
                }
                const auto divisors = divisors_of(exponent);
                const int m = 1 + static_cast<int>(rng() % 3);
                std::vector<int> orders(m);
                long long size = 1;
                for (int i = 0; i < m; ++i) {
                    orders[i] = divisors[rng() % divisors.size()];
                    size *= orders[i];
                }
                if (size > cfg.max_size) continue;
                long long ambient = 1;
                bool ambient_ok = true;
                for (int i = 0; i < m && ambient_ok; ++i)
                    for (int j = 0; j < m; ++j) {
                        ambient *= gcd_ll(orders[i], orders[j]);
                        if (ambient > cfg.endo_cap) {
                            ambient_ok = false;
                            break;
                        }
                    }
                if (!ambient_ok) continue;

                std::ostringstream name;
                name << "fuzz-" << (idx + 1) << "-" << ring_name << "-[";
                for (int i = 0; i < m; ++i) name << (i ? "," : "") << orders[i];
                name << "]";

                const int k = ring->generator_count();
                if (k == 1) {
                    std::vector<std::vector<std::vector<int>>> action(
                        1, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
                    for (int i = 0; i < m; ++i) action[0][i][i] = 1 % orders[i];
                    return FiniteModule::make(ring, orders, action, name.str(), cfg.bounds);
                }

                // product ring: sample the first idempotent action by
                // rejection, the second is determined by unitality
                const auto& ro = ring->additive_orders();
                std::optional<FiniteModule> built;
                for (int attempt = 0; attempt < 400 && !built; ++attempt) {
                    if (++attempts > attempt_budget)
                        throw GenerationExhausted("module generation ran out of attempts");
                    std::vector<std::vector<std::vector<int>>> action(
                        k, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
                    bool feasible = true;
                    for (int i = 0; i < m && feasible; ++i)
                        for (int j = 0; j < m && feasible; ++j) {
                            std::vector<int> valid;
                            for (int cand = 0; cand < orders[j]; ++cand) {
                                const long long c = cand;
                                const int delta = i == j ? 1 : 0;
                                if ((static_cast<long long>(orders[i]) * c) % orders[j]) continue;
                                if ((static_cast<long long>(ro[0]) * c) % orders[j]) continue;
                                if ((static_cast<long long>(ro[1]) * (delta - c)) % orders[j])
                                    continue;
                                if ((static_cast<long long>(orders[i]) * (delta - c)) % orders[j])
                                    continue;
                                valid.push_back(cand);
                            }
                            if (valid.empty()) {
                                feasible = false;
                                break;
                            }
                            action[0][i][j] = valid[rng() % valid.size()];
                            int second = (i == j ? 1 : 0) - action[0][i][j];
                            second %= orders[j];
                            if (second < 0) second += orders[j];
                            action[1][i][j] = second;
                        }
                    if (!feasible) break;
                    try {
                        built.emplace(
                            FiniteModule::make(ring, orders, action, name.str(), cfg.bounds));
                    } catch (const ValidationError&) {
                    }
                }
                if (built) return std::move(*built);
                continue;  // resample the shape
            }
        }();
        out.push_back(std::move(module));
    }
    return out;
}

FuzzResult fuzz(const FuzzConfig& cfg) {
    FuzzResult result;
    for (const auto& module : generate_random_modules(cfg))
        result.reports.push_back(run_all(module, cfg.bounds));
    return result;
}

}  // namespace fcspec
