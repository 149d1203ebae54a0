// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "ideals.hpp"

namespace fcspec {

struct ClassPredicates {
    bool atomic = false;
    bool b_coprime = false;
    bool colocal = false;
    bool comultiplication = false;
    bool duo = false;
    bool every_prime_maximal_s = false;
    bool fc_coprimeless = false;
    bool fc_coradical_module = false;
    bool fi_atomic = false;
    bool fully_coprime_module = false;
    bool intrinsically_injective = false;
    bool min_property = false;
    bool multiplication = false;
    bool s_iad = false;
    bool self_cogenerator = false;
    bool self_injective = false;
    bool top_fc = false;
    bool uniform = false;
};

// Everything the spectrum, topology and verification layers consume about
// one module, computed once.  The analysis owns its module; internal
// pointers stay valid across moves.
struct ModuleAnalysis {
    std::shared_ptr<const FiniteModule> owned;
    const FiniteModule* module = nullptr;
    Bounds bounds;

    SubmoduleLattice lattice;
    EndoRing S;

    std::vector<Bitset> an;          // per lattice index, over S indices
    std::vector<Sidedness> an_side;  // computed sidedness of each An(L)
    std::vector<char> fully_inv;     // per lattice index
    std::vector<std::uint32_t> fi;   // lattice indices, canonical order
    static constexpr std::uint32_t npos = 0xffffffffu;
    std::vector<std::uint32_t> fi_pos;  // lattice index -> position in fi (or npos)

    // odot over pairs of fully invariant submodules, as lattice indices
    std::vector<std::vector<std::uint32_t>> odot_fi;

    std::vector<std::uint32_t> points;     // lattice indices of Spec^fc(M)
    std::vector<std::uint32_t> point_pos;  // lattice index -> point position (or npos)

    std::vector<std::uint32_t> simples;     // minimal non-zero submodules
    std::vector<std::uint32_t> fi_simples;  // minimal non-zero fully invariant ones
    std::uint32_t socle = 0;                // lattice index

    std::vector<EndoIdeal> two_sided;
    std::vector<Bitset> primes;
    Bitset prad;
    std::vector<std::uint32_t> e_primes;  // lattice indices of EP(M)

    ClassPredicates preds;

    const Submodule& sub(std::uint32_t i) const { return lattice.all[i]; }
    std::string label(std::uint32_t i) const { return submodule_label(*module, sub(i)); }

    // points contained in L, as a bitset over point positions
    Bitset v_fc(std::uint32_t L) const;
    Bitset v_fc_members(const Bitset& members) const;
    // sum of all points under L (the fc-coradical), as a lattice index
    std::uint32_t corad(std::uint32_t L) const;
    // sum of a set of points (over point positions), as a lattice index
    std::uint32_t sum_of_points(const Bitset& point_set) const;
    // maximal points under L, as point positions
    std::vector<std::uint32_t> maximal_under(std::uint32_t L) const;

    std::uint32_t odot(std::uint32_t X, std::uint32_t Y) const;  // fi lattice indices
    bool is_fully_coprime_in(std::uint32_t K) const;             // non-zero fi index

    bool is_point(std::uint32_t L) const { return point_pos[L] != npos; }
};

ModuleAnalysis analyze(FiniteModule m, const Bounds& bounds = Bounds{});

// lattice, endomorphism ring, annihilators, coproduct table, spectrum and
// socle only; the ideal-theoretic layers and predicates stay empty
ModuleAnalysis analyze_spectrum_only(FiniteModule m, const Bounds& bounds = Bounds{});

// X (.) Y for arbitrary submodule member sets, straight from the definition.
Bitset odot_members(const ModuleAnalysis& a, const Bitset& X, const Bitset& Y);

// Ke(An(X) composed-opposite An(Y)); the cross-check route of the internal
// coproduct, exact when the module is a self-cogenerator.
Bitset odot_via_ke(const ModuleAnalysis& a, const Bitset& X, const Bitset& Y);

}  // namespace fcspec
