// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "analysis.hpp"

namespace fcspec {

enum class SpaceKind { all_submodules, fully_invariant };
enum class Tri { yes, no, vacuous };

inline bool tri_bool(Tri t) { return t == Tri::yes; }

// The dual Zariski space: points are the spectrum members, closed sets are
// the varieties of the generating submodule family.
struct FiniteSpace {
    SpaceKind kind = SpaceKind::all_submodules;
    std::uint32_t point_count = 0;
    std::vector<Bitset> closed;             // canonical order over point positions
    std::vector<Bitset> open;               // complements, same order as closed
    std::vector<std::uint32_t> closed_rep;  // lattice index of Corad(H(C)) per closed set
    std::vector<std::uint32_t> variety_of;  // lattice index -> closed set position
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> closed_lookup;
    bool axioms_ok = false;
    bool is_top_fc = false;  // union closure of the generating family

    bool is_closed(const Bitset& s) const { return closed_lookup.count(s) != 0; }
    std::uint32_t closed_index(const Bitset& s) const { return closed_lookup.at(s); }
};

FiniteSpace build_space(const ModuleAnalysis& a, SpaceKind kind);

// closure via the variety-of-the-sum formula
Bitset closure_formula(const ModuleAnalysis& a, const FiniteSpace& sp, const Bitset& subset);
// closure as the smallest closed superset in the family
Bitset closure_smallest(const FiniteSpace& sp, const Bitset& subset);
// both routes, which must agree; disagreement is an implementation bug
Bitset closure_of(const ModuleAnalysis& a, const FiniteSpace& sp, const Bitset& subset);

struct SeparationRecord {
    bool t0 = false, t1 = false, t2 = false, discrete = false;
};
SeparationRecord separation(const FiniteSpace& sp);

struct ConnectivityRecord {
    Tri connected = Tri::vacuous;
    Tri irreducible = Tri::vacuous;
    Tri ultraconnected = Tri::vacuous;
};
ConnectivityRecord connectivity(const FiniteSpace& sp);

// subspace criteria over the relative topology
bool subspace_irreducible(const FiniteSpace& sp, const Bitset& subset);
bool subspace_connected(const FiniteSpace& sp, const Bitset& subset);

struct IrreducibleSubsetsReport {
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::uint64_t irreducible_count = 0;
    // subsets where subspace irreducibility and full coprimality of the
    // point sum disagree; empty on duo modules by the paper's equivalence
    std::vector<Bitset> mismatches;
};
IrreducibleSubsetsReport irreducible_subsets(const ModuleAnalysis& a, const FiniteSpace& sp);

struct SoberReport {
    bool sober = false;
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>
        generic_points;  // closed-set position -> generic point positions (irreducible closed only)
    std::vector<Bitset> components;               // maximal irreducible closed sets
    std::vector<Bitset> max_point_varieties;      // V(K) for maximal spectrum points
};
SoberReport generic_points_and_sober(const ModuleAnalysis& a, const FiniteSpace& sp);

struct ChainReport {
    bool noetherian = true;
    bool artinian = true;
    std::size_t longest_closed_chain = 0;
    std::vector<std::uint32_t> coradicals;  // lattice indices with Corad(L) = L
    bool bijection_ok = false;              // coradicals <-> closed sets, order-preserving
};
ChainReport chain_conditions(const ModuleAnalysis& a, const FiniteSpace& sp);

struct ComparabilityReport {
    bool exhaustive = true;
    std::uint64_t connected_subsets_checked = 0;
    std::vector<Bitset> violations;  // connected subsets with an incomparable member
};
ComparabilityReport connected_comparability(const ModuleAnalysis& a, const FiniteSpace& sp);

struct LocallyFiniteReport {
    bool locally_finite = false;
    bool witnesses_ok = false;  // the proof-shaped neighborhood works at every point
};
LocallyFiniteReport locally_finite(const ModuleAnalysis& a, const FiniteSpace& sp,
                                   const std::vector<std::uint32_t>& collection_points);

struct CompactnessRecord {
    bool compact = false;
    bool countably_compact = false;
    std::size_t witness_subcover_size = 0;  // greedy subcover of the all-opens cover
};
CompactnessRecord compactness(const FiniteSpace& sp);

// Specialization order: K <= L iff K lies in the closure of {L}; on these
// spaces that is submodule containment.  Returns covering edges (a, b) with
// points[a] strictly below points[b] and nothing in between.
std::vector<std::pair<std::uint32_t, std::uint32_t>> specialization_cover_edges(
    const ModuleAnalysis& a);

// An explicit additive, action-commuting bijection between two modules over
// the same ring, as an element index map.
struct ModuleIso {
    std::vector<std::uint32_t> map;  // from M indices to N indices
};

bool validate_isomorphism(const FiniteModule& m, const FiniteModule& n, const ModuleIso& theta);

// Scrambled-generator copy: same ring, same order multiset in a permuted
// layout, action conjugated by a random additive automorphism.
std::pair<FiniteModule, ModuleIso> make_scrambled_copy(const FiniteModule& m, std::uint64_t seed,
                                                       const Bounds& bounds = Bounds{});

struct HomeomorphismReport {
    bool spectrum_bijection = false;
    bool closed_sets_match = false;
    bool corad_matches = false;
    bool property_records_match = false;
    bool ok() const {
        return spectrum_bijection && closed_sets_match && corad_matches && property_records_match;
    }
};
HomeomorphismReport check_homeomorphism(const ModuleAnalysis& a, const ModuleAnalysis& b,
                                        const ModuleIso& theta);

}  // namespace fcspec
