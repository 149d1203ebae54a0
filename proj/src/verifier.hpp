// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "topology.hpp"

namespace fcspec {

enum class Verdict { verified, vacuous, falsified };

struct TheoremCheck {
    std::string id;
    std::vector<std::pair<std::string, bool>> hypotheses;
    Verdict verdict = Verdict::vacuous;
    std::vector<std::string> details;  // notes; counterexample witnesses when falsified
};

struct VerificationReport {
    std::string module_name;
    std::string ring_desc;
    std::string module_desc;
    std::size_t submodule_count = 0;
    std::size_t fi_count = 0;
    std::size_t endo_count = 0;
    ClassPredicates preds;
    std::vector<std::string> point_labels;
    std::vector<std::string> simple_labels;
    std::vector<std::string> fi_simple_labels;
    std::vector<std::string> eprime_labels;
    std::vector<std::string> coradical_labels;
    std::string socle_label;
    std::string corad_m_label;
    std::vector<TheoremCheck> checks;

    std::size_t count(Verdict v) const;
    bool any_falsified() const { return count(Verdict::falsified) > 0; }
};

// ids of every registry entry, in report order
const std::vector<std::string>& theorem_registry_ids();

VerificationReport run_all(const ModuleAnalysis& a);
VerificationReport run_all(const FiniteModule& m, const Bounds& bounds = Bounds{});

struct FuzzConfig {
    std::uint64_t seed = 1;
    long count = 50;
    long max_size = 64;
    long endo_cap = 512;  // ambient endomorphism-space cap during generation
    Bounds bounds;
};

struct FuzzResult {
    std::vector<VerificationReport> reports;
};

// the deterministic random-module stream behind fuzz()
std::vector<FiniteModule> generate_random_modules(const FuzzConfig& cfg);

FuzzResult fuzz(const FuzzConfig& cfg);

}  // namespace fcspec
