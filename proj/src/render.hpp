// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "verifier.hpp"

namespace fcspec {

inline constexpr const char* kReportSchema = "fcspec-report/1";

// digest of one dual Zariski space for reports
struct TopologyReport {
    std::string module_name;
    SpaceKind kind = SpaceKind::all_submodules;
    std::vector<std::string> point_labels;
    // per closed set: member point labels and the canonical generator label
    std::vector<std::pair<std::vector<std::string>, std::string>> closed_sets;
    SeparationRecord sep;
    ConnectivityRecord conn;
    CompactnessRecord comp;
    bool sober = false;
    bool top_fc = false;
    // per component: member labels and the generic point label
    std::vector<std::pair<std::vector<std::string>, std::string>> components;
};

TopologyReport topology_report(const ModuleAnalysis& a, SpaceKind kind);

std::string render_spec(const VerificationReport& rep, bool json);
std::string render_topology(const TopologyReport& rep, bool json);
// filter empty = all checks; unknown ids raise ValidationError
std::string render_verify(const VerificationReport& rep, const std::vector<std::string>& filter,
                          bool json);
std::string render_verify_many(const std::vector<VerificationReport>& reps, bool json);
std::string render_fuzz(const FuzzResult& result, const FuzzConfig& cfg, bool json);
std::string render_catalog(bool json, const Bounds& bounds);
std::string render_dot(const ModuleAnalysis& a);

}  // namespace fcspec
