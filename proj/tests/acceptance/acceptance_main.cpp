// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion.  Exits non-zero when
// any criterion fails.  Optional arguments: path to the CLI binary and the
// golden-file directory (used by the CLI contract criterion).
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "render.hpp"
#include "specfile.hpp"

#include "../oracles.hpp"

using namespace fcspec;

namespace {

bool g_all_ok = true;

void report(int idx, const std::string& name, bool ok, const std::string& note = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    g_all_ok = g_all_ok && ok;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. engine enumeration and spectrum match the naive oracles
void criterion_oracles() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (const auto& name : catalog_names()) {
        const FiniteModule m = catalog_module(name);
        if (m.size() > 64) continue;
        const ModuleAnalysis a = analyze(m);
        const auto oracle = oracle::spectrum(m);
        if (a.lattice.size() != oracle.all_submodules.size()) ok = false;
        for (std::uint32_t i = 0; ok && i < a.lattice.size(); ++i)
            if (a.sub(i).members != oracle.all_submodules[i]) ok = false;
        std::vector<Bitset> pts;
        for (auto p : a.points) pts.push_back(a.sub(p).members);
        if (pts != oracle.points) ok = false;
        if (!ok) {
            note = "mismatch on " + name;
            break;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        ok = false;
        note = "oracle comparison took too long";
    }
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << elapsed << "s";
    report(1, "oracle equivalence (lattice and spectrum)", ok, note.empty() ? os.str() : note);
}

// 2. the three variety identities, exactly
void criterion_variety_identities() {
    bool ok = true;
    std::string note;
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        if (a.v_fc(a.lattice.zero_index).any()) ok = false;
        Bitset all(a.points.size());
        all.set();
        if (a.v_fc(a.lattice.full_index) != all) ok = false;
        for (std::uint32_t i = 0; ok && i < a.lattice.size(); ++i)
            for (std::uint32_t j = 0; j < a.lattice.size(); ++j) {
                const Bitset meet = a.sub(i).members & a.sub(j).members;
                if ((a.v_fc(i) & a.v_fc(j)) != a.v_fc(a.lattice.index(meet))) {
                    ok = false;
                    break;
                }
            }
        for (auto x : a.fi) {
            if (!ok) break;
            for (auto y : a.fi) {
                const Bitset sum = submodule_join(*a.module, a.sub(x).members, a.sub(y).members);
                const Bitset lhs = a.v_fc(x) | a.v_fc(y);
                if (lhs != a.v_fc(a.lattice.index(sum)) || lhs != a.v_fc(a.odot(x, y))) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            note = "identity fails on " + name;
            break;
        }
    }
    report(2, "variety identities over all pairs", ok, note);
}

// 3. closure formula vs smallest closed superset, exhaustively
void criterion_closure() {
    bool ok = true;
    std::string note;
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        const FiniteSpace sp = build_space(a, SpaceKind::all_submodules);
        if (sp.point_count > 15) continue;
        for (std::uint64_t mask = 0; mask < (1ull << sp.point_count); ++mask) {
            Bitset s(sp.point_count);
            for (std::uint32_t p = 0; p < sp.point_count; ++p)
                if (mask & (1ull << p)) s.set(p);
            if (closure_formula(a, sp, s) != closure_smallest(sp, s)) {
                ok = false;
                note = "closure mismatch on " + name;
                break;
            }
        }
        if (!ok) break;
    }
    report(3, "closure formula equals the lattice closure", ok, note);
}

// 4. coradical submodules biject onto closed sets, preserving order
void criterion_bijection() {
    bool ok = true;
    std::string note;
    for (const auto& name : catalog_names()) {
        const ModuleAnalysis a = analyze(catalog_module(name));
        const auto rep = chain_conditions(a, build_space(a, SpaceKind::all_submodules));
        if (!rep.bijection_ok) {
            ok = false;
            note = "bijection fails on " + name;
            break;
        }
    }
    report(4, "coradical/closed-set bijection with round trips", ok, note);
}

// 5. the concrete spectra pinned ahead of the build
void criterion_concrete_spectra() {
    bool ok = true;
    std::string note;
    {
        const ModuleAnalysis a = analyze(catalog_module("Z4"));
        if (a.points.size() != 1 || a.label(a.points[0]) != "⟨2⟩") {
            ok = false;
            note = "Z4 spectrum";
        }
    }
    {
        const ModuleAnalysis a = analyze(catalog_module("Z2xZ3"));
        const FiniteSpace sp = build_space(a, SpaceKind::all_submodules);
        const auto sep = separation(sp);
        const auto conn = connectivity(sp);
        const auto sober = generic_points_and_sober(a, sp);
        if (a.points.size() != 2 || a.label(a.points[0]) != "⟨(1,0)⟩" ||
            a.label(a.points[1]) != "⟨(0,1)⟩" || !sep.discrete || !sep.t2 ||
            tri_bool(conn.connected) || !sober.sober) {
            ok = false;
            note = "Z2xZ3 space";
        }
    }
    {
        const ModuleAnalysis a = analyze(catalog_module("V4overF2"));
        const FiniteSpace sp = build_space(a, SpaceKind::fully_invariant);
        if (a.points.size() != 1 || a.points[0] != a.lattice.full_index || sp.point_count != 1) {
            ok = false;
            note = "V4overF2 fully-invariant spectrum";
        }
    }
    report(5, "pinned concrete spectra", ok, note);
}

// 6. equivalence theorems report verified whenever their gates hold
void criterion_equivalences() {
    const std::vector<std::string> required = {
        "prop-duo-irr", "prop-uniform",  "thm-colocal",    "prop-T1",      "thm-T2",
        "lemma-bireg",  "lemma-min",     "prop-corad=",    "lemma-inn-ideal", "prop-ro-inn",
    };
    bool ok = true;
    std::string note;
    for (const auto& name : catalog_names()) {
        const auto rep = run_all(catalog_module(name));
        if (rep.count(Verdict::falsified) != 0) {
            ok = false;
            note = "falsification on " + name;
            break;
        }
        for (const auto& c : rep.checks) {
            if (std::find(required.begin(), required.end(), c.id) == required.end()) continue;
            bool gates = true;
            for (const auto& [hname, hval] : c.hypotheses) {
                (void)hname;
                gates = gates && hval;
            }
            if (gates && c.verdict != Verdict::verified) {
                ok = false;
                note = c.id + " not verified on " + name;
                break;
            }
        }
        if (!ok) break;
    }
    report(6, "equivalence theorems under verified hypotheses", ok, note);
}

// 7. the scrambled copy of Z6 is homeomorphic with matching coradical
void criterion_homeomorphism() {
    const FiniteModule z6 = catalog_module("Z6");
    const FiniteModule z6s = catalog_module("Z6scrambled");
    ModuleIso theta;
    theta.map.resize(6);
    for (std::uint32_t x = 0; x < 6; ++x)
        theta.map[x] = z6s.encode({static_cast<int>(x % 3), static_cast<int>(x % 2)});
    bool ok = validate_isomorphism(z6, z6s, theta);
    std::string note;
    if (ok) {
        const auto rep = check_homeomorphism(analyze(z6), analyze(z6s), theta);
        ok = rep.ok();
        if (!rep.spectrum_bijection) note = "spectrum bijection fails";
        else if (!rep.closed_sets_match) note = "closed sets differ";
        else if (!rep.corad_matches) note = "coradical image differs";
        else if (!rep.property_records_match) note = "property records differ";
    } else {
        note = "the residue map is not an isomorphism";
    }
    report(7, "homeomorphism invariance for the scrambled copy", ok, note);
}

// 8. the fuzz gate: 200 modules, zero falsifications, byte-identical reruns
void criterion_fuzz() {
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.count = 200;
    cfg.max_size = 64;
    const auto start = std::chrono::steady_clock::now();
    const FuzzResult r1 = fuzz(cfg);
    const double elapsed = seconds_since(start);
    const FuzzResult r2 = fuzz(cfg);
    std::size_t falsified = 0;
    for (const auto& rep : r1.reports) falsified += rep.count(Verdict::falsified);
    const std::string text1 = render_fuzz(r1, cfg, false);
    const std::string text2 = render_fuzz(r2, cfg, false);
    bool ok = falsified == 0 && text1 == text2 && r1.reports.size() == 200 && elapsed < 60.0;
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << elapsed << "s, " << falsified << " falsified, reruns "
       << (text1 == text2 ? "identical" : "DIFFER");
    report(8, "fuzz gate (seed 1, count 200, max-size 64)", ok, os.str());
}

// 9. CLI contract: byte-exact goldens and the documented exit codes
struct CliCase {
    std::string args;
    int expected_exit;
    std::string stdout_golden;  // empty = don't compare
    std::string stderr_golden;  // empty = don't compare
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_cli(const std::string& cli, const std::string& golden_dir) {
    if (cli.empty() || golden_dir.empty()) {
        report(9, "CLI contract", false, "CLI path and golden directory not supplied");
        return;
    }
    const std::vector<CliCase> cases = {
        {"spec catalog:Z4", 0, "spec_z4.txt", ""},
        {"spec catalog:Z2xZ3", 0, "spec_z2xz3.txt", ""},
        {"--json spec catalog:Z4", 0, "spec_z4.json", ""},
        {"topology catalog:Z4", 0, "topology_z4.txt", ""},
        {"topology catalog:Z2xZ3", 0, "topology_z2xz3.txt", ""},
        {"--json topology catalog:Z2xZ3", 0, "topology_z2xz3.json", ""},
        {"topology --fi catalog:V4overF2", 0, "topology_v4_fi.txt", ""},
        {"verify catalog:Z4", 0, "verify_z4.txt", ""},
        {"verify --theorems thm-T2 catalog:Z4", 0, "verify_z4_t2.txt", ""},
        {"verify --all-catalog", 0, "verify_all.txt", ""},
        {"export-dot catalog:Z4", 0, "export_dot_z4.txt", ""},
        {"export-dot catalog:Z2xZ3", 0, "export_dot_z2xz3.txt", ""},
        {"catalog", 0, "catalog.txt", ""},
        {"spec " + golden_dir + "/bad_ring.json", 1, "", "err_bad_ring.txt"},
        {"--bound-elements 2 spec catalog:Z4", 2, "", "err_bounds.txt"},
        {"verify --theorems thm-missing catalog:Z4", 1, "", "err_unknown_theorem.txt"},
        {"spec catalog:missing", 1, "", "err_unknown_catalog.txt"},
    };
    bool ok = true;
    std::string note;
    for (const auto& c : cases) {
        const std::string out_path = "acceptance_stdout.tmp";
        const std::string err_path = "acceptance_stderr.tmp";
        const std::string command =
            cli + " " + c.args + " > " + out_path + " 2> " + err_path;
        const int status = std::system(command.c_str());
        const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        if (exit_code != c.expected_exit) {
            ok = false;
            note = "\"" + c.args + "\" exited " + std::to_string(exit_code) + ", expected " +
                   std::to_string(c.expected_exit);
            break;
        }
        if (!c.stdout_golden.empty() &&
            slurp(out_path) != slurp(golden_dir + "/" + c.stdout_golden)) {
            ok = false;
            note = "stdout of \"" + c.args + "\" differs from " + c.stdout_golden;
            break;
        }
        if (!c.stderr_golden.empty() &&
            slurp(err_path) != slurp(golden_dir + "/" + c.stderr_golden)) {
            ok = false;
            note = "stderr of \"" + c.args + "\" differs from " + c.stderr_golden;
            break;
        }
    }
    std::remove("acceptance_stdout.tmp");
    std::remove("acceptance_stderr.tmp");
    report(9, "CLI contract (goldens and exit codes)", ok, note);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string golden_dir = argc > 2 ? argv[2] : "";
    criterion_oracles();
    criterion_variety_identities();
    criterion_closure();
    criterion_bijection();
    criterion_concrete_spectra();
    criterion_equivalences();
    criterion_homeomorphism();
    criterion_fuzz();
    criterion_cli(cli, golden_dir);
    return g_all_ok ? 0 : 1;
}
