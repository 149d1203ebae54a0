// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  All computation happens behind the C API in
// libfcspec; this translation unit only parses arguments, prints results and
// maps status codes to exit codes.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fcspec.h"

namespace {

struct Cleanup {
    char* text = nullptr;
    char* error = nullptr;
    fcspec_module* module = nullptr;
    ~Cleanup() {
        fcspec_string_free(text);
        fcspec_string_free(error);
        fcspec_module_free(module);
    }
};

int finish(fcspec_status status, const Cleanup& c, int falsified = 0) {
    if (status != FCSPEC_OK) {
        std::fprintf(stderr, "error: %s\n", c.error ? c.error : "unknown failure");
        return static_cast<int>(status);
    }
    if (c.text) std::fputs(c.text, stdout);
    return falsified > 0 ? static_cast<int>(FCSPEC_ERR_FALSIFIED) : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-module fully-coprime spectrum and dual Zariski topology"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fcspec_version());

    fcspec_options opts = fcspec_options_default();
    bool json = false;
    long bound_elements = 0, bound_submodules = 0;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--bound-elements", bound_elements, "element-count guardrail");
    app.add_option("--bound-submodules", bound_submodules, "submodule-count guardrail");

    std::string input;
    auto* cmd_spec = app.add_subcommand("spec", "spectrum, coradicals and class predicates");
    cmd_spec->add_option("input", input, "file path or catalog:NAME")->required();

    bool fully_invariant = false;
    auto* cmd_topology = app.add_subcommand("topology", "the dual Zariski space");
    cmd_topology->add_option("input", input, "file path or catalog:NAME")->required();
    cmd_topology->add_flag("--fi", fully_invariant,
                           "generate closed sets from fully invariant submodules only");

    bool all_catalog = false;
    std::string theorems;
    auto* cmd_verify = app.add_subcommand("verify", "run the theorem checks");
    cmd_verify->add_option("input", input, "file path or catalog:NAME");
    cmd_verify->add_flag("--all-catalog", all_catalog, "verify every catalog module");
    cmd_verify->add_option("--theorems", theorems, "comma-separated theorem ids");

    auto* cmd_dot = app.add_subcommand("export-dot", "specialization order in DOT syntax");
    cmd_dot->add_option("input", input, "file path or catalog:NAME")->required();

    std::uint64_t seed = 1;
    long count = 50, max_size = 64;
    auto* cmd_fuzz = app.add_subcommand("fuzz", "verify random modules deterministically");
    cmd_fuzz->add_option("--seed", seed, "random seed");
    cmd_fuzz->add_option("--count", count, "number of modules");
    cmd_fuzz->add_option("--max-size", max_size, "module element cap");

    auto* cmd_catalog = app.add_subcommand("catalog", "list built-in modules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? static_cast<int>(FCSPEC_ERR_VALIDATION) : 0;
    }

    opts.json = json ? 1 : 0;
    opts.fully_invariant = fully_invariant ? 1 : 0;
    opts.bound_elements = bound_elements;
    opts.bound_submodules = bound_submodules;

    Cleanup c;
    if (cmd_catalog->parsed()) return finish(fcspec_catalog_list(&opts, &c.text, &c.error), c);
    if (cmd_fuzz->parsed()) {
        int falsified = 0;
        const auto status =
            fcspec_fuzz(seed, count, max_size, &opts, &c.text, &falsified, &c.error);
        return finish(status, c, falsified);
    }
    if (cmd_verify->parsed() && all_catalog) {
        int falsified = 0;
        const auto status = fcspec_report_verify_catalog(&opts, &c.text, &falsified, &c.error);
        return finish(status, c, falsified);
    }
    if (input.empty()) {
        std::fprintf(stderr, "error: an input module is required\n");
        return static_cast<int>(FCSPEC_ERR_VALIDATION);
    }
    const auto open_status = fcspec_module_open(input.c_str(), &opts, &c.module, &c.error);
    if (open_status != FCSPEC_OK) return finish(open_status, c);

    if (cmd_spec->parsed()) return finish(fcspec_report_spec(c.module, &opts, &c.text, &c.error), c);
    if (cmd_topology->parsed())
        return finish(fcspec_report_topology(c.module, &opts, &c.text, &c.error), c);
    if (cmd_dot->parsed()) return finish(fcspec_export_dot(c.module, &opts, &c.text, &c.error), c);
    if (cmd_verify->parsed()) {
        int falsified = 0;
        const auto status =
            fcspec_report_verify(c.module, theorems.empty() ? nullptr : theorems.c_str(), &opts,
                                 &c.text, &falsified, &c.error);
        return finish(status, c, falsified);
    }
    return static_cast<int>(FCSPEC_ERR_VALIDATION);
}
