// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "fcspec.h"

#include <cstring>
#include <new>
#include <sstream>

#include "catalog.hpp"
#include "render.hpp"
#include "specfile.hpp"

using namespace fcspec;

struct fcspec_module {
    FiniteModule module;
};

namespace {

Bounds bounds_from(const fcspec_options* opts) {
    Bounds b;
    if (opts) {
        if (opts->bound_elements > 0) b.max_elements = opts->bound_elements;
        if (opts->bound_submodules > 0) b.max_submodules = opts->bound_submodules;
    }
    return b;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error, const std::string& message) {
    if (error) *error = dup_string(message);
}

template <typename Fn>
fcspec_status guarded(char** error, Fn&& fn) {
    try {
        return fn();
    } catch (const BoundExceeded& e) {
        set_error(error, e.what());
        return FCSPEC_ERR_BOUNDS;
    } catch (const ValidationError& e) {
        set_error(error, e.what());
        return FCSPEC_ERR_VALIDATION;
    } catch (const NotASubmoduleError& e) {
        set_error(error, e.what());
        return FCSPEC_ERR_VALIDATION;
    } catch (const GenerationExhausted& e) {
        set_error(error, e.what());
        return FCSPEC_ERR_VALIDATION;
    } catch (const std::exception& e) {
        set_error(error, std::string("internal error: ") + e.what());
        return FCSPEC_ERR_INTERNAL;
    }
}

std::vector<std::string> split_ids(const char* filter) {
    std::vector<std::string> out;
    if (!filter) return out;
    std::string token;
    std::istringstream in(filter);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

}  // namespace

extern "C" {

const char* fcspec_version(void) { return "fcspec 1.0.0"; }

fcspec_options fcspec_options_default(void) {
    fcspec_options o;
    o.json = 0;
    o.fully_invariant = 0;
    o.bound_elements = 0;
    o.bound_submodules = 0;
    return o;
}

fcspec_status fcspec_module_open(const char* spec, const fcspec_options* opts,
                                 fcspec_module** out, char** error) {
    if (!spec || !out) {
        set_error(error, "fcspec_module_open: spec and out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        *out = new fcspec_module{open_module(spec, bounds_from(opts))};
        return FCSPEC_OK;
    });
}

void fcspec_module_free(fcspec_module* m) { delete m; }

const char* fcspec_module_name(const fcspec_module* m) {
    return m ? m->module.name().c_str() : "";
}

fcspec_status fcspec_module_serialize(const fcspec_module* m, char** out, char** error) {
    if (!m || !out) {
        set_error(error, "fcspec_module_serialize: module and out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        *out = dup_string(serialize_module_spec(m->module));
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_report_spec(const fcspec_module* m, const fcspec_options* opts, char** out,
                                 char** error) {
    if (!m || !out) {
        set_error(error, "fcspec_report_spec: module and out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        const ModuleAnalysis a = analyze(m->module, bounds_from(opts));
        *out = dup_string(render_spec(run_all(a), opts && opts->json));
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_report_topology(const fcspec_module* m, const fcspec_options* opts,
                                     char** out, char** error) {
    if (!m || !out) {
        set_error(error, "fcspec_report_topology: module and out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        const ModuleAnalysis a = analyze(m->module, bounds_from(opts));
        const SpaceKind kind = opts && opts->fully_invariant ? SpaceKind::fully_invariant
                                                             : SpaceKind::all_submodules;
        *out = dup_string(render_topology(topology_report(a, kind), opts && opts->json));
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_report_verify(const fcspec_module* m, const char* theorem_filter,
                                   const fcspec_options* opts, char** out, int* falsified,
                                   char** error) {
    if (!m || !out) {
        set_error(error, "fcspec_report_verify: module and out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        const VerificationReport rep = run_all(m->module, bounds_from(opts));
        *out = dup_string(render_verify(rep, split_ids(theorem_filter), opts && opts->json));
        if (falsified) *falsified = static_cast<int>(rep.count(Verdict::falsified));
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_report_verify_catalog(const fcspec_options* opts, char** out, int* falsified,
                                           char** error) {
    if (!out) {
        set_error(error, "fcspec_report_verify_catalog: out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        const Bounds bounds = bounds_from(opts);
        std::vector<VerificationReport> reps;
        std::size_t bad = 0;
        for (const auto& name : catalog_names()) {
            reps.push_back(run_all(catalog_module(name, bounds), bounds));
            bad += reps.back().count(Verdict::falsified);
        }
        *out = dup_string(render_verify_many(reps, opts && opts->json));
        if (falsified) *falsified = static_cast<int>(bad);
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_export_dot(const fcspec_module* m, const fcspec_options* opts, char** out,
                                char** error) {
    if (!m || !out) {
        set_error(error, "fcspec_export_dot: module and out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        const ModuleAnalysis a = analyze(m->module, bounds_from(opts));
        *out = dup_string(render_dot(a));
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_fuzz(uint64_t seed, long count, long max_size, const fcspec_options* opts,
                          char** out, int* falsified, char** error) {
    if (!out) {
        set_error(error, "fcspec_fuzz: out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    if (count < 0 || max_size < 1) {
        set_error(error, "fcspec_fuzz: count must be >= 0 and max_size >= 1");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        FuzzConfig cfg;
        cfg.seed = seed;
        cfg.count = count;
        cfg.max_size = max_size;
        cfg.bounds = bounds_from(opts);
        const FuzzResult result = fuzz(cfg);
        std::size_t bad = 0;
        for (const auto& rep : result.reports) bad += rep.count(Verdict::falsified);
        *out = dup_string(render_fuzz(result, cfg, opts && opts->json));
        if (falsified) *falsified = static_cast<int>(bad);
        return FCSPEC_OK;
    });
}

fcspec_status fcspec_catalog_list(const fcspec_options* opts, char** out, char** error) {
    if (!out) {
        set_error(error, "fcspec_catalog_list: out must be non-NULL");
        return FCSPEC_ERR_VALIDATION;
    }
    return guarded(error, [&] {
        *out = dup_string(render_catalog(opts && opts->json, bounds_from(opts)));
        return FCSPEC_OK;
    });
}

void fcspec_string_free(char* s) { ::operator delete(s); }

}  // extern "C"
