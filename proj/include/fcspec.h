/* Copyright 2026 The fcspec authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the fcspec engine: loading finite-module descriptions,
 * computing the fully-coprime spectrum and its dual Zariski topology, and
 * rendering verification reports.
 *
 * All functions returning fcspec_status set *out only on FCSPEC_OK.  Strings
 * returned through char** are heap-allocated; release them with
 * fcspec_string_free.  On failure, *error (when non-NULL) receives an
 * allocated message.  Handles are opaque and must be released with their
 * matching _free function.  Status codes match the CLI exit codes.
 */
#ifndef FCSPEC_H
#define FCSPEC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcspec_status {
    FCSPEC_OK = 0,
    FCSPEC_ERR_VALIDATION = 1, /* malformed input, failed axioms, bad names */
    FCSPEC_ERR_BOUNDS = 2,     /* enumeration limits exceeded */
    FCSPEC_ERR_FALSIFIED = 3,  /* a verification run found a counterexample */
    FCSPEC_ERR_INTERNAL = 4
} fcspec_status;

typedef struct fcspec_module fcspec_module;

typedef struct fcspec_options {
    int json;                /* machine-readable rendering */
    int fully_invariant;     /* topology over the fully invariant family */
    long bound_elements;     /* <= 0 keeps the default (4096) */
    long bound_submodules;   /* <= 0 keeps the default (100000) */
} fcspec_options;

const char* fcspec_version(void);

fcspec_options fcspec_options_default(void);

/* `spec` is either a file path or "catalog:NAME". */
fcspec_status fcspec_module_open(const char* spec, const fcspec_options* opts,
                                 fcspec_module** out, char** error);
void fcspec_module_free(fcspec_module* m);
const char* fcspec_module_name(const fcspec_module* m);

/* canonical serialization of the module description */
fcspec_status fcspec_module_serialize(const fcspec_module* m, char** out, char** error);

/* spectrum report: points, coradicals, E-primes, class predicates */
fcspec_status fcspec_report_spec(const fcspec_module* m, const fcspec_options* opts, char** out,
                                 char** error);

/* dual Zariski space report */
fcspec_status fcspec_report_topology(const fcspec_module* m, const fcspec_options* opts,
                                     char** out, char** error);

/* theorem verification; theorem_filter is a comma-separated id list or NULL.
 * *falsified receives the number of falsified checks. */
fcspec_status fcspec_report_verify(const fcspec_module* m, const char* theorem_filter,
                                   const fcspec_options* opts, char** out, int* falsified,
                                   char** error);

/* verification of every built-in catalog module */
fcspec_status fcspec_report_verify_catalog(const fcspec_options* opts, char** out, int* falsified,
                                           char** error);

/* specialization order of the spectrum in DOT syntax */
fcspec_status fcspec_export_dot(const fcspec_module* m, const fcspec_options* opts, char** out,
                                char** error);

/* deterministic random-module verification sweep */
fcspec_status fcspec_fuzz(uint64_t seed, long count, long max_size, const fcspec_options* opts,
                          char** out, int* falsified, char** error);

/* built-in catalog listing */
fcspec_status fcspec_catalog_list(const fcspec_options* opts, char** out, char** error);

void fcspec_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FCSPEC_H */
