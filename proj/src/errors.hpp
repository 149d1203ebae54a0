// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fcspec {

// Malformed or axiom-violating input (files, CLI arguments, table rings).
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Desk-scale guardrail: the structure is too large for the configured
// enumeration limits.  Not a mathematical failure.
class BoundExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// colon_module produced a set that is not closed under the ring action,
// which signals that the given ring subset was not a suitable ideal.
class NotASubmoduleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Rejection sampling failed to find a valid random module within the
// attempt budget.
class GenerationExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Bounds {
    long max_elements = 4096;           // ring / module / End(M) sizes
    long max_submodules = 100000;       // submodule and ideal counts
    long max_hom_candidates = 1 << 20;  // cutoff for the exhaustive Hom filter
    long max_homs = 65536;              // size cap for an enumerated Hom-set
};

}  // namespace fcspec
