// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "module.hpp"

namespace fcspec {

// Parses the textual module description (strict JSON, integers only,
// unknown keys rejected).  Throws ValidationError with a located message on
// any problem.
FiniteModule parse_module_spec(const std::string& text, const Bounds& bounds = Bounds{});

FiniteModule load_module_file(const std::string& path, const Bounds& bounds = Bounds{});

// Canonical serialization; reparsing yields an identical structure.
std::string serialize_module_spec(const FiniteModule& m);

}  // namespace fcspec
