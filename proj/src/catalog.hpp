// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "module.hpp"

namespace fcspec {

std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
FiniteModule catalog_module(const std::string& name, const Bounds& bounds = Bounds{});

// resolves "catalog:NAME" or a file path
FiniteModule open_module(const std::string& spec, const Bounds& bounds = Bounds{});

}  // namespace fcspec
