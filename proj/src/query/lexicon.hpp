// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

#include <string_view>

namespace pkgraph::query::detail {

/// Keywords that need back-quotes when used as a variable name.
bool is_reserved_word(std::string_view word);

}  // namespace pkgraph::query::detail
