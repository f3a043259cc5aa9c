// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

#include <string_view>

#include "pkgraph/query/ast.hpp"

namespace pkgraph::query {

/// Parses MATCH / OPTIONAL MATCH / WITH / WHERE / UNWIND / RETURN queries (see
/// docs/query-grammar.md). Throws SyntaxError with a 1-based line:column.
QueryAst parse_query(std::string_view text);

}  // namespace pkgraph::query
