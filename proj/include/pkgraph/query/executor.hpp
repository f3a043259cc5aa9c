// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Clause-pipeline evaluation over a sealed PropertyGraph.
//
// The working set is a BindingTable that starts as one empty row. MATCH joins
// every row with all matches of its patterns, OPTIONAL MATCH keeps unmatched
// rows with nulls, WITH projects (grouping by its non-aggregate items when any
// item aggregates), WHERE keeps rows whose predicate is true, UNWIND fans a
// list out into rows, and RETURN renders the final table.
//
// Null rules: comparisons involving null yield null, WHERE drops null, COLLECT
// and COUNT skip nulls, SIZE(null) is 0, property access on null is null.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pkgraph/graph_store.hpp"
#include "pkgraph/query/ast.hpp"

namespace pkgraph::query {

struct Value;
using ValueList = std::vector<Value>;

struct Value {
    std::variant<std::monostate, bool, std::int64_t, double, std::string, graph::NodeId,
                 graph::EdgeId, graph::Path, ValueList>
        data;

    bool is_null() const { return std::holds_alternative<std::monostate>(data); }
};

/// Structural identity (null equals null). Used for grouping, not for `=`.
bool operator==(const Value& lhs, const Value& rhs);

Value from_property(const graph::PropertyValue& value);

struct BindingTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

struct ResultTable {
    std::vector<std::string> columns;
    /// Rendered cells, sorted by row tuple.
    std::vector<std::vector<std::string>> rows;
};

/// Result rows before rendering, in evaluation order.
BindingTable evaluate_query(const QueryAst& ast, const graph::PropertyGraph& graph);

/// Throws UnboundVariableError / TypeMismatchError naming the offending
/// expression. The graph must be sealed.
ResultTable execute_query(const QueryAst& ast, const graph::PropertyGraph& graph);

std::string render_value(const graph::PropertyGraph& graph, const Value& value);

/// "| col | col |" lines, header first. Cell '|' characters are escaped.
std::string format_result_table(const ResultTable& table);

}  // namespace pkgraph::query
