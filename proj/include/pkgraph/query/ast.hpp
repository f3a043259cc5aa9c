// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Syntax tree for the supported read-only query subset. Expression nodes are
// immutable and shared, so a QueryAst copies cheaply and behaves as a value.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pkgraph::query {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NullLiteral {};

struct Literal {
    std::variant<NullLiteral, bool, std::int64_t, double, std::string> value;
};

struct Variable {
    std::string name;
};

struct PropertyAccess {
    ExprPtr base;
    std::string key;
};

enum class Function { Collect, Count, Size };

struct FunctionCall {
    Function function = Function::Size;
    std::vector<ExprPtr> args;
    bool star = false;  // COUNT(*)

    bool is_aggregate() const { return function == Function::Collect || function == Function::Count; }
};

enum class BinaryOp { Or, And, Eq, Ne, Lt, Le, Gt, Ge };

struct Binary {
    BinaryOp op = BinaryOp::Eq;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Not {
    ExprPtr operand;
};

struct Expr {
    std::variant<Literal, Variable, PropertyAccess, FunctionCall, Binary, Not> node;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct NodePattern {
    std::optional<std::string> variable;
    std::optional<std::string> label;
    std::vector<std::pair<std::string, ExprPtr>> properties;
};

/// Always directed left-to-right. `max_hops` unset means unbounded.
struct RelPattern {
    std::optional<std::string> variable;
    std::optional<std::string> type;
    bool variable_length = false;
    std::size_t min_hops = 1;
    std::optional<std::size_t> max_hops;
};

struct PatternPart {
    std::optional<std::string> path_variable;
    NodePattern start;
    std::vector<std::pair<RelPattern, NodePattern>> chain;
};

struct MatchClause {
    bool optional = false;
    std::vector<PatternPart> patterns;
};

struct ProjectionItem {
    ExprPtr expr;
    std::optional<std::string> alias;
};

struct WithClause {
    std::vector<ProjectionItem> items;
};

struct WhereClause {
    ExprPtr predicate;
};

struct UnwindClause {
    ExprPtr list;
    std::string alias;
};

struct ReturnClause {
    std::vector<ProjectionItem> items;
};

using Clause = std::variant<MatchClause, WithClause, WhereClause, UnwindClause, ReturnClause>;

struct QueryAst {
    std::vector<Clause> clauses;
};

bool contains_aggregate(const Expr& expr);

/// Canonical text: upper-case keywords, one clause per line, identifiers
/// back-quoted only when needed. parse_query(to_string(q)) reproduces q.
std::string to_string(const Expr& expr);
std::string to_string(const QueryAst& ast);

/// Result column name of a projection item: its alias, else its expression text.
std::string column_name(const ProjectionItem& item);

/// Renames every variable to v1, v2, ... in order of first appearance.
QueryAst normalize_variables(const QueryAst& ast);

}  // namespace pkgraph::query
