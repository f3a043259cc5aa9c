// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Call-graph extraction from a C subset (see docs/c-subset.md).
//
// ExecOrder is a single counter over the whole translation unit: each function
// definition takes the next value, followed by its call sites in textual order.
// Calls nested in an argument are numbered before the enclosing call.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pkgraph/graph_store.hpp"

namespace pkgraph::callgraph {

struct CallSite {
    std::int64_t exec_order = 0;
    std::string name;
    std::vector<std::string> arguments;
    std::size_t line = 0;
    std::size_t column = 0;
    friend bool operator==(const CallSite&, const CallSite&) = default;
};

struct FunctionDef {
    std::string name;
    std::int64_t exec_order = 0;
    std::vector<CallSite> call_sites;
    /// Parameters and locals declared with pointer (or array-parameter) type.
    std::set<std::string> pointer_locals;
    /// Every parameter and local name the declarator scan recognized.
    std::set<std::string> locals;
    std::size_t line = 0;
    std::size_t column = 0;
    friend bool operator==(const FunctionDef&, const FunctionDef&) = default;
};

struct Diagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct TranslationUnit {
    std::vector<FunctionDef> functions;
    std::set<std::string> defined_names;
    std::vector<Diagnostic> warnings;

    const FunctionDef* find(std::string_view name) const;
    friend bool operator==(const TranslationUnit&, const TranslationUnit&) = default;
};

/// Throws ParseError on unbalanced brackets, an unterminated literal or
/// comment, or a duplicate function definition. Unrecognized top-level brace
/// blocks are skipped and reported in `warnings`.
TranslationUnit extract_translation_unit(std::string_view source);

/// Adds one CallGraph node per function entry and per call site, an entry ->
/// call site CALLS edge for every call site, and a call site -> callee entry
/// CALLS edge when the callee is defined in the unit. Returns entry node ids by
/// function name.
std::map<std::string, graph::NodeId> build_call_graph(const TranslationUnit& unit,
                                                      graph::PropertyGraph& graph);

/// Entry/call-site split of the CallGraph nodes of a graph built by
/// build_call_graph (or re-imported from its export). Roots are entries;
/// CALLS edges alternate entry -> site -> entry; leftover cycles are seeded
/// from their lowest ExecOrder, which is always a function entry.
struct CallGraphRoles {
    std::set<graph::NodeId> entries;
    /// call-site node -> entry node of the function containing it
    std::map<graph::NodeId, graph::NodeId> enclosing_entry;

    bool is_entry(graph::NodeId id) const { return entries.contains(id); }
    bool is_call_site(graph::NodeId id) const { return enclosing_entry.contains(id); }
};

CallGraphRoles analyze_roles(const graph::PropertyGraph& graph);

/// Argument property key for 1-based position `k` ("Argument1", ...).
std::string argument_key(std::size_t k);

}  // namespace pkgraph::callgraph
