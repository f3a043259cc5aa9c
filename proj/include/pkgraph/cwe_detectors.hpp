// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Detection rules for the bundled CWE catalog, evaluated over a sealed call
// graph (optionally merged with the knowledge graph).
//
// Witness paths start at the program roots (see entry_nodes). A call site that
// no root reaches, e.g. one inside mutually recursive functions only, gets
// paths from its enclosing function entry instead.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pkgraph/c_callgraph.hpp"
#include "pkgraph/graph_store.hpp"
#include "pkgraph/vuln_ingest.hpp"

namespace pkgraph::detect {

struct Finding {
    std::string cwe_id;
    std::string cwe_name;
    std::vector<graph::Path> witness_paths;
    /// Ascending ExecOrder.
    std::vector<graph::NodeId> terminal_nodes;
    std::string message;
    friend bool operator==(const Finding&, const Finding&) = default;
};

struct DetectorCapability {
    std::string cwe_id;
    bool supported = true;
    std::string reason;
    friend bool operator==(const DetectorCapability&, const DetectorCapability&) = default;
};

struct DetectOptions {
    /// Start witness paths at this function's entry instead of the roots.
    std::optional<std::string> entry;
    /// Receives non-fatal diagnostics (e.g. an unresolvable signal handler).
    std::vector<std::string>* warnings = nullptr;
};

inline constexpr const char* kMissingReleaseReason =
    "call graph lacks data-flow; malloc's Argument1 is a size, not the released handle";

/// Function-entry nodes without incoming CALLS edges, `main` first, then by
/// ascending id.
std::vector<graph::NodeId> entry_nodes(const graph::PropertyGraph& graph);

std::vector<Finding> detect_banned_calls(const graph::PropertyGraph& graph,
                                         const ingest::CweRecord& cwe,
                                         const DetectOptions& options = {});

/// Groups event call sites by Argument1 and reports every group of two or
/// more. Call sites without Argument1 are ignored.
std::vector<Finding> detect_double_release(const graph::PropertyGraph& graph,
                                           const ingest::CweRecord& cwe,
                                           const DetectOptions& options = {});

/// With `unit`, flags sizeof whose Argument1 is a pointer local of the
/// enclosing function. Without it, flags sizeof applied to any bare
/// identifier that is not a type name.
std::vector<Finding> detect_sizeof_on_pointer(const graph::PropertyGraph& graph,
                                              const callgraph::TranslationUnit* unit,
                                              const ingest::CweRecord& cwe,
                                              const DetectOptions& options = {});

/// Paths run from the handler's entry (signal's Argument2) to each reachable
/// event call site.
std::vector<Finding> detect_signal_nonreentrant(const graph::PropertyGraph& graph,
                                                const ingest::CweRecord& cwe,
                                                const DetectOptions& options = {});

/// getlogin call sites, reported only when some call site is pthread_create.
std::vector<Finding> detect_getlogin_multithreaded(const graph::PropertyGraph& graph,
                                                   const ingest::CweRecord& cwe,
                                                   const DetectOptions& options = {});

DetectorCapability detect_missing_release(const graph::PropertyGraph& graph,
                                          const ingest::CweRecord& cwe);

/// Query text for the banned-call and double-release families. Throws
/// UnsupportedTemplateError for 467, 479, 558 and 401.
std::string generate_detection_query(const ingest::CweRecord& cwe, const std::string& entry_name);

struct ScanResult {
    std::vector<Finding> findings;
    /// Only unsupported detectors are listed.
    std::vector<DetectorCapability> capabilities;
};

/// Findings are sorted by numeric CWE id, then by the smallest terminal
/// ExecOrder.
ScanResult run_all(const graph::PropertyGraph& graph, const callgraph::TranslationUnit* unit,
                   std::span<const ingest::CweRecord> catalog, const DetectOptions& options = {});

}  // namespace pkgraph::detect
