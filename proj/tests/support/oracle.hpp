// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Test-only reference implementations, written independently of the library
// code they check.

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pkgraph/c_callgraph.hpp"
#include "pkgraph/graph_store.hpp"
#include "pkgraph/vuln_ingest.hpp"

namespace pkgraph::support {

/// Breadth-first expansion over whole-edge-list scans; no adjacency index and
/// no recursion. Sorted by edge-id sequence.
std::vector<graph::Path> brute_force_paths(const graph::PropertyGraph& graph, graph::NodeId start,
                                           const std::set<graph::NodeId>& targets,
                                           const std::optional<std::string>& edge_type,
                                           graph::LengthRange range);

/// Up to `max_nodes` nodes with labels A/B and up to `max_edges` edges typed
/// CALLS or OTHER. Parallel edges occur; with `acyclic` every edge runs from a
/// lower to a higher id, otherwise self-loops and cycles occur too.
graph::PropertyGraph random_graph(std::mt19937_64& rng, bool acyclic, std::size_t max_nodes = 10,
                                  std::size_t max_edges = 20);

/// A translation unit with 1-4 functions. Calls draw from release/banned
/// event names, helper names and the unit's own functions (so recursion and
/// cycles occur). Event calls take exactly one argument.
callgraph::TranslationUnit random_unit(std::mt19937_64& rng);

/// Catalog row lookup in the bundled catalog.
ingest::CweRecord catalog_entry(const std::string& cwe_id);

/// Call graph of `unit` merged with the bundled catalog, sealed.
graph::PropertyGraph merged_graph(const callgraph::TranslationUnit& unit);

/// Union, over every defined function name used as the start name, of the
/// non-null path end nodes returned by the generated query.
std::set<graph::NodeId> query_terminals(const graph::PropertyGraph& graph,
                                        const callgraph::TranslationUnit& unit,
                                        const ingest::CweRecord& cwe);

/// Union of terminal_nodes reported by the matching programmatic detector.
std::set<graph::NodeId> detector_terminals(const graph::PropertyGraph& graph, const ingest::CweRecord& cwe);

std::string read_text(const std::string& path);

}  // namespace pkgraph::support
