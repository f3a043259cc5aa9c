// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Canonical text forms of graph elements, findings serialization, and CSV/DOT
// export. Output is byte-stable and locale-independent.
//
// Node form: (:Label {key: value, ...}) with keys ascending, text in double
// quotes (only '"' is escaped), integers bare, reals in shortest round-trip
// form with at least one fractional digit.

#include <span>
#include <string>
#include <string_view>

#include "pkgraph/cwe_detectors.hpp"
#include "pkgraph/graph_store.hpp"

namespace pkgraph::report {

/// Format version; options are fixed in this version.
struct RenderOptions {
    int version = 1;
};

std::string format_real(double value);
std::string quote_text(std::string_view text);
std::string render_property_value(const graph::PropertyValue& value);
std::string render_properties(const graph::PropertyMap& properties);

std::string render_node(const graph::Node& node);
/// "[:TYPE]" plus properties when present.
std::string render_relationship(const graph::Edge& edge);
std::string render_path(const graph::PropertyGraph& graph, const graph::Path& path);

/// "| ExecOrder | Name | Argument1 |" table of every CallGraph node by
/// ExecOrder. Absent properties render as blank cells; ArgumentK columns
/// beyond the first appear only when some node has them.
std::string render_call_graph_table(const graph::PropertyGraph& graph);

/// Compact JSON object {version, findings, unsupported}.
std::string findings_to_json(const graph::PropertyGraph& graph, std::span<const detect::Finding> findings,
                             std::span<const detect::DetectorCapability> capabilities);

struct CsvExport {
    std::string nodes;
    std::string relationships;
};

/// Bulk-import style files. Throws ExportError for an unsealed graph, a
/// property key containing ':', or a list element containing ';'.
CsvExport export_csv(const graph::PropertyGraph& graph);

/// Rebuilds an (unsealed) graph from export_csv output. Throws CsvError.
graph::PropertyGraph import_csv(std::string_view nodes, std::string_view relationships);

/// Throws ExportError for an unsealed graph.
std::string export_dot(const graph::PropertyGraph& graph);

}  // namespace pkgraph::report
