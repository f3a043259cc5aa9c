// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pkgraph/graph_store.hpp"

namespace pkgraph::ingest {

struct CweRecord {
    std::string cwe_id;
    std::string name;
    std::string description;
    std::vector<std::string> function_events;
};

struct CveRecord {
    std::string cve_id;
    std::string description;
    std::string cwe_id;
    double cvss2_score = 0.0;
    std::string product;
    std::vector<std::string> affected_versions;
};

struct IngestStats {
    std::size_t nodes_created = 0;
    std::size_t edges_created = 0;
    std::size_t orphan_cves = 0;
    friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

inline constexpr std::string_view kCweHeader = "cwe_id,name,description,function_events";
inline constexpr std::string_view kCveHeader =
    "cve_id,description,cwe_id,cvss2_score,product,affected_versions";

/// Throws CsvError for a missing/wrong header, wrong column count, a malformed
/// CWE id, an empty name or a function event that is not a C identifier.
std::vector<CweRecord> parse_cwe_csv(std::string_view text);

/// Throws CsvError for a missing/wrong header, wrong column count, a malformed
/// CVE id, or a CVSS2 score that is non-numeric or outside [0, 10].
std::vector<CveRecord> parse_cve_csv(std::string_view text);

/// Materializes CWE -HAS_CVE-> CVE -SCORED-> Score and CVE -AFFECTS-> Product.
/// Product nodes are shared per (product, version); Score nodes are per CVE.
/// A CVE whose CWE is not in `cwes` is ingested without HAS_CVE and counted
/// as an orphan.
IngestStats build_knowledge_graph(std::span<const CweRecord> cwes,
                                  std::span<const CveRecord> cves,
                                  graph::PropertyGraph& graph);

bool is_cwe_id(std::string_view text);
bool is_cve_id(std::string_view text);
bool is_c_identifier(std::string_view text);

}  // namespace pkgraph::ingest
