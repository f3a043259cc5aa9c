// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/vuln_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <utility>

#include "pkgraph/csv.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/schema.hpp"

namespace pkgraph::ingest {

namespace {

bool all_digits(std::string_view text) {
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Returns the data records after validating the header row.
std::vector<csv::Record> data_records(std::string_view text, std::string_view header) {
    auto records = csv::parse(text);
    if (records.empty()) throw CsvError(1, "missing header row");
    const auto& first = records.front();
    std::string found;
    for (std::size_t k = 0; k < first.fields.size(); ++k) {
        if (k > 0) found.push_back(',');
        found += csv::trim(first.fields[k].text);
    }
    if (found != header) {
        throw CsvError(first.line, "expected header `" + std::string(header) + "`, found `" + found + "`");
    }
    records.erase(records.begin());

    const std::size_t columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
    for (const auto& record : records) {
        if (record.fields.size() != columns) {
            throw CsvError(record.line, "expected " + std::to_string(columns) + " columns, found " +
                                            std::to_string(record.fields.size()));
        }
    }
    return records;
}

std::string cell(const csv::Record& record, std::size_t column) {
    return std::string(csv::trim(record.fields[column].text));
}

}  // namespace

bool is_cwe_id(std::string_view text) {
    if (!text.starts_with("CWE-")) return false;
    auto digits = text.substr(4);
    return all_digits(digits) && digits.front() != '0';
}

bool is_cve_id(std::string_view text) {
    if (!text.starts_with("CVE-") || text.size() < 10) return false;
    auto year = text.substr(4, 4);
    if (!all_digits(year) || text[8] != '-') return false;
    auto serial = text.substr(9);
    return serial.size() >= 4 && all_digits(serial);
}

bool is_c_identifier(std::string_view text) {
    if (text.empty()) return false;
    auto head = static_cast<unsigned char>(text.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::vector<CweRecord> parse_cwe_csv(std::string_view text) {
    std::vector<CweRecord> out;
    for (const auto& record : data_records(text, kCweHeader)) {
        CweRecord cwe;
        cwe.cwe_id = cell(record, 0);
        cwe.name = cell(record, 1);
        cwe.description = cell(record, 2);
        cwe.function_events = csv::split_list(record.fields[3].text);
        if (!is_cwe_id(cwe.cwe_id)) {
            throw CsvError(record.line, "malformed cwe_id `" + cwe.cwe_id + "`");
        }
        if (cwe.name.empty()) throw CsvError(record.line, "empty name for " + cwe.cwe_id);
        for (const auto& event : cwe.function_events) {
            if (!is_c_identifier(event)) {
                throw CsvError(record.line, "function event `" + event + "` is not an identifier");
            }
        }
        out.push_back(std::move(cwe));
    }
    return out;
}

std::vector<CveRecord> parse_cve_csv(std::string_view text) {
    std::vector<CveRecord> out;
    for (const auto& record : data_records(text, kCveHeader)) {
        CveRecord cve;
        cve.cve_id = cell(record, 0);
        cve.description = cell(record, 1);
        cve.cwe_id = cell(record, 2);
        cve.product = cell(record, 4);
        cve.affected_versions = csv::split_list(record.fields[5].text);
        if (!is_cve_id(cve.cve_id)) {
            throw CsvError(record.line, "malformed cve_id `" + cve.cve_id + "`");
        }

        const std::string score = cell(record, 3);
        const char* first = score.data();
        const char* last = score.data() + score.size();
        auto [end, ec] = std::from_chars(first, last, cve.cvss2_score);
        if (score.empty() || ec != std::errc{} || end != last) {
            throw CsvError(record.line, "non-numeric cvss2_score `" + score + "`");
        }
        if (!(cve.cvss2_score >= 0.0 && cve.cvss2_score <= 10.0)) {
            throw CsvError(record.line, "cvss2_score " + score + " outside [0, 10]");
        }
        out.push_back(std::move(cve));
    }
    return out;
}

IngestStats build_knowledge_graph(std::span<const CweRecord> cwes,
                                  std::span<const CveRecord> cves,
                                  graph::PropertyGraph& graph) {
    if (graph.sealed()) throw GraphSealedError();
    const std::size_t nodes_before = graph.node_count();
    const std::size_t edges_before = graph.edge_count();
    IngestStats stats;

    std::map<std::string, graph::NodeId> cwe_nodes;
    for (const auto& cwe : cwes) {
        auto id = graph.add_node(schema::kCweLabel,
                                 {{schema::kCweId, cwe.cwe_id},
                                  {schema::kName, cwe.name},
                                  {schema::kDescription, cwe.description},
                                  {schema::kFunctionEvents, graph::TextList(cwe.function_events)}});
        cwe_nodes.try_emplace(cwe.cwe_id, id);
    }

    std::map<std::pair<std::string, std::string>, graph::NodeId> products;
    for (graph::NodeId id : graph.find_nodes(schema::kProductLabel)) {
        const auto& node = graph.node(id);
        const auto* name = node.property(schema::kName);
        const auto* version = node.property(schema::kVersion);
        if (name && version && name->is_text() && version->is_text()) {
            products.try_emplace({name->as_text(), version->as_text()}, id);
        }
    }

    for (const auto& cve : cves) {
        auto cve_node = graph.add_node(schema::kCveLabel, {{schema::kCveId, cve.cve_id},
                                                           {schema::kDescription, cve.description}});
        if (auto owner = cwe_nodes.find(cve.cwe_id); owner != cwe_nodes.end()) {
            graph.add_edge(owner->second, cve_node, schema::kHasCve);
        } else {
            ++stats.orphan_cves;
        }

        auto score = graph.add_node(schema::kScoreLabel, {{schema::kCvss2, cve.cvss2_score}});
        graph.add_edge(cve_node, score, schema::kScored);

        for (const auto& version : cve.affected_versions) {
            auto [it, inserted] = products.try_emplace({cve.product, version}, graph::NodeId{});
            if (inserted) {
                it->second = graph.add_node(schema::kProductLabel,
                                            {{schema::kName, cve.product}, {schema::kVersion, version}});
            }
            graph.add_edge(cve_node, it->second, schema::kAffects);
        }
    }

    stats.nodes_created = graph.node_count() - nodes_before;
    stats.edges_created = graph.edge_count() - edges_before;
    return stats;
}

}  // namespace pkgraph::ingest
