// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/report_export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include "json.hpp"
#include <set>

#include "pkgraph/c_callgraph.hpp"
#include "pkgraph/csv.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/schema.hpp"

namespace pkgraph::report {

namespace {

using Kind = graph::PropertyValue::Kind;

bool plain_key(std::string_view key) {
    if (key.empty() || std::isdigit(static_cast<unsigned char>(key[0]))) return false;
    return std::all_of(key.begin(), key.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string render_key(const std::string& key) {
    if (plain_key(key)) return key;
    std::string out = "`";
    for (char c : key) {
        if (c == '`') out.push_back('`');
        out.push_back(c);
    }
    return out + "`";
}

nlohmann::ordered_json property_json(const graph::PropertyValue& value) {
    switch (value.kind()) {
        case Kind::Text: return value.as_text();
        case Kind::Integer: return value.as_integer();
        case Kind::Real: return value.as_real();
        case Kind::TextList: return value.as_text_list();
    }
    return nullptr;
}

// --- CSV ----------------------------------------------------------------

struct Column {
    std::string key;
    Kind kind;
    friend auto operator<=>(const Column&, const Column&) = default;
};

constexpr std::array<std::string_view, 4> kSuffix = {"", ":int", ":float", ":string[]"};

std::string header_of(const Column& c) { return c.key + std::string(kSuffix[static_cast<std::size_t>(c.kind)]); }

Column parse_header(const csv::Field& field, std::size_t line) {
    const std::string& text = field.text;
    for (std::size_t k = 1; k < kSuffix.size(); ++k) {
        const auto suffix = kSuffix[k];
        if (text.size() > suffix.size() && text.ends_with(suffix)) {
            return {text.substr(0, text.size() - suffix.size()), static_cast<Kind>(k)};
        }
    }
    if (text.empty() || text.find(':') != std::string::npos) {
        throw CsvError(line, "unsupported column header `" + text + "`");
    }
    return {text, Kind::Text};
}

std::vector<Column> columns_of(const auto& items, const char* what) {
    std::set<Column> columns;
    for (const auto& item : items) {
        for (const auto& [key, value] : item.properties) {
            if (key.empty() || key.find(':') != std::string::npos) {
                throw ExportError(std::string(what) + " property key `" + key + "` cannot be a CSV column");
            }
            columns.insert({key, value.kind()});
        }
    }
    return {columns.begin(), columns.end()};
}

std::string cell(const graph::PropertyMap& props, const Column& column) {
    auto it = props.find(column.key);
    if (it == props.end() || it->second.kind() != column.kind) return "";
    const auto& value = it->second;
    switch (column.kind) {
        case Kind::Text: return csv::escape(value.as_text(), value.as_text().empty());
        case Kind::Integer: return std::to_string(value.as_integer());
        case Kind::Real: return format_real(value.as_real());
        case Kind::TextList: {
            std::string joined;
            for (const auto& element : value.as_text_list()) {
                if (element.find(';') != std::string::npos) {
                    throw ExportError("list element `" + element + "` contains ';'");
                }
                if (!joined.empty()) joined.push_back(';');
                joined += element;
            }
            return csv::escape(joined, joined.empty());
        }
    }
    return "";
}

graph::PropertyValue parse_cell(const csv::Field& field, const Column& column, std::size_t line) {
    const std::string& text = field.text;
    auto bad = [&](const char* what) {
        return CsvError(line, std::string(what) + " `" + text + "` in column " + header_of(column));
    };
    switch (column.kind) {
        case Kind::Text: return graph::PropertyValue(text);
        case Kind::Integer: {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) throw bad("bad integer");
            return graph::PropertyValue(v);
        }
        case Kind::Real: {
            double v = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) throw bad("bad float");
            return graph::PropertyValue(v);
        }
        case Kind::TextList: {
            graph::TextList list;
            std::size_t begin = 0;
            while (!text.empty() && begin <= text.size()) {
                std::size_t end = text.find(';', begin);
                if (end == std::string::npos) end = text.size();
                if (end == begin) throw bad("empty list element");
                list.push_back(text.substr(begin, end - begin));
                begin = end + 1;
            }
            return graph::PropertyValue(std::move(list));
        }
    }
    return {};
}

graph::PropertyMap read_properties(const csv::Record& record, std::size_t first,
                                   const std::vector<Column>& columns) {
    graph::PropertyMap props;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        const csv::Field& field = record.fields[first + k];
        if (field.text.empty() && !field.quoted) continue;
        if (props.contains(columns[k].key)) {
            throw CsvError(record.line, "property `" + columns[k].key + "` given twice");
        }
        props.emplace(columns[k].key, parse_cell(field, columns[k], record.line));
    }
    return props;
}

void require_sealed(const graph::PropertyGraph& graph) {
    if (!graph.sealed()) throw ExportError("graph must be sealed before export");
}

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out + "\"";
}

}  // namespace

std::string format_real(double value) {
    std::array<char, 64> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    std::string out(buffer.data(), ptr);
    if (out.find_first_of(".ein") == std::string::npos) out += ".0";
    return out;
}

std::string quote_text(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string render_property_value(const graph::PropertyValue& value) {
    switch (value.kind()) {
        case Kind::Text: return quote_text(value.as_text());
        case Kind::Integer: return std::to_string(value.as_integer());
        case Kind::Real: return format_real(value.as_real());
        case Kind::TextList: {
            std::string out = "[";
            const auto& list = value.as_text_list();
            for (std::size_t k = 0; k < list.size(); ++k) {
                if (k > 0) out += ", ";
                out += quote_text(list[k]);
            }
            return out + "]";
        }
    }
    return {};
}

std::string render_properties(const graph::PropertyMap& properties) {
    if (properties.empty()) return {};
    std::string out = " {";
    bool first = true;
    for (const auto& [key, value] : properties) {
        if (!first) out += ", ";
        first = false;
        out += render_key(key) + ": " + render_property_value(value);
    }
    return out + "}";
}

std::string render_node(const graph::Node& node) {
    return "(:" + render_key(node.label) + render_properties(node.properties) + ")";
}

std::string render_relationship(const graph::Edge& edge) {
    return "[:" + render_key(edge.type) + render_properties(edge.properties) + "]";
}

std::string render_path(const graph::PropertyGraph& graph, const graph::Path& path) {
    std::string out = render_node(graph.node(path.nodes.front()));
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
        out += "-" + render_relationship(graph.edge(path.edges[k])) + "->";
        out += render_node(graph.node(path.nodes[k + 1]));
    }
    return out;
}

std::string render_call_graph_table(const graph::PropertyGraph& graph) {
    std::vector<const graph::Node*> nodes;
    std::size_t arguments = 1;
    if (auto bucket = graph.label_index().find(schema::kCallGraphLabel); bucket != graph.label_index().end()) {
        for (auto id : bucket->second) {
            const auto& node = graph.node(id);
            nodes.push_back(&node);
            while (node.properties.contains(callgraph::argument_key(arguments + 1))) ++arguments;
        }
    }
    auto order = [](const graph::Node* n) {
        const auto* v = n->property(schema::kExecOrder);
        return v && v->is_integer() ? v->as_integer() : std::numeric_limits<std::int64_t>::max();
    };
    std::stable_sort(nodes.begin(), nodes.end(),
                     [&](const auto* a, const auto* b) { return order(a) < order(b); });

    std::vector<std::string> keys = {schema::kExecOrder, schema::kName};
    for (std::size_t k = 1; k <= arguments; ++k) keys.push_back(callgraph::argument_key(k));

    auto line = [](const std::vector<std::string>& cells) {
        std::string out = "|";
        for (const auto& c : cells) out += " " + c + " |";
        return out + "\n";
    };
    std::string out = line(keys);
    for (const auto* node : nodes) {
        std::vector<std::string> cells;
        for (const auto& key : keys) {
            const auto* v = node->property(key);
            if (!v) cells.emplace_back();
            else if (v->is_text()) cells.push_back(v->as_text());
            else cells.push_back(render_property_value(*v));
        }
        out += line(cells);
    }
    return out;
}

std::string findings_to_json(const graph::PropertyGraph& graph, std::span<const detect::Finding> findings,
                             std::span<const detect::DetectorCapability> capabilities) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : findings) {
        nlohmann::ordered_json item;
        item["cwe_id"] = f.cwe_id;
        item["cwe_name"] = f.cwe_name;
        item["message"] = f.message;
        item["paths"] = nlohmann::ordered_json::array();
        for (const auto& p : f.witness_paths) item["paths"].push_back(render_path(graph, p));
        item["terminals"] = nlohmann::ordered_json::array();
        for (auto id : f.terminal_nodes) {
            const auto& node = graph.node(id);
            nlohmann::ordered_json props = nlohmann::ordered_json::object();
            for (const auto& [key, value] : node.properties) props[key] = property_json(value);
            item["terminals"].push_back({{"label", node.label}, {"properties", std::move(props)}});
        }
        doc["findings"].push_back(std::move(item));
    }
    doc["unsupported"] = nlohmann::ordered_json::array();
    for (const auto& c : capabilities) {
        if (c.supported) continue;
        doc["unsupported"].push_back({{"cwe_id", c.cwe_id}, {"reason", c.reason}});
    }
    return doc.dump();
}

CsvExport export_csv(const graph::PropertyGraph& graph) {
    require_sealed(graph);
    CsvExport out;

    const auto node_columns = columns_of(graph.nodes(), "node");
    std::vector<std::string> header = {"id:ID", ":LABEL"};
    for (const auto& c : node_columns) header.push_back(csv::escape(header_of(c)));
    out.nodes = csv::join(header);
    for (const auto& node : graph.nodes()) {
        std::vector<std::string> row = {std::to_string(node.id.value), csv::escape(node.label)};
        for (const auto& c : node_columns) row.push_back(cell(node.properties, c));
        out.nodes += csv::join(row);
    }

    const auto edge_columns = columns_of(graph.edges(), "relationship");
    header = {":START_ID", ":END_ID", ":TYPE"};
    for (const auto& c : edge_columns) header.push_back(csv::escape(header_of(c)));
    out.relationships = csv::join(header);
    for (const auto& edge : graph.edges()) {
        std::vector<std::string> row = {std::to_string(edge.source.value), std::to_string(edge.target.value),
                                        csv::escape(edge.type)};
        for (const auto& c : edge_columns) row.push_back(cell(edge.properties, c));
        out.relationships += csv::join(row);
    }
    return out;
}

graph::PropertyGraph import_csv(std::string_view nodes, std::string_view relationships) {
    graph::PropertyGraph graph;
    std::map<std::string, graph::NodeId> ids;

    auto node_records = csv::parse(nodes);
    if (node_records.empty()) throw CsvError(1, "missing nodes header");
    const auto& node_header = node_records.front();
    if (node_header.fields.size() < 2 || node_header.fields[0].text != "id:ID" ||
        node_header.fields[1].text != ":LABEL") {
        throw CsvError(node_header.line, "nodes header must start with id:ID,:LABEL");
    }
    std::vector<Column> node_columns;
    for (std::size_t k = 2; k < node_header.fields.size(); ++k) {
        node_columns.push_back(parse_header(node_header.fields[k], node_header.line));
    }
    for (std::size_t r = 1; r < node_records.size(); ++r) {
        const auto& record = node_records[r];
        if (record.fields.size() != node_header.fields.size()) {
            throw CsvError(record.line, "expected " + std::to_string(node_header.fields.size()) + " fields, found " +
                                            std::to_string(record.fields.size()));
        }
        if (record.fields[1].text.empty()) throw CsvError(record.line, "empty label");
        auto id = graph.add_node(record.fields[1].text, read_properties(record, 2, node_columns));
        if (!ids.emplace(record.fields[0].text, id).second) {
            throw CsvError(record.line, "duplicate node id `" + record.fields[0].text + "`");
        }
    }

    auto edge_records = csv::parse(relationships);
    if (edge_records.empty()) throw CsvError(1, "missing relationships header");
    const auto& edge_header = edge_records.front();
    if (edge_header.fields.size() < 3 || edge_header.fields[0].text != ":START_ID" ||
        edge_header.fields[1].text != ":END_ID" || edge_header.fields[2].text != ":TYPE") {
        throw CsvError(edge_header.line, "relationships header must start with :START_ID,:END_ID,:TYPE");
    }
    std::vector<Column> edge_columns;
    for (std::size_t k = 3; k < edge_header.fields.size(); ++k) {
        edge_columns.push_back(parse_header(edge_header.fields[k], edge_header.line));
    }
    for (std::size_t r = 1; r < edge_records.size(); ++r) {
        const auto& record = edge_records[r];
        if (record.fields.size() != edge_header.fields.size()) {
            throw CsvError(record.line, "expected " + std::to_string(edge_header.fields.size()) + " fields, found " +
                                            std::to_string(record.fields.size()));
        }
        auto endpoint = [&](const csv::Field& field) {
            auto it = ids.find(field.text);
            if (it == ids.end()) throw CsvError(record.line, "unknown node id `" + field.text + "`");
            return it->second;
        };
        if (record.fields[2].text.empty()) throw CsvError(record.line, "empty relationship type");
        graph.add_edge(endpoint(record.fields[0]), endpoint(record.fields[1]), record.fields[2].text,
                       read_properties(record, 3, edge_columns));
    }
    return graph;
}

std::string export_dot(const graph::PropertyGraph& graph) {
    require_sealed(graph);
    if (graph.node_count() == 0) return "digraph G { }\n";
    std::string out = "digraph G {\n";
    for (const auto& node : graph.nodes()) {
        const auto* name = node.property(schema::kName);
        std::string label = name && name->is_text() ? name->as_text() : node.label;
        out += "  n" + std::to_string(node.id.value) + " [label=" + dot_quote(label) + "];\n";
    }
    for (const auto& edge : graph.edges()) {
        out += "  n" + std::to_string(edge.source.value) + " -> n" + std::to_string(edge.target.value) +
               " [label=" + dot_quote(edge.type) + "];\n";
    }
    return out + "}\n";
}

}  // namespace pkgraph::report
