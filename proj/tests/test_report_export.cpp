// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"
#include "oracle.hpp"
#include "pkgraph/cli.hpp"
#include "pkgraph/cwe_detectors.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/report_export.hpp"

using namespace pkgraph;

namespace {

const std::string kFixtures = std::string(PKGRAPH_SOURCE_DIR) + "/tests/fixtures/";

graph::PropertyGraph call_graph(const std::string& file) {
    graph::PropertyGraph g;
    callgraph::build_call_graph(callgraph::extract_translation_unit(support::read_text(kFixtures + file)), g);
    g.seal();
    return g;
}

std::size_t lines(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

graph::NodeId by_order(const graph::PropertyGraph& g, std::int64_t order) {
    for (std::size_t k = 0; k < g.node_count(); ++k) {
        graph::NodeId id{k};
        const auto* v = g.node(id).property("ExecOrder");
        if (v && v->as_integer() == order) return id;
    }
    throw std::runtime_error("no node");
}

}  // namespace

TEST(Render, Nodes) {
    auto g = call_graph("double_free.c");
    EXPECT_EQ(report::render_node(g.node(by_order(g, 1))), "(:CallGraph {ExecOrder: 1, Name: \"foo\"})");
    EXPECT_EQ(report::render_node(g.node(by_order(g, 6))), "(:CallGraph {Argument1: \"ptr\", ExecOrder: 6, Name: \"free\"})");
    graph::Node bare{graph::NodeId{0}, "CWE", {}};
    EXPECT_EQ(report::render_node(bare), "(:CWE)");
}

TEST(Render, ScalarsAndQuoting) {
    EXPECT_EQ(report::quote_text("a\"b"), "\"a\\\"b\"");
    EXPECT_EQ(report::format_real(7.5), "7.5");
    EXPECT_EQ(report::format_real(3.0), "3.0");
    EXPECT_EQ(report::render_property_value(graph::PropertyValue(graph::TextList{"gets", "atoi"})), "[\"gets\", \"atoi\"]");
    graph::Node spaced{graph::NodeId{0}, "CWE", {{"CWE-ID", "CWE-242"}}};
    EXPECT_EQ(report::render_node(spaced), "(:CWE {`CWE-ID`: \"CWE-242\"})");
}

TEST(Render, Paths) {
    auto g = call_graph("double_free.c");
    auto to_free = g.out_edges(by_order(g, 1));
    graph::Path second;
    for (auto e : to_free)
        if (g.edge(e).target == by_order(g, 7)) second = {{by_order(g, 1), by_order(g, 7)}, {e}};
    std::istringstream golden_paths(support::read_text(kFixtures + "double_free_paths.txt"));
    std::string path1, path2;
    std::getline(golden_paths, path1);
    std::getline(golden_paths, path2);
    EXPECT_EQ(report::render_path(g, second), path2);
    EXPECT_EQ(report::render_path(g, graph::Path{{by_order(g, 1)}, {}}), "(:CallGraph {ExecOrder: 1, Name: \"foo\"})");
}

TEST(Render, TwoFunctionsPathComposesNodes) {
    auto g = call_graph("two_functions.c");
    auto findings = detect::detect_banned_calls(g, support::catalog_entry("CWE-242"));
    ASSERT_EQ(findings.size(), 1u);
    const auto& path = findings[0].witness_paths.at(0);
    ASSERT_EQ(path.nodes.size(), 4u);
    std::string expected;
    for (std::size_t k = 0; k < path.nodes.size(); ++k) {
        if (k) expected += "-[:CALLS]->";
        expected += report::render_node(g.node(path.nodes[k]));
    }
    EXPECT_EQ(report::render_path(g, path), expected);
}

TEST(Render, CallGraphTable) {
    EXPECT_EQ(report::render_call_graph_table(call_graph("double_free.c")), support::read_text(kFixtures + "double_free_nodes.txt"));
}

TEST(FindingsJson, DoubleFreeDoubleFree) {
    auto g = call_graph("double_free.c");
    auto findings = detect::detect_double_release(g, support::catalog_entry("CWE-415"));
    auto text = report::findings_to_json(g, findings, {});
    auto parsed = nlohmann::ordered_json::parse(text);
    EXPECT_EQ(parsed["version"], 1);
    ASSERT_EQ(parsed["findings"].size(), 1u);
    std::string paths;
    for (const auto& p : parsed["findings"][0]["paths"]) paths += p.get<std::string>() + "\n";
    EXPECT_EQ(paths, support::read_text(kFixtures + "double_free_paths.txt"));
    EXPECT_EQ(parsed["findings"][0]["terminals"][0]["label"], "CallGraph");
    EXPECT_EQ(parsed.dump(), text);
}

TEST(FindingsJson, Empty) {
    graph::PropertyGraph g;
    g.seal();
    std::vector<detect::DetectorCapability> caps{{"CWE-401", false, "no data-flow"}};
    EXPECT_EQ(report::findings_to_json(g, {}, caps),
              "{\"version\":1,\"findings\":[],\"unsupported\":[{\"cwe_id\":\"CWE-401\",\"reason\":\"no data-flow\"}]}");
    EXPECT_EQ(report::findings_to_json(g, {}, {}), "{\"version\":1,\"findings\":[],\"unsupported\":[]}");
}

TEST(Csv, DoubleFreeCounts) {
    auto csv = report::export_csv(call_graph("double_free.c"));
    EXPECT_EQ(lines(csv.nodes), 8u);
    EXPECT_EQ(lines(csv.relationships), 7u);
    EXPECT_EQ(csv.nodes.substr(0, csv.nodes.find('\n')), "id:ID,:LABEL,Argument1,ExecOrder:int,Name");
    EXPECT_EQ(csv.relationships.substr(0, csv.relationships.find('\n')), ":START_ID,:END_ID,:TYPE");
}

TEST(Csv, EmptyGraphIsHeaderOnly) {
    graph::PropertyGraph g;
    g.seal();
    auto csv = report::export_csv(g);
    EXPECT_EQ(csv.nodes, "id:ID,:LABEL\n");
    EXPECT_EQ(csv.relationships, ":START_ID,:END_ID,:TYPE\n");
}

TEST(Csv, RoundTripIsByteIdentical) {
    auto unit = callgraph::extract_translation_unit(support::read_text(kFixtures + "two_functions.c"));
    auto g = support::merged_graph(unit);
    auto first = report::export_csv(g);
    auto back = report::import_csv(first.nodes, first.relationships);
    EXPECT_EQ(back.node_count(), g.node_count());
    EXPECT_EQ(back.edge_count(), g.edge_count());
    back.seal();
    auto second = report::export_csv(back);
    EXPECT_EQ(second.nodes, first.nodes);
    EXPECT_EQ(second.relationships, first.relationships);
}

TEST(Csv, RoundTripRandomGraphs) {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 50; ++round) {
        auto g = support::random_graph(rng, round % 2 == 0);
        auto first = report::export_csv(g);
        auto back = report::import_csv(first.nodes, first.relationships);
        back.seal();
        auto second = report::export_csv(back);
        EXPECT_EQ(second.nodes, first.nodes);
        EXPECT_EQ(second.relationships, first.relationships);
    }
}

TEST(Csv, Errors) {
    graph::PropertyGraph open;
    EXPECT_THROW(report::export_csv(open), ExportError);
    EXPECT_THROW(report::export_dot(open), ExportError);
    graph::PropertyGraph keyed;
    keyed.add_node("N", {{"a:b", 1}});
    keyed.seal();
    EXPECT_THROW(report::export_csv(keyed), ExportError);
    graph::PropertyGraph listed;
    listed.add_node("N", {{"xs", graph::TextList{"a;b"}}});
    listed.seal();
    EXPECT_THROW(report::export_csv(listed), ExportError);
    EXPECT_THROW(report::import_csv("id:ID,:LABEL\n0\n", ":START_ID,:END_ID,:TYPE\n"), CsvError);
    EXPECT_THROW(report::import_csv("id:ID,:LABEL\n0,N\n", ":START_ID,:END_ID,:TYPE\n0,7,CALLS\n"), CsvError);
}

TEST(Dot, DoubleFreeCounts) {
    auto dot = report::export_dot(call_graph("double_free.c"));
    std::size_t nodes = 0, edges = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        if (line.find(" -> ") != std::string::npos)
            ++edges;
        else if (line.find("[label=") != std::string::npos)
            ++nodes;
    }
    EXPECT_EQ(nodes, 7u);
    EXPECT_EQ(edges, 6u);
    EXPECT_NE(dot.find("n0 [label=\"foo\"];"), std::string::npos);
    EXPECT_EQ(dot, report::export_dot(call_graph("double_free.c")));
}

TEST(Dot, EmptyGraph) {
    graph::PropertyGraph g;
    g.seal();
    EXPECT_EQ(report::export_dot(g), "digraph G { }\n");
}
