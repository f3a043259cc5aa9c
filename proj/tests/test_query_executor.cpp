// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "pkgraph/c_callgraph.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/query/executor.hpp"
#include "pkgraph/query/parser.hpp"
#include "pkgraph/schema.hpp"

using namespace pkgraph;
using namespace pkgraph::query;

namespace {

const std::string kFixtures = std::string(PKGRAPH_SOURCE_DIR) + "/tests/fixtures/";

graph::PropertyGraph program(const std::string& source) {
    return support::merged_graph(callgraph::extract_translation_unit(source));
}

ResultTable run(const std::string& text, const graph::PropertyGraph& g) { return execute_query(parse_query(text), g); }

std::vector<std::string> column(const ResultTable& t, std::size_t k = 0) {
    std::vector<std::string> out;
    for (const auto& row : t.rows) out.push_back(row.at(k));
    return out;
}

// a -CALLS-> b -CALLS-> c, a -OTHER-> c; a.k=1, b.k=2, c.k=3.
graph::PropertyGraph chain() {
    graph::PropertyGraph g;
    auto a = g.add_node("N", {{"k", 1}, {"name", "a"}});
    auto b = g.add_node("N", {{"k", 2}, {"name", "b"}});
    auto c = g.add_node("N", {{"k", 3}});
    g.add_edge(a, b, "CALLS");
    g.add_edge(b, c, "CALLS");
    g.add_edge(a, c, "OTHER");
    g.seal();
    return g;
}

}  // namespace

TEST(Execute, DoubleReleaseQueryReturnsGoldenPaths) {
    auto g = program(support::read_text(kFixtures + "double_free.c"));
    auto result = run(support::read_text(kFixtures + "double_release.cql"), g);
    EXPECT_EQ(result.columns, std::vector<std::string>{"path"});
    std::vector<std::string> expected;
    std::istringstream in(support::read_text(kFixtures + "double_free_paths.txt"));
    for (std::string line; std::getline(in, line);) expected.push_back(line);
    EXPECT_EQ(column(result), expected);
}

TEST(Execute, DoubleReleaseQueryWithSingleFreeReturnsNothing) {
    auto g = program("void foo() { char *p = malloc(4); free(p); }");
    EXPECT_TRUE(run(support::read_text(kFixtures + "double_release.cql"), g).rows.empty());
}

TEST(Execute, DoubleReleaseQueryStartsOnlyFromNamedFunction) {
    // Entry is main, not foo: the OPTIONAL MATCH misses and yields null paths.
    auto g = program(support::read_text(kFixtures + "two_functions.c"));
    EXPECT_EQ(column(run(support::read_text(kFixtures + "double_release.cql"), g)), (std::vector<std::string>{"null", "null"}));
}

TEST(Execute, GroupAndCountNames) {
    auto g = program(support::read_text(kFixtures + "double_free.c"));
    auto result = run("MATCH (n:CallGraph) WITH n.Name AS nm, COUNT(n) AS c RETURN nm, c", g);
    ASSERT_EQ(result.rows.size(), 6u);
    EXPECT_NE(std::find(result.rows.begin(), result.rows.end(), std::vector<std::string>{"\"free\"", "2"}),
              result.rows.end());
    EXPECT_NE(std::find(result.rows.begin(), result.rows.end(), std::vector<std::string>{"\"gets\"", "1"}),
              result.rows.end());
}

TEST(Execute, MembershipFilterFromCatalogNode) {
    auto g = program(support::read_text(kFixtures + "double_free.c"));
    auto result = run("MATCH (c:CWE {`CWE-ID`: 'CWE-242'}) MATCH (n:CallGraph {Name: c.`Function Events`}) RETURN n.Name, n.ExecOrder", g);
    ASSERT_EQ(result.rows.size(), 1u);
    EXPECT_EQ(result.rows[0], (std::vector<std::string>{"\"gets\"", "3"}));
}

TEST(Execute, OptionalMatchKeepsRowsWithNulls) {
    auto g = chain();
    auto result = run("MATCH (n:N) OPTIONAL MATCH (n)-[:CALLS]->(m) RETURN n.k, m.k", g);
    EXPECT_EQ(result.rows, (std::vector<std::vector<std::string>>{{"1", "2"}, {"2", "3"}, {"3", "null"}}));
}

TEST(Execute, NullRules) {
    auto g = chain();
    // Missing property is null; comparison with null drops the row.
    EXPECT_EQ(run("MATCH (n:N) WHERE n.name = 'x' OR n.name <> 'x' RETURN n.k", g).rows.size(), 2u);
    // COLLECT and COUNT skip nulls.
    auto counted = run("MATCH (n:N) RETURN COUNT(n.name) AS named, COUNT(*) AS all, SIZE(COLLECT(n.name)) AS s", g);
    EXPECT_EQ(counted.rows, (std::vector<std::vector<std::string>>{{"2", "3", "2"}}));
    // SIZE(null) is 0; NOT null is null.
    EXPECT_EQ(run("MATCH (n:N {k: 3}) RETURN SIZE(n.name), NOT n.name", g).rows,
              (std::vector<std::vector<std::string>>{{"0", "null"}}));
    // Three-valued AND/OR.
    EXPECT_EQ(run("MATCH (n:N {k: 3}) RETURN n.name = 1 AND FALSE, n.name = 1 OR TRUE", g).rows,
              (std::vector<std::vector<std::string>>{{"false", "true"}}));
}

TEST(Execute, AggregateOverNoRows) {
    auto g = chain();
    EXPECT_EQ(run("MATCH (n:Missing) RETURN COUNT(n) AS c", g).rows, (std::vector<std::vector<std::string>>{{"0"}}));
    EXPECT_TRUE(run("MATCH (n:Missing) WITH n.k AS k, COUNT(n) AS c RETURN k, c", g).rows.empty());
}

TEST(Execute, UnwindDropsNullAndEmpty) {
    auto g = chain();
    EXPECT_EQ(column(run("MATCH (n:N) WITH COLLECT(n.k) AS ks UNWIND ks AS k RETURN k", g)),
              (std::vector<std::string>{"1", "2", "3"}));
    EXPECT_TRUE(run("MATCH (n:Missing) WITH COLLECT(n) AS xs UNWIND xs AS x RETURN x", g).rows.empty());
    EXPECT_TRUE(run("MATCH (n:N {k: 3}) UNWIND n.name AS x RETURN x", g).rows.empty());
}

TEST(Execute, VariableLengthAndPaths) {
    auto g = chain();
    EXPECT_EQ(column(run("MATCH (a:N {k: 1})-[*]->(b) RETURN b.k", g)), (std::vector<std::string>{"2", "3", "3"}));
    EXPECT_EQ(column(run("MATCH (a:N {k: 1})-[:CALLS*2]->(b) RETURN b.k", g)), (std::vector<std::string>{"3"}));
    EXPECT_EQ(column(run("MATCH (a:N {k: 1})-[:CALLS*..1]->(b) RETURN b.k", g)), (std::vector<std::string>{"2"}));
    EXPECT_EQ(column(run("MATCH p=(a:N {k: 1})-[:OTHER]->(b) RETURN p", g)),
              (std::vector<std::string>{"(:N {k: 1, name: \"a\"})-[:OTHER]->(:N {k: 3})"}));
    auto rels = run("MATCH (a:N {k: 1})-[r:CALLS*]->(b:N {k: 3}) RETURN SIZE(r)", g);
    EXPECT_EQ(column(rels), (std::vector<std::string>{"2"}));
}

TEST(Execute, RelationshipUniquenessAcrossSegments) {
    graph::PropertyGraph g;
    auto a = g.add_node("N", {{"k", 1}});
    auto b = g.add_node("N", {{"k", 2}});
    g.add_edge(a, b, "CALLS");
    g.add_edge(b, a, "CALLS");
    g.seal();
    // a->b->a->b would need the a->b edge twice.
    EXPECT_TRUE(run("MATCH (x:N {k: 1})-->(y)-->(z)-->(w) RETURN w", g).rows.empty());
    EXPECT_EQ(run("MATCH (x:N {k: 1})-->(y)-->(z) RETURN z.k", g).rows.size(), 1u);
}

TEST(Execute, BoundVariablesAcrossClauses) {
    auto g = chain();
    auto result = run("MATCH (a:N {k: 1}) WITH a MATCH (a)-[:CALLS]->(b) RETURN b.k", g);
    EXPECT_EQ(column(result), std::vector<std::string>{"2"});
    auto same = run("MATCH (a:N)-->(b) MATCH (b)-->(c) RETURN a.k, c.k", g);
    EXPECT_EQ(same.rows, (std::vector<std::vector<std::string>>{{"1", "3"}}));
}

TEST(Execute, ComparisonsAndNumericEquality) {
    auto g = chain();
    EXPECT_EQ(column(run("MATCH (n:N) WHERE n.k >= 2 AND n.k < 3 RETURN n.k", g)), std::vector<std::string>{"2"});
    EXPECT_EQ(column(run("MATCH (n:N) WHERE n.k = 2.0 RETURN n.k", g)), std::vector<std::string>{"2"});
    EXPECT_TRUE(run("MATCH (n:N) WHERE n.k = '2' RETURN n.k", g).rows.empty());
    EXPECT_TRUE(run("MATCH (n:N) WHERE n.k < 'z' RETURN n.k", g).rows.empty());
    EXPECT_EQ(column(run("MATCH (n:N) WHERE n.name > 'a' RETURN n.name", g)), std::vector<std::string>{"\"b\""});
    // Pattern filters use graph-store equality: integer 2 does not match 2.0.
    EXPECT_TRUE(run("MATCH (n:N {k: 2.0}) RETURN n", g).rows.empty());
}

TEST(Execute, Errors) {
    auto g = chain();
    try {
        run("MATCH (n:N) RETURN m.k", g);
        FAIL();
    } catch (const UnboundVariableError& e) {
        EXPECT_EQ(e.expression(), "m");
    }
    EXPECT_THROW(run("MATCH (n:N) WITH n.k AS k RETURN n", g), UnboundVariableError);
    EXPECT_THROW(run("MATCH (n:N {k: m.k})-->(m) RETURN n", g), UnboundVariableError);
    try {
        run("MATCH (n:N) RETURN SIZE(n.k)", g);
        FAIL();
    } catch (const TypeMismatchError& e) {
        EXPECT_EQ(e.expression(), "SIZE(n.k)");
    }
    EXPECT_THROW(run("MATCH (n:N) WHERE n.k RETURN n", g), TypeMismatchError);
    EXPECT_THROW(run("MATCH (n:N) WHERE COUNT(n) > 1 RETURN n", g), TypeMismatchError);
    EXPECT_THROW(run("MATCH (n:N) RETURN n.k.x", g), TypeMismatchError);
    graph::PropertyGraph unsealed;
    EXPECT_THROW(run("MATCH (n) RETURN n", unsealed), Error);
}

TEST(Execute, GroupingRowsEqualDistinctKeys) {
    std::mt19937_64 rng(21);
    const auto ast = parse_query("MATCH (n:CallGraph) WITH n.Argument1 AS a, n.Name AS nm, COLLECT(n) AS xs RETURN a, nm, SIZE(xs)");
    for (int round = 0; round < 60; ++round) {
        auto unit = support::random_unit(rng);
        auto g = support::merged_graph(unit);
        std::set<std::pair<std::string, std::string>> keys;
        for (auto id : g.find_nodes(schema::kCallGraphLabel)) {
            const auto* arg = g.node(id).property("Argument1");
            keys.emplace(arg ? "\"" + arg->as_text() + "\"" : "null", "\"" + g.node(id).property("Name")->as_text() + "\"");
        }
        auto result = execute_query(ast, g);
        EXPECT_EQ(result.rows.size(), keys.size());
        std::size_t total = 0;
        for (const auto& row : result.rows) total += std::stoul(row.at(2));
        EXPECT_EQ(total, g.find_nodes(schema::kCallGraphLabel).size());
    }
}

TEST(Execute, Deterministic) {
    auto g = program(support::read_text(kFixtures + "two_functions.c"));
    const auto ast = parse_query("MATCH p=(a:CallGraph)-[*]->(b:CallGraph) RETURN p, b.Name");
    auto first = execute_query(ast, g);
    EXPECT_EQ(format_result_table(first), format_result_table(execute_query(ast, g)));
    EXPECT_TRUE(std::is_sorted(first.rows.begin(), first.rows.end()));
}

TEST(FormatResultTable, Layout) {
    ResultTable empty{{"path"}, {}};
    EXPECT_EQ(format_result_table(empty), "| path |\n");
    auto g = chain();
    auto scalar = run("RETURN 7.5 AS score, 'a|b' AS s, 3.0 AS r", g);
    EXPECT_EQ(format_result_table(scalar), "| score | s | r |\n| 7.5 | \"a\\|b\" | 3.0 |\n");
}

TEST(RenderValue, Lists) {
    auto g = chain();
    EXPECT_EQ(column(run("MATCH (n:N) RETURN COLLECT(n.k)", g)), std::vector<std::string>{"[1, 2, 3]"});
}
