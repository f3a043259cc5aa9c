// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include <gtest/gtest.h>

#include <random>
#include <ranges>

#include "oracle.hpp"
#include "pkgraph/c_callgraph.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/schema.hpp"

using namespace pkgraph;
using namespace pkgraph::callgraph;

namespace {

const std::string kFixtures = std::string(PKGRAPH_SOURCE_DIR) + "/tests/fixtures/";

struct Call {
    std::int64_t order;
    std::string name;
    std::vector<std::string> args;
};

std::vector<Call> calls_of(const FunctionDef& f) {
    std::vector<Call> out;
    for (const auto& c : f.call_sites) out.push_back({c.exec_order, c.name, c.arguments});
    return out;
}

bool operator==(const Call& a, const Call& b) {
    return a.order == b.order && a.name == b.name && a.args == b.args;
}

void PrintTo(const Call& c, std::ostream* os) {
    *os << c.name << "@" << c.order << "(";
    for (const auto& a : c.args) *os << "[" << a << "]";
    *os << ")";
}

const FunctionDef& only_function(const TranslationUnit& tu) {
    EXPECT_EQ(tu.functions.size(), 1u);
    return tu.functions.at(0);
}

}  // namespace

TEST(Extract, DoubleFreeMatchesNodeTable) {
    auto tu = extract_translation_unit(support::read_text(kFixtures + "double_free.c"));
    const auto& foo = only_function(tu);
    EXPECT_EQ(foo.name, "foo");
    EXPECT_EQ(foo.exec_order, 1);
    EXPECT_EQ(calls_of(foo), (std::vector<Call>{{2, "printf", {"Please enter your name:\\n"}},
                                               {3, "gets", {"buf"}},
                                               {4, "malloc", {"8"}},
                                               {5, "doSomething", {"ptr"}},
                                               {6, "free", {"ptr"}},
                                               {7, "free", {"ptr"}}}));
    EXPECT_TRUE(foo.pointer_locals.contains("ptr"));
    EXPECT_FALSE(foo.pointer_locals.contains("buf"));
    EXPECT_TRUE(tu.warnings.empty());
}

TEST(Extract, EmptySource) {
    auto tu = extract_translation_unit("");
    EXPECT_TRUE(tu.functions.empty());
    EXPECT_TRUE(tu.defined_names.empty());
}

TEST(Extract, TwoFunctionsTwoFunctions) {
    auto tu = extract_translation_unit(support::read_text(kFixtures + "two_functions.c"));
    ASSERT_EQ(tu.functions.size(), 2u);
    EXPECT_EQ(tu.defined_names, (std::set<std::string>{"main", "printString"}));
    EXPECT_EQ(tu.functions[0].exec_order, 1);
    EXPECT_EQ(calls_of(tu.functions[0]), (std::vector<Call>{{2, "malloc", {"8"}},
                                                           {3, "printString", {"ptr"}},
                                                           {4, "free", {"ptr"}},
                                                           {5, "free", {"ptr"}}}));
    EXPECT_EQ(tu.functions[1].exec_order, 6);
    EXPECT_EQ(calls_of(tu.functions[1]), (std::vector<Call>{{7, "gets", {"ptr"}}, {8, "printf", {"ptr"}}}));
    ASSERT_NE(tu.find("printString"), nullptr);
    EXPECT_TRUE(tu.find("printString")->pointer_locals.contains("ptr"));
    EXPECT_EQ(tu.find("missing"), nullptr);
}

TEST(Extract, NestedCallsAreNumberedFirst) {
    auto tu = extract_translation_unit("void f() { free(get(a, b + 1)); }");
    EXPECT_EQ(calls_of(only_function(tu)),
              (std::vector<Call>{{2, "get", {"a", "b + 1"}}, {3, "free", {"get(a, b + 1)"}}}));
}

TEST(Extract, ArgumentRenderingCollapsesWhitespace) {
    auto tu = extract_translation_unit("void f() { g(x  ->\n   y, \"a\\tb\", 0x1F, 'c', -1); }");
    EXPECT_EQ(calls_of(only_function(tu)),
              (std::vector<Call>{{2, "g", {"x -> y", "a\\tb", "0x1F", "'c'", "-1"}}}));
}

TEST(Extract, CastsAndControlFlow) {
    auto tu = extract_translation_unit(R"(
int f(int n)
{
    if (check(n)) {
        while (more()) step();
    } else
        for (int i = 0; i < limit(); i++) done(i);
    return (int)compute(n);
}
)");
    std::vector<std::string> names;
    for (const auto& c : only_function(tu).call_sites) names.push_back(c.name);
    EXPECT_EQ(names, (std::vector<std::string>{"check", "more", "step", "limit", "done", "compute"}));
}

TEST(Extract, SizeofIsACallSite) {
    auto tu = extract_translation_unit("void f() { char *p; int a[4]; n = sizeof(p) + sizeof a + sizeof(int); }");
    const auto& f = only_function(tu);
    EXPECT_EQ(calls_of(f), (std::vector<Call>{{2, "sizeof", {"p"}}, {3, "sizeof", {"a"}}, {4, "sizeof", {"int"}}}));
    EXPECT_EQ(f.pointer_locals, std::set<std::string>{"p"});
    EXPECT_TRUE(f.locals.contains("a"));
}

TEST(Extract, PointerLocalsFromDeclarators) {
    auto tu = extract_translation_unit(R"(
static const char *name(struct item *it, char buf[], int n)
{
    unsigned long **table = 0, count = 0;
    FILE *f;
    struct item *next, value;
    for (char *c = buf; *c; c++) {}
    return 0;
}
)");
    const auto& f = only_function(tu);
    EXPECT_EQ(f.pointer_locals, (std::set<std::string>{"it", "buf", "table", "f", "next", "c"}));
    EXPECT_TRUE(f.locals.contains("count"));
    EXPECT_TRUE(f.locals.contains("value"));
    EXPECT_FALSE(f.pointer_locals.contains("n"));
}

TEST(Extract, TemplateCallsAndNamespaces) {
    auto tu = extract_translation_unit(R"(
namespace app {
int run()
{
    std::auto_ptr<int> p = std::auto_ptr<int>(new int(3));
    return std::max<int>(1, 2);
}
}
)");
    std::vector<std::string> names;
    for (const auto& c : only_function(tu).call_sites) names.push_back(c.name);
    EXPECT_EQ(names, (std::vector<std::string>{"auto_ptr", "max"}));
}

TEST(Extract, PreprocessorAndCommentsSkipped) {
    auto tu = extract_translation_unit(R"(#include <stdio.h>
#define CALL(x) \
    hidden(x)
/* notcalled(1); */
void f() { // also(2);
    real();
}
)");
    EXPECT_EQ(calls_of(only_function(tu)), (std::vector<Call>{{2, "real", {}}}));
}

TEST(Extract, StructsPrototypesAndUnknownBlocks) {
    auto tu = extract_translation_unit(R"(
struct point { int x, y; };
int helper(int);
static int table[] = { 1, 2, 3 };
__attribute__((weird)) { junk }
int helper(int v) { return v; }
)");
    ASSERT_EQ(tu.functions.size(), 1u);
    EXPECT_EQ(tu.functions[0].name, "helper");
    EXPECT_EQ(tu.warnings.size(), 1u);
}

TEST(Extract, Errors) {
    auto expect_error = [](const char* source, std::size_t line) {
        try {
            extract_translation_unit(source);
            ADD_FAILURE() << "no ParseError for " << source;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), line) << e.what();
        }
    };
    expect_error("void f() {\n  g(;\n}", 2);
    expect_error("void f() {\n g();\n", 1);
    expect_error("void f() { g(); }\n}", 2);
    expect_error("void f() {\n  puts(\"open);\n}", 2);
    expect_error("void f() { }\n/* never closed", 2);
    expect_error("void f() { }\nvoid f() { }", 2);
}

TEST(Extract, Deterministic) {
    const std::string source = support::read_text(kFixtures + "two_functions.c");
    EXPECT_EQ(extract_translation_unit(source), extract_translation_unit(source));
}

TEST(BuildCallGraph, DoubleFreeShape) {
    auto tu = extract_translation_unit(support::read_text(kFixtures + "double_free.c"));
    graph::PropertyGraph g;
    auto entries = build_call_graph(tu, g);
    EXPECT_EQ(g.node_count(), 7u);
    EXPECT_EQ(g.edge_count(), 6u);
    const auto foo = entries.at("foo");
    for (const auto& e : g.edges()) {
        EXPECT_EQ(e.source, foo);
        EXPECT_EQ(e.type, schema::kCalls);
    }
    EXPECT_EQ(g.node(foo).properties.size(), 2u);
    const auto& printf_node = g.node(g.edge(g.out_edges(foo).at(0)).target);
    EXPECT_EQ(printf_node.property("Argument1")->as_text(), "Please enter your name:\\n");
}

TEST(BuildCallGraph, TwoFunctionsInterproceduralEdge) {
    auto tu = extract_translation_unit(support::read_text(kFixtures + "two_functions.c"));
    graph::PropertyGraph g;
    auto entries = build_call_graph(tu, g);
    g.seal();
    EXPECT_EQ(g.node_count(), 8u);
    EXPECT_EQ(g.edge_count(), 7u);
    auto gets = g.find_nodes(schema::kCallGraphLabel, {{schema::kName, "gets"}}).at(0);
    auto paths = g.enumerate_paths(entries.at("main"), {gets}, std::string(schema::kCalls));
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_EQ(paths[0].length(), 3u);
}

TEST(BuildCallGraph, EmptyFunctionAndZeroArgumentCalls) {
    graph::PropertyGraph g;
    build_call_graph(extract_translation_unit("void f() {}"), g);
    EXPECT_EQ(g.node_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);

    graph::PropertyGraph h;
    build_call_graph(extract_translation_unit("void f() { g(); h(1, 2); }"), h);
    EXPECT_EQ(h.nodes()[1].properties.size(), 2u);
    EXPECT_EQ(h.nodes()[2].property(argument_key(2))->as_text(), "2");
}

TEST(BuildCallGraph, ExecOrderInvariantOnRandomUnits) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        auto tu = support::random_unit(rng);
        graph::PropertyGraph g;
        build_call_graph(tu, g);
        std::size_t expected = 0;
        for (const auto& f : tu.functions) expected += 1 + f.call_sites.size();
        EXPECT_EQ(g.node_count(), expected);
        std::set<std::int64_t> orders;
        for (const auto& n : g.nodes()) orders.insert(n.property(schema::kExecOrder)->as_integer());
        EXPECT_EQ(orders.size(), expected);
        EXPECT_EQ(*orders.rbegin(), static_cast<std::int64_t>(expected));
    }
}

TEST(AnalyzeRoles, RecoversEntriesAndEnclosingFunctions) {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 50; ++round) {
        auto tu = support::random_unit(rng);
        graph::PropertyGraph g;
        auto entries = build_call_graph(tu, g);
        g.seal();
        auto roles = analyze_roles(g);
        std::set<graph::NodeId> expected(std::views::values(entries).begin(), std::views::values(entries).end());
        EXPECT_EQ(roles.entries, expected);
        EXPECT_EQ(roles.enclosing_entry.size(), g.node_count() - expected.size());
        for (const auto& [site, entry] : roles.enclosing_entry) {
            EXPECT_TRUE(expected.contains(entry));
            EXPECT_LT(g.node(entry).property(schema::kExecOrder)->as_integer(),
                      g.node(site).property(schema::kExecOrder)->as_integer());
        }
    }
}

TEST(AnalyzeRoles, IgnoresNonCallGraphNodes) {
    graph::PropertyGraph g;
    auto cwe = g.add_node(schema::kCweLabel);
    build_call_graph(extract_translation_unit("void f() { free(p); }"), g);
    g.seal();
    auto roles = analyze_roles(g);
    EXPECT_FALSE(roles.is_entry(cwe));
    EXPECT_EQ(roles.entries.size(), 1u);
    EXPECT_EQ(roles.enclosing_entry.size(), 1u);
}
