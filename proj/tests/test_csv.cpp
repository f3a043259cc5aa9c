// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include <gtest/gtest.h>

#include "pkgraph/csv.hpp"
#include "pkgraph/errors.hpp"

using namespace pkgraph;

TEST(CsvParse, QuotedFieldsAndEscapes) {
    auto records = csv::parse("a,\"b,c\",\"say \"\"hi\"\"\"\n");
    ASSERT_EQ(records.size(), 1u);
    const auto& f = records[0].fields;
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].text, "a");
    EXPECT_EQ(f[1].text, "b,c");
    EXPECT_EQ(f[2].text, "say \"hi\"");
    EXPECT_TRUE(f[2].quoted);
}

TEST(CsvParse, DistinguishesQuotedAndUnquotedEmpty) {
    auto records = csv::parse("x,,\"\"\n");
    ASSERT_EQ(records[0].fields.size(), 3u);
    EXPECT_FALSE(records[0].fields[1].quoted);
    EXPECT_TRUE(records[0].fields[2].quoted);
    EXPECT_EQ(records[0].fields[2].text, "");
}

TEST(CsvParse, LineNumbersSkipBlankLinesAndCountEmbeddedNewlines) {
    auto records = csv::parse("\xEF\xBB\xBFh1,h2\r\n\r\n\"multi\nline\",2\nlast,3");
    ASSERT_EQ(records.size(), 3u);
    EXPECT_EQ(records[0].fields[0].text, "h1");
    EXPECT_EQ(records[1].line, 3u);
    EXPECT_EQ(records[1].fields[0].text, "multi\nline");
    EXPECT_EQ(records[2].line, 5u);
    EXPECT_EQ(records[2].fields[1].text, "3");
}

TEST(CsvParse, MalformedQuotesThrowWithLine) {
    try {
        csv::parse("ok\n\"open,field\n");
        FAIL() << "expected CsvError";
    } catch (const CsvError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(csv::parse("\"a\"b,c\n"), CsvError);
    EXPECT_THROW(csv::parse("a\"b,c\n"), CsvError);
}

TEST(CsvEscape, QuotesOnlyWhenNeeded) {
    EXPECT_EQ(csv::escape("plain"), "plain");
    EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv::escape("q\"q"), "\"q\"\"q\"");
    EXPECT_EQ(csv::escape(" pad"), "\" pad\"");
    EXPECT_EQ(csv::escape("", true), "\"\"");
    EXPECT_EQ(csv::join({"a", "\"b,c\""}), "a,\"b,c\"\n");
}

TEST(CsvEscape, RoundTripsThroughParse) {
    const std::vector<std::string> fields = {"x", "comma,inside", "quote\"inside", "new\nline", " lead", ""};
    std::vector<std::string> escaped;
    for (const auto& f : fields) escaped.push_back(csv::escape(f, f.empty()));
    auto records = csv::parse(csv::join(escaped));
    ASSERT_EQ(records.size(), 1u);
    ASSERT_EQ(records[0].fields.size(), fields.size());
    for (std::size_t k = 0; k < fields.size(); ++k) EXPECT_EQ(records[0].fields[k].text, fields[k]);
}

TEST(CsvSplitList, TrimsAndDropsEmpty) {
    EXPECT_EQ(csv::split_list("gets; atoi ;;atol"), (std::vector<std::string>{"gets", "atoi", "atol"}));
    EXPECT_TRUE(csv::split_list("").empty());
    EXPECT_EQ(csv::trim("  x \t"), "x");
}
