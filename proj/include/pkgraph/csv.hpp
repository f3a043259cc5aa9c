// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Minimal CSV dialect: comma separated, double-quote quoting with "" as the
// escaped quote, LF or CRLF line ends, optional UTF-8 BOM. Blank lines are
// skipped. Quoted and unquoted empty fields are distinguished so that "" can
// mean "empty string" and an empty field can mean "absent".

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pkgraph::csv {

struct Field {
    std::string text;
    bool quoted = false;
};

struct Record {
    std::size_t line = 0;  // 1-based line on which the record starts
    std::vector<Field> fields;
};

/// Throws CsvError on an unterminated quote or text after a closing quote.
std::vector<Record> parse(std::string_view text);

/// Quotes when the field holds a comma, quote, CR/LF, or leading/trailing space,
/// or when `force_quote` is set.
std::string escape(std::string_view field, bool force_quote = false);

/// Joins already-escaped fields with commas and appends '\n'.
std::string join(const std::vector<std::string>& escaped_fields);

/// Splits on `separator`, trims ASCII whitespace, drops empty pieces.
std::vector<std::string> split_list(std::string_view text, char separator = ';');

std::string_view trim(std::string_view text);

}  // namespace pkgraph::csv
