// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/csv.hpp"

#include "pkgraph/errors.hpp"

namespace pkgraph::csv {

std::vector<Record> parse(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Record> records;
    std::size_t line = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();

    while (i < n) {
        // Blank line.
        if (text[i] == '\n' || (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n')) {
            i += text[i] == '\r' ? 2 : 1;
            ++line;
            continue;
        }

        Record record;
        record.line = line;
        bool end_of_record = false;
        while (!end_of_record) {
            Field field;
            if (i < n && text[i] == '"') {
                field.quoted = true;
                std::size_t quote_line = line;
                ++i;
                while (true) {
                    if (i >= n) throw CsvError(quote_line, "unterminated quoted field");
                    char c = text[i++];
                    if (c == '"') {
                        if (i < n && text[i] == '"') {
                            field.text.push_back('"');
                            ++i;
                            continue;
                        }
                        break;
                    }
                    if (c == '\n') ++line;
                    field.text.push_back(c);
                }
                if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    throw CsvError(line, "unexpected character after closing quote");
                }
            } else {
                while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    if (text[i] == '"') throw CsvError(line, "quote inside unquoted field");
                    field.text.push_back(text[i++]);
                }
            }
            record.fields.push_back(std::move(field));

            if (i >= n) {
                end_of_record = true;
            } else if (text[i] == ',') {
                ++i;
            } else {
                if (text[i] == '\r') ++i;
                if (i < n && text[i] == '\n') ++i;
                ++line;
                end_of_record = true;
            }
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::string escape(std::string_view field, bool force_quote) {
    bool needs_quotes = force_quote || field.find_first_of(",\"\r\n") != std::string_view::npos ||
                        (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& escaped_fields) {
    std::string out;
    for (std::size_t k = 0; k < escaped_fields.size(); ++k) {
        if (k > 0) out.push_back(',');
        out += escaped_fields[k];
    }
    out.push_back('\n');
    return out;
}

std::string_view trim(std::string_view text) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    auto last = text.find_last_not_of(ws);
    return text.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view text, char separator) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find(separator, begin);
        if (end == std::string_view::npos) end = text.size();
        auto piece = trim(text.substr(begin, end - begin));
        if (!piece.empty()) out.emplace_back(piece);
        begin = end + 1;
    }
    return out;
}

}  // namespace pkgraph::csv
