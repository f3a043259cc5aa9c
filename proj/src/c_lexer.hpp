// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace pkgraph::callgraph::detail {

enum class TokenKind { Identifier, Number, String, Char, Punct };

struct Token {
    TokenKind kind = TokenKind::Punct;
    std::string_view text;  // raw spelling, quotes and prefixes included
    std::size_t offset = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool is(std::string_view punct) const { return kind == TokenKind::Punct && text == punct; }
    bool is_identifier() const { return kind == TokenKind::Identifier; }
    std::size_t end_offset() const { return offset + text.size(); }
};

/// Comments and preprocessor lines are dropped. Throws ParseError on an
/// unterminated string, character literal or block comment.
std::vector<Token> tokenize(std::string_view source);

/// Body of a string literal token without prefix and quotes.
std::string_view string_body(const Token& token);

}  // namespace pkgraph::callgraph::detail
