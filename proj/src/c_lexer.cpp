// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "c_lexer.hpp"

#include <array>
#include <cctype>

#include "pkgraph/errors.hpp"

namespace pkgraph::callgraph::detail {

namespace {

constexpr std::array<std::string_view, 24> kMultiCharPuncts = {
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "::", "##"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool line_start = true;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                advance();
                line_start = true;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                skip_block_comment();
                continue;
            }
            if (c == '#' && line_start) {
                skip_directive();
                continue;
            }
            line_start = false;
            out.push_back(next_token());
        }
        return out;
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_block_comment() {
        std::size_t line = line_, column = column_;
        advance();
        advance();
        while (pos_ < src_.size()) {
            if (src_[pos_] == '*' && peek(1) == '/') {
                advance();
                advance();
                return;
            }
            advance();
        }
        throw ParseError(line, column, "unterminated comment");
    }

    void skip_directive() {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            if (src_[pos_] == '\\' && peek(1) == '\n') advance();
            else if (src_[pos_] == '\\' && peek(1) == '\r' && peek(2) == '\n') {
                advance();
                advance();
            }
            advance();
        }
    }

    Token make(TokenKind kind, std::size_t start, std::size_t line, std::size_t column) const {
        return Token{kind, src_.substr(start, pos_ - start), start, line, column};
    }

    void quoted(char quote, std::size_t line, std::size_t column) {
        advance();  // opening quote
        while (true) {
            if (pos_ >= src_.size() || src_[pos_] == '\n') {
                throw ParseError(line, column, quote == '"' ? "unterminated string literal"
                                                            : "unterminated character literal");
            }
            char c = src_[pos_];
            if (c == '\\') {
                advance();
                if (pos_ < src_.size()) advance();
                continue;
            }
            advance();
            if (c == quote) return;
        }
    }

    Token next_token() {
        const std::size_t start = pos_, line = line_, column = column_;
        char c = src_[pos_];

        if (ident_start(c)) {
            while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
            auto word = src_.substr(start, pos_ - start);
            bool prefix = word == "L" || word == "u" || word == "U" || word == "u8";
            if (prefix && pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'')) {
                char quote = src_[pos_];
                quoted(quote, line, column);
                return make(quote == '"' ? TokenKind::String : TokenKind::Char, start, line, column);
            }
            return make(TokenKind::Identifier, start, line, column);
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if ((d == '+' || d == '-') && pos_ > start) {
                    char prev = src_[pos_ - 1];
                    if (prev != 'e' && prev != 'E' && prev != 'p' && prev != 'P') break;
                } else if (!ident_char(d) && d != '.') {
                    break;
                }
                advance();
            }
            return make(TokenKind::Number, start, line, column);
        }

        if (c == '"' || c == '\'') {
            quoted(c, line, column);
            return make(c == '"' ? TokenKind::String : TokenKind::Char, start, line, column);
        }

        for (auto punct : kMultiCharPuncts) {
            if (src_.substr(pos_).starts_with(punct)) {
                for (std::size_t k = 0; k < punct.size(); ++k) advance();
                return make(TokenKind::Punct, start, line, column);
            }
        }
        advance();
        return make(TokenKind::Punct, start, line, column);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string_view string_body(const Token& token) {
    auto text = token.text;
    auto open = text.find('"');
    if (open == std::string_view::npos || text.size() < open + 2) return {};
    return text.substr(open + 1, text.size() - open - 2);
}

}  // namespace pkgraph::callgraph::detail
