// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/query/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lexicon.hpp"
#include "pkgraph/errors.hpp"

namespace pkgraph::query {

namespace {

enum class Tok { Ident, QuotedIdent, String, Integer, Float, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;  // identifier/punct spelling, or decoded string body
    std::size_t line = 1;
    std::size_t column = 1;
};

std::string upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::String: return "string literal";
        case Tok::QuotedIdent: return "`" + t.text + "`";
        default: return "'" + t.text + "'";
    }
}

const char* const kReserved[] = {"MATCH", "OPTIONAL", "WITH",  "WHERE", "UNWIND", "RETURN",
                                 "AS",    "AND",      "OR",    "NOT",   "TRUE",   "FALSE",
                                 "NULL",  "CREATE",   "SET",   "DELETE", "MERGE", "FOREACH",
                                 "ON",    "DETACH",   "REMOVE"};

bool is_reserved(std::string_view word) { return detail::is_reserved_word(word); }

class Lexer {
public:
    explicit Lexer(std::string_view text) : src_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    advance();
                }
                t.kind = Tok::Ident;
                t.text = std::string(src_.substr(start, pos_ - start));
            } else if (c == '`') {
                advance();
                t.kind = Tok::QuotedIdent;
                while (true) {
                    if (pos_ >= src_.size()) throw SyntaxError(t.line, t.column, "unterminated `identifier`");
                    if (src_[pos_] == '`') {
                        advance();
                        if (pos_ < src_.size() && src_[pos_] == '`') {
                            t.text.push_back('`');
                            advance();
                            continue;
                        }
                        break;
                    }
                    t.text.push_back(src_[pos_]);
                    advance();
                }
            } else if (c == '"' || c == '\'') {
                t.kind = Tok::String;
                t.text = string_literal(c, t);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
                t.kind = Tok::Integer;
                if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
                    std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                    advance();
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
                    t.kind = Tok::Float;
                }
                if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                    std::size_t save = pos_;
                    std::size_t save_col = column_;
                    advance();
                    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
                    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
                        t.kind = Tok::Float;
                    } else {
                        pos_ = save;
                        column_ = save_col;
                    }
                }
                t.text = std::string(src_.substr(start, pos_ - start));
            } else {
                t.kind = Tok::Punct;
                static const char* const multi[] = {"->", "<-", "<>", "<=", ">=", ".."};
                for (const char* m : multi) {
                    if (src_.substr(pos_).starts_with(m)) t.text = m;
                }
                if (t.text.empty()) t.text = std::string(1, c);
                if (std::string_view("()[]{}:,.=<>-*;+/").find(t.text[0]) == std::string_view::npos) {
                    throw SyntaxError(t.line, t.column, "unexpected character '" + t.text + "'");
                }
                for (std::size_t k = 0; k < t.text.size(); ++k) advance();
            }
            out.push_back(std::move(t));
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (src_.substr(pos_).starts_with("//")) {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (src_.substr(pos_).starts_with("/*")) {
                std::size_t line = line_, column = column_;
                advance();
                advance();
                while (pos_ < src_.size() && !src_.substr(pos_).starts_with("*/")) advance();
                if (pos_ >= src_.size()) throw SyntaxError(line, column, "unterminated comment");
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    std::string string_literal(char quote, const Token& t) {
        advance();
        std::string out;
        while (true) {
            if (pos_ >= src_.size()) throw SyntaxError(t.line, t.column, "unterminated string literal");
            char c = src_[pos_];
            advance();
            if (c == quote) return out;
            if (c != '\\') {
                out.push_back(c);
                continue;
            }
            if (pos_ >= src_.size()) throw SyntaxError(t.line, t.column, "unterminated string literal");
            char e = src_[pos_];
            advance();
            switch (e) {
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                case 'r': out.push_back('\r'); break;
                case '\\': out.push_back('\\'); break;
                case '"': out.push_back('"'); break;
                case '\'': out.push_back('\''); break;
                default:
                    throw SyntaxError(line_, column_ - 2, std::string("unknown escape \\") + e);
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    QueryAst run() {
        QueryAst ast;
        if (peek().kind == Tok::End) fail("a clause");
        bool returned = false;
        while (peek().kind != Tok::End) {
            if (peek_punct(";")) {
                next();
                if (peek().kind != Tok::End) fail("end of input");
                break;
            }
            if (returned) fail("end of input after RETURN");
            ast.clauses.push_back(clause());
            returned = std::holds_alternative<ReturnClause>(ast.clauses.back());
        }
        if (!returned) fail("RETURN");
        return ast;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw SyntaxError(t.line, t.column, "expected " + expected + ", found " + describe(t));
    }

    bool peek_keyword(std::string_view keyword, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::Ident && upper(t.text) == keyword;
    }
    bool peek_punct(std::string_view punct) const {
        return peek().kind == Tok::Punct && peek().text == punct;
    }
    void expect_keyword(std::string_view keyword) {
        if (!peek_keyword(keyword)) fail(std::string(keyword));
        next();
    }
    void expect_punct(std::string_view punct) {
        if (!peek_punct(punct)) fail("'" + std::string(punct) + "'");
        next();
    }
    bool accept_punct(std::string_view punct) {
        if (!peek_punct(punct)) return false;
        next();
        return true;
    }

    bool peek_name() const {
        const Token& t = peek();
        return t.kind == Tok::QuotedIdent || (t.kind == Tok::Ident && !is_reserved(t.text));
    }
    std::string name(const std::string& what) {
        if (!peek_name()) fail(what);
        return next().text;
    }
    // Property keys and labels may also be reserved words.
    std::string key(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident && t.kind != Tok::QuotedIdent) fail(what);
        return next().text;
    }

    Clause clause() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            auto word = upper(t.text);
            if (word == "MATCH") {
                next();
                return match(false);
            }
            if (word == "OPTIONAL") {
                next();
                expect_keyword("MATCH");
                return match(true);
            }
            if (word == "WITH") {
                next();
                WithClause with{projection_items(true)};
                return with;
            }
            if (word == "WHERE") {
                next();
                return WhereClause{expression()};
            }
            if (word == "UNWIND") {
                next();
                UnwindClause unwind;
                unwind.list = expression();
                expect_keyword("AS");
                unwind.alias = name("alias");
                return unwind;
            }
            if (word == "RETURN") {
                next();
                return ReturnClause{projection_items(false)};
            }
            if (word == "CREATE" || word == "SET" || word == "DELETE" || word == "MERGE" ||
                word == "FOREACH" || word == "REMOVE" || word == "DETACH") {
                throw SyntaxError(t.line, t.column, "write clause " + word + " is not supported");
            }
        }
        fail("MATCH, OPTIONAL MATCH, WITH, WHERE, UNWIND or RETURN");
    }

    MatchClause match(bool optional) {
        MatchClause clause;
        clause.optional = optional;
        do {
            clause.patterns.push_back(pattern_part());
        } while (accept_punct(","));
        return clause;
    }

    PatternPart pattern_part() {
        PatternPart part;
        if (peek_name() && peek(1).kind == Tok::Punct && peek(1).text == "=") {
            part.path_variable = next().text;
            next();
        }
        part.start = node_pattern();
        while (peek_punct("-") || peek_punct("<-")) {
            RelPattern rel = rel_pattern();
            part.chain.emplace_back(std::move(rel), node_pattern());
        }
        return part;
    }

    NodePattern node_pattern() {
        NodePattern node;
        expect_punct("(");
        if (peek_name()) node.variable = next().text;
        if (accept_punct(":")) node.label = key("label");
        if (peek_punct("{")) node.properties = property_map();
        expect_punct(")");
        return node;
    }

    std::vector<std::pair<std::string, ExprPtr>> property_map() {
        std::vector<std::pair<std::string, ExprPtr>> props;
        expect_punct("{");
        if (!peek_punct("}")) {
            do {
                std::string k = key("property key");
                expect_punct(":");
                props.emplace_back(std::move(k), expression());
            } while (accept_punct(","));
        }
        expect_punct("}");
        return props;
    }

    std::size_t hop_count() {
        const Token& t = peek();
        if (t.kind != Tok::Integer) fail("hop count");
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{}) throw SyntaxError(t.line, t.column, "hop count out of range");
        next();
        return value;
    }

    RelPattern rel_pattern() {
        const Token start = peek();
        if (start.text == "<-") {
            throw SyntaxError(start.line, start.column, "only left-to-right relationships (-->) are supported");
        }
        next();  // '-'
        RelPattern rel;
        if (accept_punct("[")) {
            if (peek_name()) rel.variable = next().text;
            if (accept_punct(":")) rel.type = key("relationship type");
            if (accept_punct("*")) {
                rel.variable_length = true;
                if (peek().kind == Tok::Integer) {
                    rel.min_hops = hop_count();
                    if (!peek_punct("..")) rel.max_hops = rel.min_hops;
                }
                if (accept_punct("..")) {
                    if (peek().kind == Tok::Integer) rel.max_hops = hop_count();
                }
                if (rel.max_hops && *rel.max_hops < rel.min_hops) {
                    throw SyntaxError(start.line, start.column, "empty hop range");
                }
            }
            expect_punct("]");
        }
        if (!accept_punct("->")) {
            const Token& t = peek();
            if (t.kind == Tok::Punct && t.text == "-") {
                throw SyntaxError(t.line, t.column, "undirected relationships are not supported");
            }
            fail("'->'");
        }
        return rel;
    }

    std::vector<ProjectionItem> projection_items(bool require_alias) {
        std::vector<ProjectionItem> items;
        do {
            const Token start = peek();
            ProjectionItem item;
            item.expr = expression();
            if (peek_keyword("AS")) {
                next();
                item.alias = name("alias");
            } else if (require_alias && !std::holds_alternative<Variable>(item.expr->node)) {
                throw SyntaxError(start.line, start.column, "expression in WITH must be aliased with AS");
            }
            items.push_back(std::move(item));
        } while (accept_punct(","));
        return items;
    }

    ExprPtr make(const Token& at, decltype(Expr::node) node) {
        auto e = std::make_shared<Expr>();
        e->node = std::move(node);
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    ExprPtr expression() { return or_expr(); }

    ExprPtr or_expr() {
        ExprPtr lhs = and_expr();
        while (peek_keyword("OR")) {
            Token op = next();
            lhs = make(op, Binary{BinaryOp::Or, lhs, and_expr()});
        }
        return lhs;
    }

    ExprPtr and_expr() {
        ExprPtr lhs = not_expr();
        while (peek_keyword("AND")) {
            Token op = next();
            lhs = make(op, Binary{BinaryOp::And, lhs, not_expr()});
        }
        return lhs;
    }

    ExprPtr not_expr() {
        if (peek_keyword("NOT")) {
            Token op = next();
            return make(op, Not{not_expr()});
        }
        return comparison();
    }

    ExprPtr comparison() {
        ExprPtr lhs = postfix();
        static const std::pair<const char*, BinaryOp> ops[] = {
            {"=", BinaryOp::Eq}, {"<>", BinaryOp::Ne}, {"<", BinaryOp::Lt},
            {"<=", BinaryOp::Le}, {">", BinaryOp::Gt}, {">=", BinaryOp::Ge}};
        for (auto [spelling, op] : ops) {
            if (peek_punct(spelling)) {
                Token at = next();
                return make(at, Binary{op, lhs, postfix()});
            }
        }
        return lhs;
    }

    ExprPtr postfix() {
        ExprPtr base = atom();
        while (peek_punct(".")) {
            Token dot = next();
            base = make(dot, PropertyAccess{base, key("property key")});
        }
        return base;
    }

    ExprPtr atom() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::String:
                next();
                return make(t, Literal{t.text});
            case Tok::Integer: {
                next();
                return make(t, Literal{integer(t, t.text)});
            }
            case Tok::Float:
                next();
                return make(t, Literal{real(t, t.text)});
            case Tok::Punct:
                if (t.text == "(") {
                    next();
                    ExprPtr inner = expression();
                    expect_punct(")");
                    return inner;
                }
                if (t.text == "-" && (peek(1).kind == Tok::Integer || peek(1).kind == Tok::Float)) {
                    next();
                    Token number = next();
                    if (number.kind == Tok::Integer) return make(t, Literal{integer(t, "-" + number.text)});
                    return make(t, Literal{-real(t, number.text)});
                }
                break;
            case Tok::Ident: {
                auto word = upper(t.text);
                if (word == "TRUE" || word == "FALSE") {
                    next();
                    return make(t, Literal{word == "TRUE"});
                }
                if (word == "NULL") {
                    next();
                    return make(t, Literal{NullLiteral{}});
                }
                if (peek(1).kind == Tok::Punct && peek(1).text == "(") return call();
                if (is_reserved(t.text)) break;
                next();
                return make(t, Variable{t.text});
            }
            case Tok::QuotedIdent:
                next();
                return make(t, Variable{t.text});
            case Tok::End: break;
        }
        fail("an expression");
    }

    ExprPtr call() {
        const Token name_token = next();
        auto word = upper(name_token.text);
        FunctionCall fn;
        if (word == "COLLECT") fn.function = Function::Collect;
        else if (word == "COUNT") fn.function = Function::Count;
        else if (word == "SIZE") fn.function = Function::Size;
        else throw SyntaxError(name_token.line, name_token.column, "unknown function " + name_token.text);
        expect_punct("(");
        if (fn.function == Function::Count && accept_punct("*")) {
            fn.star = true;
        } else {
            fn.args.push_back(expression());
        }
        expect_punct(")");
        return make(name_token, std::move(fn));
    }

    static std::int64_t integer(const Token& at, const std::string& text) {
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{}) throw SyntaxError(at.line, at.column, "integer literal out of range");
        return value;
    }

    static double real(const Token& at, const std::string& text) {
        double value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{}) throw SyntaxError(at.line, at.column, "malformed float literal");
        return value;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

namespace detail {

bool is_reserved_word(std::string_view word) {
    auto up = upper(word);
    return std::any_of(std::begin(kReserved), std::end(kReserved),
                       [&](const char* k) { return up == k; });
}

}  // namespace detail

QueryAst parse_query(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace pkgraph::query
