// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/c_callgraph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <unordered_set>

#include "c_lexer.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/schema.hpp"

namespace pkgraph::callgraph {

using detail::Token;
using detail::TokenKind;

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Words that are never call names. `sizeof` is handled separately.
const std::unordered_set<std::string_view>& keywords() {
    static const std::unordered_set<std::string_view> words = {
        "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
        "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long", "register",
        "restrict", "return", "short", "signed", "static", "struct", "switch", "typedef", "union",
        "unsigned", "void", "volatile", "while", "_Bool", "_Complex", "_Alignas", "_Alignof",
        "_Atomic", "_Generic", "_Noreturn", "_Static_assert", "_Thread_local", "alignas",
        "alignof", "bool", "catch", "class", "const_cast", "constexpr", "decltype", "delete",
        "dynamic_cast", "explicit", "false", "friend", "mutable", "namespace", "new", "noexcept",
        "nullptr", "operator", "private", "protected", "public", "reinterpret_cast",
        "static_assert", "static_cast", "template", "this", "throw", "true", "try", "typeid",
        "typename", "using", "virtual", "wchar_t", "__attribute__", "__declspec", "__asm__",
        "asm", "defined"};
    return words;
}

bool is_keyword(std::string_view word) { return keywords().contains(word); }

const std::unordered_set<std::string_view>& type_words() {
    static const std::unordered_set<std::string_view> words = {
        "void", "char", "short", "int", "long", "float", "double", "signed", "unsigned",
        "_Bool", "bool", "wchar_t", "auto", "_Complex"};
    return words;
}

const std::unordered_set<std::string_view>& qualifier_words() {
    static const std::unordered_set<std::string_view> words = {
        "const", "volatile", "static", "register", "extern", "inline", "restrict", "_Atomic",
        "constexpr", "_Thread_local", "mutable"};
    return words;
}

bool is_tag_word(std::string_view word) {
    return word == "struct" || word == "union" || word == "enum" || word == "class";
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    bool in_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

class Extractor {
public:
    explicit Extractor(std::string_view source) : src_(source), toks_(detail::tokenize(source)) {}

    TranslationUnit run() {
        match_brackets();
        top_level();
        return std::move(unit_);
    }

private:
    const Token& at(std::size_t i) const { return toks_[i]; }

    void match_brackets() {
        match_.assign(toks_.size(), kNone);
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.is("(") || t.is("[") || t.is("{")) {
                open.push_back(i);
            } else if (t.is(")") || t.is("]") || t.is("}")) {
                char want = t.text[0] == ')' ? '(' : t.text[0] == ']' ? '[' : '{';
                if (open.empty()) {
                    throw ParseError(t.line, t.column, "unbalanced '" + std::string(t.text) + "'");
                }
                if (const Token& o = toks_[open.back()]; o.text[0] != want) {
                    throw ParseError(o.line, o.column,
                                     "unclosed '" + std::string(o.text) + "' (found '" + std::string(t.text) +
                                         "' at " + std::to_string(t.line) + ":" + std::to_string(t.column) + ")");
                }
                match_[open.back()] = i;
                match_[i] = open.back();
                open.pop_back();
            }
        }
        if (!open.empty()) {
            const Token& t = toks_[open.back()];
            throw ParseError(t.line, t.column, "unclosed '" + std::string(t.text) + "'");
        }
    }

    void warn(const Token& t, std::string message) {
        unit_.warnings.push_back(Diagnostic{t.line, t.column, std::move(message)});
    }

    void top_level() {
        const std::size_t n = toks_.size();
        std::size_t item_start = 0;
        std::size_t i = 0;
        while (i < n) {
            const Token& t = toks_[i];
            if (t.is(";") || t.is("}")) {
                item_start = ++i;
                continue;
            }
            if (t.is("(") || t.is("[")) {
                i = match_[i] + 1;
                continue;
            }
            if (t.is("{")) {
                if (std::size_t name = function_name_index(item_start, i); name != kNone) {
                    define_function(name, i);
                    item_start = i = match_[i] + 1;
                    continue;
                }
                if (opens_scope(item_start, i)) {
                    item_start = ++i;
                    continue;
                }
                if (!is_aggregate_or_initializer(item_start, i)) {
                    warn(t, "skipping unrecognized top-level block");
                }
                i = match_[i] + 1;
                continue;
            }
            ++i;
        }
        if (item_start < n) warn(toks_[item_start], "unterminated top-level declaration skipped");
    }

    // Index of the function-name token when the '{' at `brace` opens a
    // function body, otherwise kNone.
    std::size_t function_name_index(std::size_t item_start, std::size_t brace) const {
        std::size_t k = brace;
        while (k > item_start && toks_[k - 1].is_identifier() &&
               (toks_[k - 1].text == "const" || toks_[k - 1].text == "noexcept" ||
                toks_[k - 1].text == "override" || toks_[k - 1].text == "final")) {
            --k;
        }
        if (k == item_start || !toks_[k - 1].is(")")) return kNone;
        std::size_t open = match_[k - 1];
        if (open == 0 || open <= item_start) return kNone;
        const Token& name = toks_[open - 1];
        if (!name.is_identifier() || is_keyword(name.text) || name.text == "sizeof") return kNone;
        return open - 1;
    }

    bool opens_scope(std::size_t item_start, std::size_t brace) const {
        if (item_start >= brace) return false;
        const Token& first = toks_[item_start];
        if (first.is_identifier() && first.text == "namespace") return true;
        return first.is_identifier() && first.text == "extern" && brace == item_start + 2 &&
               toks_[item_start + 1].kind == TokenKind::String;
    }

    bool is_aggregate_or_initializer(std::size_t item_start, std::size_t brace) const {
        for (std::size_t k = item_start; k < brace; ++k) {
            const Token& t = toks_[k];
            if (t.is("=") || (t.is_identifier() && is_tag_word(t.text))) return true;
        }
        return false;
    }

    void define_function(std::size_t name_index, std::size_t body_open) {
        const Token& name = toks_[name_index];
        if (!unit_.defined_names.insert(std::string(name.text)).second) {
            throw ParseError(name.line, name.column,
                             "redefinition of function '" + std::string(name.text) + "'");
        }
        FunctionDef fn;
        fn.name = std::string(name.text);
        fn.exec_order = ++counter_;
        fn.line = name.line;
        fn.column = name.column;

        const std::size_t params_open = name_index + 1;
        for (auto [b, e] : split_commas(params_open + 1, match_[params_open])) {
            declarator(b, e, fn, /*parameter=*/true);
        }
        const std::size_t body_close = match_[body_open];
        scan_declarations(body_open + 1, body_close, fn);
        scan_calls(body_open + 1, body_close, fn);
        unit_.functions.push_back(std::move(fn));
    }

    // Ranges separated by commas at bracket depth zero within [b, e).
    std::vector<std::pair<std::size_t, std::size_t>> split_commas(std::size_t b, std::size_t e) const {
        std::vector<std::pair<std::size_t, std::size_t>> parts;
        if (b >= e) return parts;
        std::size_t start = b;
        for (std::size_t k = b; k < e; ++k) {
            const Token& t = toks_[k];
            if (t.is("(") || t.is("[") || t.is("{")) {
                k = match_[k];
            } else if (t.is(",")) {
                parts.emplace_back(start, k);
                start = k + 1;
            }
        }
        parts.emplace_back(start, e);
        return parts;
    }

    // Position of the '(' following a template argument list opened at `lt`,
    // or kNone when the '<' is not a template-call opener.
    std::size_t template_call_paren(std::size_t lt, std::size_t e) const {
        int depth = 1;
        for (std::size_t k = lt + 1; k < e; ++k) {
            const Token& t = toks_[k];
            if (t.is("<")) {
                ++depth;
            } else if (t.is(">")) {
                --depth;
            } else if (t.is(">>")) {
                depth -= 2;
            } else if (t.is(";") || t.is("{") || t.is("}") || t.is("(") || t.is(")") ||
                       t.is("&&") || t.is("||") || t.is("=")) {
                return kNone;
            }
            if (depth < 0) return kNone;
            if (depth == 0) return k + 1 < e && toks_[k + 1].is("(") ? k + 1 : kNone;
        }
        return kNone;
    }

    void scan_calls(std::size_t b, std::size_t e, FunctionDef& fn) {
        std::size_t i = b;
        while (i < e) {
            const Token& t = toks_[i];
            if (!t.is_identifier()) {
                ++i;
                continue;
            }
            if (t.text == "sizeof") {
                if (i + 1 < e && toks_[i + 1].is("(")) {
                    i = record_call(i, i + 1, fn);
                } else if (i + 1 < e && toks_[i + 1].is_identifier()) {
                    CallSite site{++counter_, "sizeof", {std::string(toks_[i + 1].text)}, t.line, t.column};
                    fn.call_sites.push_back(std::move(site));
                    i += 2;
                } else {
                    ++i;
                }
                continue;
            }
            if (!is_keyword(t.text) && i + 1 < e) {
                std::size_t paren = kNone;
                if (toks_[i + 1].is("(")) paren = i + 1;
                else if (toks_[i + 1].is("<")) paren = template_call_paren(i + 1, e);
                if (paren != kNone) {
                    i = record_call(i, paren, fn);
                    continue;
                }
            }
            ++i;
        }
    }

    // Records the call whose name is at `name` and whose argument list opens
    // at `paren`; returns the index after the closing ')'.
    std::size_t record_call(std::size_t name, std::size_t paren, FunctionDef& fn) {
        const std::size_t close = match_[paren];
        CallSite site;
        site.name = std::string(toks_[name].text);
        site.line = toks_[name].line;
        site.column = toks_[name].column;
        for (auto [b, e] : split_commas(paren + 1, close)) {
            scan_calls(b, e, fn);
            site.arguments.push_back(render_argument(b, e));
        }
        site.exec_order = ++counter_;
        fn.call_sites.push_back(std::move(site));
        return close + 1;
    }

    std::string render_argument(std::size_t b, std::size_t e) const {
        if (b >= e) return {};
        if (e - b == 1) {
            const Token& t = toks_[b];
            switch (t.kind) {
                case TokenKind::String: return std::string(detail::string_body(t));
                case TokenKind::Number:
                case TokenKind::Identifier: return std::string(t.text);
                default: break;
            }
        }
        const std::size_t from = toks_[b].offset;
        const std::size_t to = toks_[e - 1].end_offset();
        return collapse_whitespace(src_.substr(from, to - from));
    }

    void scan_declarations(std::size_t b, std::size_t e, FunctionDef& fn) {
        std::size_t start = b;
        for (std::size_t k = b; k <= e; ++k) {
            bool boundary = k == e || toks_[k].is(";") || toks_[k].is("{") || toks_[k].is("}") ||
                            (toks_[k].is("(") && k > b && toks_[k - 1].is_identifier() &&
                             toks_[k - 1].text == "for");
            if (!boundary) continue;
            if (start < k) declaration(start, k, fn);
            start = k + 1;
        }
    }

    // Skips a balanced <...> starting at `k`; returns the index after it.
    std::size_t skip_angles(std::size_t k, std::size_t e) const {
        int depth = 0;
        for (; k < e; ++k) {
            if (toks_[k].is("<")) ++depth;
            else if (toks_[k].is(">")) --depth;
            else if (toks_[k].is(">>")) depth -= 2;
            if (depth <= 0) return k + 1;
        }
        return e;
    }

    // Length of the type-specifier prefix of a declaration in [b, e), or kNone.
    std::size_t type_prefix_end(std::size_t b, std::size_t e) const {
        std::size_t k = b;
        bool saw_type = false;
        while (k < e && toks_[k].is_identifier()) {
            auto word = toks_[k].text;
            if (qualifier_words().contains(word)) {
                ++k;
            } else if (is_tag_word(word)) {
                k += 2;
                saw_type = true;
            } else if (type_words().contains(word)) {
                ++k;
                saw_type = true;
            } else if (!saw_type && !is_keyword(word) && word != "sizeof") {
                ++k;
                while (k + 1 < e && toks_[k].is("::") && toks_[k + 1].is_identifier()) k += 2;
                if (k < e && toks_[k].is("<")) k = skip_angles(k, e);
                saw_type = true;
            } else {
                break;
            }
        }
        return saw_type ? std::min(k, e) : kNone;
    }

    void declaration(std::size_t b, std::size_t e, FunctionDef& fn) {
        if (toks_[b].is_identifier() && toks_[b].text == "typedef") return;
        std::size_t k = type_prefix_end(b, e);
        if (k == kNone || k >= e) return;
        if (!(toks_[k].is("*") || toks_[k].is("&") || toks_[k].is_identifier() ||
              (toks_[k].is("(") && k + 1 < e && toks_[k + 1].is("*")))) {
            return;
        }
        for (auto [db, de] : split_commas(k, e)) declarator(db, de, fn, /*parameter=*/false);
    }

    // Parses one declarator. Parameters go through the full type prefix here;
    // locals arrive with the prefix already consumed.
    void declarator(std::size_t b, std::size_t e, FunctionDef& fn, bool parameter) {
        std::size_t k = b;
        if (parameter) {
            k = type_prefix_end(b, e);
            if (k == kNone) return;
        }
        int stars = 0;
        while (k < e && (toks_[k].is("*") || toks_[k].is("&") ||
                         (toks_[k].is_identifier() && qualifier_words().contains(toks_[k].text)))) {
            if (toks_[k].is("*")) ++stars;
            ++k;
        }
        if (k < e && toks_[k].is("(") && k + 2 < e && toks_[k + 1].is("*") &&
            toks_[k + 2].is_identifier()) {
            ++stars;
            k += 2;
        }
        if (k >= e || !toks_[k].is_identifier() || is_keyword(toks_[k].text)) return;
        std::string name(toks_[k].text);
        bool array = k + 1 < e && toks_[k + 1].is("[");
        bool pointer = stars > 0 || (parameter && array);
        fn.locals.insert(name);
        if (pointer) fn.pointer_locals.insert(name);
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::vector<std::size_t> match_;
    TranslationUnit unit_;
    std::int64_t counter_ = 0;
};

}  // namespace

const FunctionDef* TranslationUnit::find(std::string_view name) const {
    auto it = std::find_if(functions.begin(), functions.end(),
                           [&](const FunctionDef& fn) { return fn.name == name; });
    return it == functions.end() ? nullptr : &*it;
}

TranslationUnit extract_translation_unit(std::string_view source) {
    return Extractor(source).run();
}

std::string argument_key(std::size_t k) { return schema::kArgumentPrefix + std::to_string(k); }

std::map<std::string, graph::NodeId> build_call_graph(const TranslationUnit& unit,
                                                      graph::PropertyGraph& graph) {
    if (graph.sealed()) throw GraphSealedError();
    std::map<std::string, graph::NodeId> entries;
    std::vector<std::pair<graph::NodeId, const CallSite*>> sites;

    for (const auto& fn : unit.functions) {
        auto entry = graph.add_node(schema::kCallGraphLabel,
                                    {{schema::kExecOrder, fn.exec_order}, {schema::kName, fn.name}});
        entries.emplace(fn.name, entry);
        for (const auto& call : fn.call_sites) {
            graph::PropertyMap props{{schema::kExecOrder, call.exec_order}, {schema::kName, call.name}};
            for (std::size_t k = 0; k < call.arguments.size(); ++k) {
                props.emplace(argument_key(k + 1), call.arguments[k]);
            }
            auto site = graph.add_node(schema::kCallGraphLabel, std::move(props));
            graph.add_edge(entry, site, schema::kCalls);
            sites.emplace_back(site, &call);
        }
    }
    for (const auto& [site, call] : sites) {
        if (auto callee = entries.find(call->name); callee != entries.end()) {
            graph.add_edge(site, callee->second, schema::kCalls);
        }
    }
    return entries;
}

CallGraphRoles analyze_roles(const graph::PropertyGraph& graph) {
    CallGraphRoles roles;
    const auto& index = graph.label_index();
    auto bucket = index.find(schema::kCallGraphLabel);
    if (bucket == index.end()) return roles;
    const std::vector<graph::NodeId>& nodes = bucket->second;

    auto is_call_graph_node = [&](graph::NodeId id) {
        return graph.node(id).label == schema::kCallGraphLabel;
    };
    auto calls_out = [&](graph::NodeId id) {
        std::vector<graph::NodeId> targets;
        for (auto e : graph.out_edges(id)) {
            const auto& edge = graph.edge(e);
            if (edge.type == schema::kCalls && is_call_graph_node(edge.target)) {
                targets.push_back(edge.target);
            }
        }
        return targets;
    };

    std::set<graph::NodeId> classified;
    std::deque<graph::NodeId> queue;
    auto mark_entry = [&](graph::NodeId id) {
        if (classified.insert(id).second) {
            roles.entries.insert(id);
            queue.push_back(id);
        }
    };
    auto propagate = [&] {
        while (!queue.empty()) {
            auto id = queue.front();
            queue.pop_front();
            const bool entry = roles.is_entry(id);
            for (auto target : calls_out(id)) {
                if (entry) {
                    if (classified.insert(target).second) {
                        roles.enclosing_entry.emplace(target, id);
                        queue.push_back(target);
                    }
                } else {
                    mark_entry(target);
                }
            }
        }
    };

    for (auto id : nodes) {
        bool has_caller = std::any_of(graph.in_edges(id).begin(), graph.in_edges(id).end(), [&](auto e) {
            const auto& edge = graph.edge(e);
            return edge.type == schema::kCalls && is_call_graph_node(edge.source);
        });
        if (!has_caller) mark_entry(id);
    }
    propagate();

    auto exec_order = [&](graph::NodeId id) {
        const auto* value = graph.node(id).property(schema::kExecOrder);
        return value && value->is_integer() ? value->as_integer()
                                            : std::numeric_limits<std::int64_t>::max();
    };
    while (classified.size() < nodes.size()) {
        graph::NodeId seed{};
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        bool found = false;
        for (auto id : nodes) {
            if (classified.contains(id)) continue;
            if (!found || exec_order(id) < best) {
                seed = id;
                best = exec_order(id);
                found = true;
            }
        }
        mark_entry(seed);
        propagate();
    }
    return roles;
}

}  // namespace pkgraph::callgraph
