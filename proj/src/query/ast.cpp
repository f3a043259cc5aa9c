// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/query/ast.hpp"

#include <cctype>
#include <map>

#include "lexicon.hpp"
#include "pkgraph/report_export.hpp"

namespace pkgraph::query {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool plain_identifier(std::string_view name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        return false;
    }
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return !detail::is_reserved_word(name);
}

std::string quote_name(std::string_view name) {
    if (plain_identifier(name)) return std::string(name);
    std::string out = "`";
    for (char c : name) {
        if (c == '`') out.push_back('`');
        out.push_back(c);
    }
    out.push_back('`');
    return out;
}

std::string quote_string(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

int precedence(const Expr& e) {
    if (const auto* b = std::get_if<Binary>(&e.node)) {
        if (b->op == BinaryOp::Or) return 1;
        if (b->op == BinaryOp::And) return 2;
        return 4;
    }
    if (std::holds_alternative<Not>(e.node)) return 3;
    return 5;
}

const char* spelling(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or: return "OR";
        case BinaryOp::And: return "AND";
        case BinaryOp::Eq: return "=";
        case BinaryOp::Ne: return "<>";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
    }
    return "?";
}

std::string child(const ExprPtr& e, int min_precedence) {
    std::string text = to_string(*e);
    return precedence(*e) < min_precedence ? "(" + text + ")" : text;
}

std::string to_string(const NodePattern& node) {
    std::string out = "(";
    if (node.variable) out += quote_name(*node.variable);
    if (node.label) out += ":" + quote_name(*node.label);
    if (!node.properties.empty()) {
        if (node.variable || node.label) out += " ";
        out += "{";
        for (std::size_t k = 0; k < node.properties.size(); ++k) {
            if (k > 0) out += ", ";
            out += quote_name(node.properties[k].first) + ": " + to_string(*node.properties[k].second);
        }
        out += "}";
    }
    return out + ")";
}

std::string to_string(const RelPattern& rel) {
    if (!rel.variable && !rel.type && !rel.variable_length) return "-->";
    std::string out = "-[";
    if (rel.variable) out += quote_name(*rel.variable);
    if (rel.type) out += ":" + quote_name(*rel.type);
    if (rel.variable_length) {
        out += "*";
        if (rel.max_hops && *rel.max_hops == rel.min_hops) {
            out += std::to_string(rel.min_hops);
        } else {
            if (rel.min_hops != 1) out += std::to_string(rel.min_hops);
            if (rel.max_hops) out += ".." + std::to_string(*rel.max_hops);
            else if (rel.min_hops != 1) out += "..";
        }
    }
    return out + "]->";
}

std::string to_string(const PatternPart& part) {
    std::string out;
    if (part.path_variable) out += quote_name(*part.path_variable) + "=";
    out += to_string(part.start);
    for (const auto& [rel, node] : part.chain) out += to_string(rel) + to_string(node);
    return out;
}

std::string items_to_string(const std::vector<ProjectionItem>& items) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k > 0) out += ", ";
        out += to_string(*items[k].expr);
        if (items[k].alias) out += " AS " + quote_name(*items[k].alias);
    }
    return out;
}

// Variable renaming used by normalize_variables.
class Renamer {
public:
    std::string rename(const std::string& name) {
        auto [it, inserted] = names_.try_emplace(name, "");
        if (inserted) it->second = "v" + std::to_string(names_.size());
        return it->second;
    }
    std::optional<std::string> rename(const std::optional<std::string>& name) {
        if (!name) return std::nullopt;
        return rename(*name);
    }

    ExprPtr expr(const ExprPtr& e) {
        auto copy = std::make_shared<Expr>(*e);
        std::visit(overloaded{
                       [](Literal&) {},
                       [&](Variable& v) { v.name = rename(v.name); },
                       [&](PropertyAccess& p) { p.base = expr(p.base); },
                       [&](FunctionCall& f) {
                           for (auto& arg : f.args) arg = expr(arg);
                       },
                       [&](Binary& b) {
                           b.lhs = expr(b.lhs);
                           b.rhs = expr(b.rhs);
                       },
                       [&](Not& n) { n.operand = expr(n.operand); },
                   },
                   copy->node);
        return copy;
    }

    void node(NodePattern& n) {
        n.variable = rename(n.variable);
        for (auto& [k, v] : n.properties) v = expr(v);
    }

    void items(std::vector<ProjectionItem>& items) {
        for (auto& item : items) item.expr = expr(item.expr);
        for (auto& item : items) item.alias = rename(item.alias);
    }

private:
    std::map<std::string, std::string> names_;
};

}  // namespace

bool contains_aggregate(const Expr& expr) {
    return std::visit(overloaded{
                          [](const Literal&) { return false; },
                          [](const Variable&) { return false; },
                          [](const PropertyAccess& p) { return contains_aggregate(*p.base); },
                          [](const FunctionCall& f) {
                              if (f.is_aggregate()) return true;
                              for (const auto& arg : f.args) {
                                  if (contains_aggregate(*arg)) return true;
                              }
                              return false;
                          },
                          [](const Binary& b) {
                              return contains_aggregate(*b.lhs) || contains_aggregate(*b.rhs);
                          },
                          [](const Not& n) { return contains_aggregate(*n.operand); },
                      },
                      expr.node);
}

std::string to_string(const Expr& expr) {
    return std::visit(
        overloaded{
            [](const Literal& l) {
                return std::visit(overloaded{
                                      [](NullLiteral) { return std::string("NULL"); },
                                      [](bool b) { return std::string(b ? "TRUE" : "FALSE"); },
                                      [](std::int64_t i) { return std::to_string(i); },
                                      [](double d) { return report::format_real(d); },
                                      [](const std::string& s) { return quote_string(s); },
                                  },
                                  l.value);
            },
            [](const Variable& v) { return quote_name(v.name); },
            [](const PropertyAccess& p) { return child(p.base, 5) + "." + quote_name(p.key); },
            [](const FunctionCall& f) {
                std::string name = f.function == Function::Collect ? "COLLECT"
                                   : f.function == Function::Count ? "COUNT"
                                                                   : "SIZE";
                if (f.star) return name + "(*)";
                return name + "(" + to_string(*f.args.at(0)) + ")";
            },
            [](const Binary& b) {
                int p = b.op == BinaryOp::Or ? 1 : b.op == BinaryOp::And ? 2 : 4;
                int lhs_min = p == 4 ? 5 : p;
                int rhs_min = p == 4 ? 5 : p + 1;
                return child(b.lhs, lhs_min) + " " + spelling(b.op) + " " + child(b.rhs, rhs_min);
            },
            [](const Not& n) { return "NOT " + child(n.operand, 3); },
        },
        expr.node);
}

std::string to_string(const QueryAst& ast) {
    std::string out;
    for (const auto& clause : ast.clauses) {
        if (!out.empty()) out += "\n";
        out += std::visit(overloaded{
                              [](const MatchClause& m) {
                                  std::string s = m.optional ? "OPTIONAL MATCH " : "MATCH ";
                                  for (std::size_t k = 0; k < m.patterns.size(); ++k) {
                                      if (k > 0) s += ", ";
                                      s += to_string(m.patterns[k]);
                                  }
                                  return s;
                              },
                              [](const WithClause& w) { return "WITH " + items_to_string(w.items); },
                              [](const WhereClause& w) { return "WHERE " + to_string(*w.predicate); },
                              [](const UnwindClause& u) {
                                  return "UNWIND " + to_string(*u.list) + " AS " + quote_name(u.alias);
                              },
                              [](const ReturnClause& r) { return "RETURN " + items_to_string(r.items); },
                          },
                          clause);
    }
    return out;
}

std::string column_name(const ProjectionItem& item) {
    return item.alias ? *item.alias : to_string(*item.expr);
}

QueryAst normalize_variables(const QueryAst& ast) {
    QueryAst out = ast;
    Renamer renamer;
    for (auto& clause : out.clauses) {
        std::visit(overloaded{
                       [&](MatchClause& m) {
                           for (auto& part : m.patterns) {
                               part.path_variable = renamer.rename(part.path_variable);
                               renamer.node(part.start);
                               for (auto& [rel, node] : part.chain) {
                                   rel.variable = renamer.rename(rel.variable);
                                   renamer.node(node);
                               }
                           }
                       },
                       [&](WithClause& w) { renamer.items(w.items); },
                       [&](WhereClause& w) { w.predicate = renamer.expr(w.predicate); },
                       [&](UnwindClause& u) {
                           u.list = renamer.expr(u.list);
                           u.alias = renamer.rename(u.alias);
                       },
                       [&](ReturnClause& r) { renamer.items(r.items); },
                   },
                   clause);
    }
    return out;
}

}  // namespace pkgraph::query
