// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/query/executor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "pkgraph/errors.hpp"
#include "pkgraph/report_export.hpp"

namespace pkgraph::query {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

using Row = std::vector<Value>;

Value null_value() { return Value{}; }
Value boolean(bool b) { return Value{b}; }

std::optional<double> as_number(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v.data)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v.data)) return *d;
    return std::nullopt;
}

// Three-valued `=`: nullopt is null.
std::optional<bool> value_equals(const Value& a, const Value& b) {
    if (a.is_null() || b.is_null()) return std::nullopt;
    const auto* a_int = std::get_if<std::int64_t>(&a.data);
    const auto* b_int = std::get_if<std::int64_t>(&b.data);
    if (a_int && b_int) return *a_int == *b_int;
    auto an = as_number(a), bn = as_number(b);
    if (an && bn) return *an == *bn;

    const auto* a_list = std::get_if<ValueList>(&a.data);
    const auto* b_list = std::get_if<ValueList>(&b.data);
    if (a_list && b_list) {
        if (a_list->size() != b_list->size()) return false;
        for (std::size_t k = 0; k < a_list->size(); ++k) {
            auto eq = value_equals((*a_list)[k], (*b_list)[k]);
            if (!eq || !*eq) return eq;
        }
        return true;
    }
    // Scalar against list is membership.
    if (a_list || b_list) {
        const ValueList& list = a_list ? *a_list : *b_list;
        const Value& scalar = a_list ? b : a;
        return std::any_of(list.begin(), list.end(), [&](const Value& element) {
            auto eq = value_equals(element, scalar);
            return eq && *eq;
        });
    }
    if (a.data.index() != b.data.index()) return false;
    return a.data == b.data;
}

std::optional<int> value_order(const Value& a, const Value& b) {
    auto an = as_number(a), bn = as_number(b);
    if (an && bn) return *an < *bn ? -1 : *an > *bn ? 1 : 0;
    const auto* as = std::get_if<std::string>(&a.data);
    const auto* bs = std::get_if<std::string>(&b.data);
    if (as && bs) return as->compare(*bs) < 0 ? -1 : as->compare(*bs) > 0 ? 1 : 0;
    return std::nullopt;
}

std::optional<bool> truth(const Expr& where, const Value& v) {
    if (v.is_null()) return std::nullopt;
    if (const auto* b = std::get_if<bool>(&v.data)) return *b;
    throw TypeMismatchError(to_string(where), "expected a boolean");
}

Value to_value(const std::optional<bool>& b) { return b ? boolean(*b) : null_value(); }

Value apply_binary(const Expr& expr, BinaryOp op, const Value& lhs, const Value& rhs) {
    const Binary& node = std::get<Binary>(expr.node);
    switch (op) {
        case BinaryOp::And: {
            auto l = truth(*node.lhs, lhs), r = truth(*node.rhs, rhs);
            if ((l && !*l) || (r && !*r)) return boolean(false);
            if (!l || !r) return null_value();
            return boolean(true);
        }
        case BinaryOp::Or: {
            auto l = truth(*node.lhs, lhs), r = truth(*node.rhs, rhs);
            if ((l && *l) || (r && *r)) return boolean(true);
            if (!l || !r) return null_value();
            return boolean(false);
        }
        case BinaryOp::Eq: return to_value(value_equals(lhs, rhs));
        case BinaryOp::Ne: {
            auto eq = value_equals(lhs, rhs);
            return eq ? boolean(!*eq) : null_value();
        }
        default: break;
    }
    if (lhs.is_null() || rhs.is_null()) return null_value();
    auto order = value_order(lhs, rhs);
    if (!order) return null_value();
    switch (op) {
        case BinaryOp::Lt: return boolean(*order < 0);
        case BinaryOp::Le: return boolean(*order <= 0);
        case BinaryOp::Gt: return boolean(*order > 0);
        case BinaryOp::Ge: return boolean(*order >= 0);
        default: return null_value();
    }
}

Value apply_size(const Expr& expr, const Value& v) {
    if (v.is_null()) return Value{std::int64_t{0}};
    if (const auto* list = std::get_if<ValueList>(&v.data)) {
        return Value{static_cast<std::int64_t>(list->size())};
    }
    if (const auto* text = std::get_if<std::string>(&v.data)) {
        return Value{static_cast<std::int64_t>(text->size())};
    }
    throw TypeMismatchError(to_string(expr), "SIZE expects a list or string");
}

Value apply_property(const graph::PropertyGraph& graph, const Expr& expr, const Value& base,
                     const std::string& key) {
    if (base.is_null()) return null_value();
    const graph::PropertyMap* props = nullptr;
    if (const auto* node = std::get_if<graph::NodeId>(&base.data)) {
        props = &graph.node(*node).properties;
    } else if (const auto* edge = std::get_if<graph::EdgeId>(&base.data)) {
        props = &graph.edge(*edge).properties;
    } else {
        throw TypeMismatchError(to_string(expr), "property access on a non-entity value");
    }
    auto it = props->find(key);
    return it == props->end() ? null_value() : from_property(it->second);
}

// Filter value for a pattern property map, compared with property_equals.
std::optional<graph::PropertyValue> to_property(const Expr& expr, const Value& v) {
    return std::visit(
        overloaded{
            [](const std::monostate&) -> std::optional<graph::PropertyValue> { return std::nullopt; },
            [](const std::string& s) -> std::optional<graph::PropertyValue> { return graph::PropertyValue(s); },
            [](std::int64_t i) -> std::optional<graph::PropertyValue> { return graph::PropertyValue(i); },
            [](double d) -> std::optional<graph::PropertyValue> { return graph::PropertyValue(d); },
            [&](const ValueList& list) -> std::optional<graph::PropertyValue> {
                graph::TextList texts;
                for (const auto& element : list) {
                    const auto* s = std::get_if<std::string>(&element.data);
                    if (!s || s->empty()) {
                        throw TypeMismatchError(to_string(expr), "list filter must hold non-empty strings");
                    }
                    texts.push_back(*s);
                }
                return graph::PropertyValue(std::move(texts));
            },
            [&](const auto&) -> std::optional<graph::PropertyValue> {
                throw TypeMismatchError(to_string(expr), "filter value is not a property value");
            },
        },
        v.data);
}

// Static scope check: every variable must be bound by an earlier clause or an
// earlier element of the same pattern.
class ScopeChecker {
public:
    void run(const QueryAst& ast) {
        for (const auto& clause : ast.clauses) {
            std::visit(overloaded{
                           [&](const MatchClause& m) { match(m); },
                           [&](const WithClause& w) { scope_ = project(w.items); },
                           [&](const WhereClause& w) { expr(*w.predicate); },
                           [&](const UnwindClause& u) {
                               expr(*u.list);
                               declare(u.alias);
                           },
                           [&](const ReturnClause& r) { project(r.items); },
                       },
                       clause);
        }
    }

private:
    void declare(const std::string& name) {
        if (!scope_.insert(name).second) throw Error("variable `" + name + "` is already bound");
    }

    void expr(const Expr& e) {
        std::visit(overloaded{
                       [](const Literal&) {},
                       [&](const Variable& v) {
                           if (!scope_.contains(v.name)) throw UnboundVariableError(to_string(e));
                       },
                       [&](const PropertyAccess& p) { expr(*p.base); },
                       [&](const FunctionCall& f) {
                           for (const auto& arg : f.args) expr(*arg);
                       },
                       [&](const Binary& b) {
                           expr(*b.lhs);
                           expr(*b.rhs);
                       },
                       [&](const Not& n) { expr(*n.operand); },
                   },
                   e.node);
    }

    void node(const NodePattern& n) {
        for (const auto& [k, v] : n.properties) expr(*v);
        if (n.variable) scope_.insert(*n.variable);
    }

    void match(const MatchClause& m) {
        for (const auto& part : m.patterns) {
            node(part.start);
            for (const auto& [rel, n] : part.chain) {
                if (rel.variable) scope_.insert(*rel.variable);
                node(n);
            }
            if (part.path_variable) scope_.insert(*part.path_variable);
        }
    }

    std::set<std::string> project(const std::vector<ProjectionItem>& items) {
        std::set<std::string> next;
        for (const auto& item : items) {
            expr(*item.expr);
            if (!next.insert(column_name(item)).second) {
                throw Error("duplicate column `" + column_name(item) + "`");
            }
        }
        return next;
    }

    std::set<std::string> scope_;
};

class Executor {
public:
    explicit Executor(const graph::PropertyGraph& graph) : graph_(graph) {
        table_.rows.emplace_back();
    }

    BindingTable run(const QueryAst& ast) {
        for (const auto& clause : ast.clauses) {
            std::visit(overloaded{
                           [&](const MatchClause& m) { match(m); },
                           [&](const WithClause& w) { project(w.items); },
                           [&](const WhereClause& w) { where(w); },
                           [&](const UnwindClause& u) { unwind(u); },
                           [&](const ReturnClause& r) { project(r.items); },
                       },
                       clause);
        }
        return std::move(table_);
    }

private:
    std::size_t column(const std::string& name) const {
        auto it = std::find(table_.columns.begin(), table_.columns.end(), name);
        return static_cast<std::size_t>(it - table_.columns.begin());
    }

    Value eval(const Expr& e, const Row& row) const {
        return std::visit(
            overloaded{
                [](const Literal& l) {
                    return std::visit(overloaded{
                                          [](NullLiteral) { return null_value(); },
                                          [](const auto& v) { return Value{v}; },
                                      },
                                      l.value);
                },
                [&](const Variable& v) {
                    std::size_t idx = column(v.name);
                    if (idx >= row.size()) throw UnboundVariableError(to_string(e));
                    return row[idx];
                },
                [&](const PropertyAccess& p) {
                    return apply_property(graph_, e, eval(*p.base, row), p.key);
                },
                [&](const FunctionCall& f) {
                    if (f.is_aggregate()) {
                        throw TypeMismatchError(to_string(e), "aggregate outside WITH or RETURN");
                    }
                    return apply_size(e, eval(*f.args.at(0), row));
                },
                [&](const Binary& b) {
                    return apply_binary(e, b.op, eval(*b.lhs, row), eval(*b.rhs, row));
                },
                [&](const Not& n) {
                    auto t = truth(*n.operand, eval(*n.operand, row));
                    return t ? boolean(!*t) : null_value();
                },
            },
            e.node);
    }

    // Evaluates an item that contains aggregates over the rows of one group.
    Value eval_group(const Expr& e, const std::vector<const Row*>& rows) const {
        if (!contains_aggregate(e)) {
            if (rows.empty()) return eval(e, Row(table_.columns.size()));
            return eval(e, *rows.front());
        }
        return std::visit(
            overloaded{
                [&](const FunctionCall& f) {
                    if (f.function == Function::Size) return apply_size(e, eval_group(*f.args.at(0), rows));
                    if (f.star) return Value{static_cast<std::int64_t>(rows.size())};
                    ValueList collected;
                    for (const Row* row : rows) {
                        Value v = eval(*f.args.at(0), *row);
                        if (!v.is_null()) collected.push_back(std::move(v));
                    }
                    if (f.function == Function::Count) {
                        return Value{static_cast<std::int64_t>(collected.size())};
                    }
                    return Value{std::move(collected)};
                },
                [&](const PropertyAccess& p) {
                    return apply_property(graph_, e, eval_group(*p.base, rows), p.key);
                },
                [&](const Binary& b) {
                    return apply_binary(e, b.op, eval_group(*b.lhs, rows), eval_group(*b.rhs, rows));
                },
                [&](const Not& n) {
                    auto t = truth(*n.operand, eval_group(*n.operand, rows));
                    return t ? boolean(!*t) : null_value();
                },
                [](const auto&) { return null_value(); },
            },
            e.node);
    }

    // --- MATCH -------------------------------------------------------------

    struct MatchState {
        Row row;
        std::vector<bool> bound;
        std::vector<graph::EdgeId> used;
        graph::Path path;
    };

    bool node_ok(const NodePattern& pattern, graph::NodeId id, const MatchState& state) const {
        if (pattern.variable) {
            std::size_t idx = column(*pattern.variable);
            if (state.bound[idx]) {
                const auto* bound = std::get_if<graph::NodeId>(&state.row[idx].data);
                if (!bound || *bound != id) return false;
            }
        }
        const graph::Node& node = graph_.node(id);
        if (pattern.label && node.label != *pattern.label) return false;
        for (const auto& [key, expr] : pattern.properties) {
            auto filter = to_property(*expr, eval(*expr, state.row));
            const auto* value = node.property(key);
            if (!filter || !value || !graph::property_equals(*value, *filter)) return false;
        }
        return true;
    }

    std::vector<graph::NodeId> start_candidates(const NodePattern& pattern, const MatchState& state) const {
        if (pattern.variable) {
            std::size_t idx = column(*pattern.variable);
            if (state.bound[idx]) {
                const Value& v = state.row[idx];
                if (v.is_null()) return {};
                const auto* id = std::get_if<graph::NodeId>(&v.data);
                if (!id) throw TypeMismatchError(*pattern.variable, "variable is not a node");
                return {*id};
            }
        }
        if (pattern.label) {
            auto bucket = graph_.label_index().find(*pattern.label);
            if (bucket == graph_.label_index().end()) return {};
            return bucket->second;
        }
        std::vector<graph::NodeId> all;
        for (const auto& node : graph_.nodes()) all.push_back(node.id);
        return all;
    }

    // Binds `variable` to `value` if it is not yet bound; returns whether a
    // binding was made so the caller can undo it.
    bool bind(const std::optional<std::string>& variable, Value value, MatchState& state) const {
        if (!variable) return false;
        std::size_t idx = column(*variable);
        if (state.bound[idx]) return false;
        state.row[idx] = std::move(value);
        state.bound[idx] = true;
        return true;
    }

    void unbind(const std::optional<std::string>& variable, bool did_bind, MatchState& state) const {
        if (!did_bind) return;
        std::size_t idx = column(*variable);
        state.row[idx] = Value{};
        state.bound[idx] = false;
    }

    void match_part(const MatchClause& clause, std::size_t part_index, MatchState& state,
                    std::vector<Row>& out) const {
        if (part_index == clause.patterns.size()) {
            out.push_back(state.row);
            return;
        }
        const PatternPart& part = clause.patterns[part_index];
        for (graph::NodeId start : start_candidates(part.start, state)) {
            if (!node_ok(part.start, start, state)) continue;
            bool did = bind(part.start.variable, Value{start}, state);
            state.path = graph::Path{{start}, {}};
            match_chain(clause, part_index, 0, state, out);
            unbind(part.start.variable, did, state);
        }
    }

    void match_chain(const MatchClause& clause, std::size_t part_index, std::size_t segment,
                     MatchState& state, std::vector<Row>& out) const {
        const PatternPart& part = clause.patterns[part_index];
        if (segment == part.chain.size()) {
            graph::Path saved = state.path;
            bool did = bind(part.path_variable, Value{state.path}, state);
            match_part(clause, part_index + 1, state, out);
            unbind(part.path_variable, did, state);
            state.path = std::move(saved);
            return;
        }
        const auto& [rel, target_pattern] = part.chain[segment];
        const graph::NodeId current = state.path.end();

        auto step = [&](const std::vector<graph::EdgeId>& edges, const std::vector<graph::NodeId>& nodes,
                        Value rel_value) {
            graph::NodeId target = nodes.back();
            if (!node_ok(target_pattern, target, state)) return;
            if (rel.variable) {
                std::size_t idx = column(*rel.variable);
                if (state.bound[idx] && !(state.row[idx] == rel_value)) return;
            }
            bool did_rel = bind(rel.variable, std::move(rel_value), state);
            bool did_node = bind(target_pattern.variable, Value{target}, state);
            const std::size_t used_before = state.used.size();
            const std::size_t path_edges = state.path.edges.size();
            state.used.insert(state.used.end(), edges.begin(), edges.end());
            state.path.edges.insert(state.path.edges.end(), edges.begin(), edges.end());
            state.path.nodes.insert(state.path.nodes.end(), nodes.begin(), nodes.end());

            match_chain(clause, part_index, segment + 1, state, out);

            state.path.edges.resize(path_edges);
            state.path.nodes.resize(path_edges + 1);
            state.used.resize(used_before);
            unbind(target_pattern.variable, did_node, state);
            unbind(rel.variable, did_rel, state);
        };

        if (!rel.variable_length) {
            for (graph::EdgeId id : graph_.out_edges(current)) {
                const graph::Edge& edge = graph_.edge(id);
                if (rel.type && edge.type != *rel.type) continue;
                if (std::find(state.used.begin(), state.used.end(), id) != state.used.end()) continue;
                step({id}, {edge.target}, Value{id});
            }
            return;
        }

        graph::LengthRange range{rel.min_hops, rel.max_hops};
        const std::vector<graph::EdgeId> forbidden = state.used;
        graph_.for_each_trail(current, rel.type, range, forbidden, [&](const graph::Path& trail) {
            ValueList edges;
            for (auto id : trail.edges) edges.push_back(Value{id});
            std::vector<graph::NodeId> nodes(trail.nodes.begin() + 1, trail.nodes.end());
            if (nodes.empty()) {
                // Zero-length trail: the target is the current node itself.
                nodes.push_back(current);
                if (!node_ok(target_pattern, current, state)) return true;
                bool did_rel = bind(rel.variable, Value{edges}, state);
                bool did_node = bind(target_pattern.variable, Value{current}, state);
                match_chain(clause, part_index, segment + 1, state, out);
                unbind(target_pattern.variable, did_node, state);
                unbind(rel.variable, did_rel, state);
                return true;
            }
            step(trail.edges, nodes, Value{std::move(edges)});
            return true;
        });
    }

    void match(const MatchClause& clause) {
        std::vector<std::string> added;
        auto add = [&](const std::optional<std::string>& name) {
            if (!name) return;
            if (std::find(table_.columns.begin(), table_.columns.end(), *name) != table_.columns.end()) return;
            if (std::find(added.begin(), added.end(), *name) != added.end()) return;
            added.push_back(*name);
        };
        for (const auto& part : clause.patterns) {
            add(part.path_variable);
            add(part.start.variable);
            for (const auto& [rel, node] : part.chain) {
                add(rel.variable);
                add(node.variable);
            }
        }
        const std::size_t old_width = table_.columns.size();
        table_.columns.insert(table_.columns.end(), added.begin(), added.end());

        std::vector<Row> next;
        for (auto& row : table_.rows) {
            MatchState state;
            state.row = row;
            state.row.resize(table_.columns.size());
            state.bound.assign(table_.columns.size(), false);
            std::fill(state.bound.begin(), state.bound.begin() + static_cast<std::ptrdiff_t>(old_width), true);
            const std::size_t before = next.size();
            match_part(clause, 0, state, next);
            if (clause.optional && next.size() == before) {
                Row padded = row;
                padded.resize(table_.columns.size());
                next.push_back(std::move(padded));
            }
        }
        table_.rows = std::move(next);
    }

    // --- WITH / RETURN / WHERE / UNWIND -----------------------------------

    void project(const std::vector<ProjectionItem>& items) {
        BindingTable out;
        for (const auto& item : items) out.columns.push_back(column_name(item));

        const bool aggregating = std::any_of(items.begin(), items.end(),
                                             [](const auto& item) { return contains_aggregate(*item.expr); });
        if (!aggregating) {
            for (const auto& row : table_.rows) {
                Row projected;
                for (const auto& item : items) projected.push_back(eval(*item.expr, row));
                out.rows.push_back(std::move(projected));
            }
            table_ = std::move(out);
            return;
        }

        std::vector<std::size_t> key_items;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (!contains_aggregate(*items[k].expr)) key_items.push_back(k);
        }
        std::vector<Row> keys;
        std::vector<std::vector<const Row*>> groups;
        for (const auto& row : table_.rows) {
            Row key;
            for (std::size_t k : key_items) key.push_back(eval(*items[k].expr, row));
            auto it = std::find(keys.begin(), keys.end(), key);
            if (it == keys.end()) {
                keys.push_back(std::move(key));
                groups.emplace_back();
                groups.back().push_back(&row);
            } else {
                groups[static_cast<std::size_t>(it - keys.begin())].push_back(&row);
            }
        }
        if (keys.empty() && key_items.empty()) {
            keys.emplace_back();
            groups.emplace_back();
        }
        for (std::size_t g = 0; g < keys.size(); ++g) {
            Row projected(items.size());
            std::size_t key_pos = 0;
            for (std::size_t k = 0; k < items.size(); ++k) {
                if (!contains_aggregate(*items[k].expr)) {
                    projected[k] = keys[g][key_pos++];
                } else {
                    projected[k] = eval_group(*items[k].expr, groups[g]);
                }
            }
            out.rows.push_back(std::move(projected));
        }
        table_ = std::move(out);
    }

    void where(const WhereClause& clause) {
        std::vector<Row> kept;
        for (auto& row : table_.rows) {
            auto t = truth(*clause.predicate, eval(*clause.predicate, row));
            if (t && *t) kept.push_back(std::move(row));
        }
        table_.rows = std::move(kept);
    }

    void unwind(const UnwindClause& clause) {
        std::vector<Row> next;
        for (const auto& row : table_.rows) {
            Value list = eval(*clause.list, row);
            if (list.is_null()) continue;
            auto emit = [&](Value element) {
                Row extended = row;
                extended.push_back(std::move(element));
                next.push_back(std::move(extended));
            };
            if (auto* elements = std::get_if<ValueList>(&list.data)) {
                for (auto& element : *elements) emit(element);
            } else {
                emit(list);
            }
        }
        table_.columns.push_back(clause.alias);
        table_.rows = std::move(next);
    }

    const graph::PropertyGraph& graph_;
    BindingTable table_;
};

}  // namespace

bool operator==(const Value& lhs, const Value& rhs) { return lhs.data == rhs.data; }

Value from_property(const graph::PropertyValue& value) {
    switch (value.kind()) {
        case graph::PropertyValue::Kind::Text: return Value{value.as_text()};
        case graph::PropertyValue::Kind::Integer: return Value{value.as_integer()};
        case graph::PropertyValue::Kind::Real: return Value{value.as_real()};
        case graph::PropertyValue::Kind::TextList: {
            ValueList list;
            for (const auto& s : value.as_text_list()) list.push_back(Value{s});
            return Value{std::move(list)};
        }
    }
    return Value{};
}

BindingTable evaluate_query(const QueryAst& ast, const graph::PropertyGraph& graph) {
    if (!graph.sealed()) throw Error("queries run on sealed graphs only");
    ScopeChecker{}.run(ast);
    return Executor(graph).run(ast);
}

ResultTable execute_query(const QueryAst& ast, const graph::PropertyGraph& graph) {
    BindingTable table = evaluate_query(ast, graph);
    ResultTable result;
    result.columns = table.columns;
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (const auto& value : row) cells.push_back(render_value(graph, value));
        result.rows.push_back(std::move(cells));
    }
    std::sort(result.rows.begin(), result.rows.end());
    return result;
}

std::string render_value(const graph::PropertyGraph& graph, const Value& value) {
    return std::visit(overloaded{
                          [](const std::monostate&) { return std::string("null"); },
                          [](bool b) { return std::string(b ? "true" : "false"); },
                          [](std::int64_t i) { return std::to_string(i); },
                          [](double d) { return report::format_real(d); },
                          [](const std::string& s) { return report::quote_text(s); },
                          [&](graph::NodeId id) { return report::render_node(graph.node(id)); },
                          [&](graph::EdgeId id) { return report::render_relationship(graph.edge(id)); },
                          [&](const graph::Path& p) { return report::render_path(graph, p); },
                          [&](const ValueList& list) {
                              std::string out = "[";
                              for (std::size_t k = 0; k < list.size(); ++k) {
                                  if (k > 0) out += ", ";
                                  out += render_value(graph, list[k]);
                              }
                              return out + "]";
                          },
                      },
                      value.data);
}

std::string format_result_table(const ResultTable& table) {
    auto line = [](const std::vector<std::string>& cells) {
        std::string out = "|";
        for (const auto& cell : cells) {
            out += " ";
            for (char c : cell) {
                if (c == '|') out += "\\|";
                else out.push_back(c);
            }
            out += " |";
        }
        return out + "\n";
    };
    std::string out = line(table.columns);
    for (const auto& row : table.rows) out += line(row);
    return out;
}

}  // namespace pkgraph::query
