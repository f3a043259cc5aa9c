// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/cwe_detectors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "pkgraph/errors.hpp"
#include "pkgraph/schema.hpp"

namespace pkgraph::detect {

namespace {

using graph::NodeId;
using graph::Path;
using graph::PropertyGraph;

std::int64_t exec_order(const PropertyGraph& g, NodeId id) {
    const auto* value = g.node(id).property(schema::kExecOrder);
    return value && value->is_integer() ? value->as_integer() : std::numeric_limits<std::int64_t>::max();
}

std::string text_property(const PropertyGraph& g, NodeId id, const std::string& key) {
    const auto* value = g.node(id).property(key);
    return value && value->is_text() ? value->as_text() : std::string{};
}

std::string name_of(const PropertyGraph& g, NodeId id) { return text_property(g, id, schema::kName); }

std::string exec_label(const PropertyGraph& g, NodeId id) {
    return name_of(g, id) + "@" + std::to_string(exec_order(g, id));
}

void by_exec_order(const PropertyGraph& g, std::vector<NodeId>& ids) {
    std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
        auto ea = exec_order(g, a), eb = exec_order(g, b);
        return ea != eb ? ea < eb : a < b;
    });
}

int cwe_number(const std::string& cwe_id) {
    int n = std::numeric_limits<int>::max();
    if (cwe_id.size() > 4) std::from_chars(cwe_id.data() + 4, cwe_id.data() + cwe_id.size(), n);
    return n;
}

class Context {
public:
    Context(const PropertyGraph& graph, const DetectOptions& options)
        : graph_(graph), options_(options), roles_(callgraph::analyze_roles(graph)) {
        if (options.entry) {
            for (NodeId id : roles_.entries) {
                if (name_of(graph, id) == *options.entry) starts_.push_back(id);
            }
            if (starts_.empty()) warn("entry function `" + *options.entry + "` not found");
        } else {
            starts_ = entry_nodes(graph);
        }
    }

    const callgraph::CallGraphRoles& roles() const { return roles_; }

    /// Call sites whose Name is one of `names`, by ExecOrder.
    std::vector<NodeId> call_sites(const std::vector<std::string>& names) const {
        std::vector<NodeId> out;
        for (const auto& [site, entry] : roles_.enclosing_entry) {
            const std::string name = name_of(graph_, site);
            if (std::find(names.begin(), names.end(), name) != names.end()) out.push_back(site);
        }
        by_exec_order(graph_, out);
        return out;
    }

    std::vector<Path> witness_paths(NodeId terminal) const {
        std::vector<Path> paths;
        for (NodeId start : starts_) {
            auto found = graph_.enumerate_paths(start, {terminal}, std::string(schema::kCalls));
            paths.insert(paths.end(), found.begin(), found.end());
        }
        if (paths.empty()) {
            auto it = roles_.enclosing_entry.find(terminal);
            if (it != roles_.enclosing_entry.end()) {
                paths = graph_.enumerate_paths(it->second, {terminal}, std::string(schema::kCalls));
            }
        }
        return paths;
    }

    Finding finding(const ingest::CweRecord& cwe, std::vector<NodeId> terminals, std::string message) const {
        by_exec_order(graph_, terminals);
        Finding f{cwe.cwe_id, cwe.name, {}, terminals, std::move(message)};
        for (NodeId t : terminals) {
            auto paths = witness_paths(t);
            f.witness_paths.insert(f.witness_paths.end(), paths.begin(), paths.end());
        }
        return f;
    }

    void warn(std::string message) const {
        if (options_.warnings) options_.warnings->push_back(std::move(message));
    }

private:
    const PropertyGraph& graph_;
    const DetectOptions& options_;
    callgraph::CallGraphRoles roles_;
    std::vector<NodeId> starts_;
};

bool is_type_word(const std::string& word) {
    static const std::set<std::string> words = {
        "char",   "short", "int",      "long",     "float",  "double", "void",    "signed",
        "unsigned", "_Bool", "bool",   "struct",   "union",  "enum",   "const",   "volatile",
        "size_t", "ssize_t", "int8_t", "int16_t",  "int32_t", "int64_t", "uint8_t", "uint16_t",
        "uint32_t", "uint64_t", "intptr_t", "uintptr_t", "ptrdiff_t", "wchar_t", "FILE"};
    return words.contains(word);
}

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

enum class Family { Banned, DoubleRelease, Sizeof, Signal, Getlogin, MissingRelease };

Family family_of(const std::string& cwe_id) {
    switch (cwe_number(cwe_id)) {
        case 242:
        case 477: return Family::Banned;
        case 415:
        case 1341: return Family::DoubleRelease;
        case 467: return Family::Sizeof;
        case 479: return Family::Signal;
        case 558: return Family::Getlogin;
        case 401: return Family::MissingRelease;
        default: return Family::Banned;
    }
}

}  // namespace

std::vector<NodeId> entry_nodes(const PropertyGraph& graph) {
    auto roles = callgraph::analyze_roles(graph);
    std::vector<NodeId> roots;
    for (NodeId id : roles.entries) {
        const auto& in = graph.in_edges(id);
        bool called = std::any_of(in.begin(), in.end(), [&](graph::EdgeId e) {
            const auto& edge = graph.edge(e);
            return edge.type == schema::kCalls && graph.node(edge.source).label == schema::kCallGraphLabel;
        });
        if (!called) roots.push_back(id);
    }
    std::stable_partition(roots.begin(), roots.end(),
                          [&](NodeId id) { return name_of(graph, id) == "main"; });
    return roots;
}

std::vector<Finding> detect_banned_calls(const PropertyGraph& graph, const ingest::CweRecord& cwe,
                                         const DetectOptions& options) {
    Context ctx(graph, options);
    std::vector<Finding> out;
    for (NodeId site : ctx.call_sites(cwe.function_events)) {
        out.push_back(ctx.finding(cwe, {site}, "call to " + exec_label(graph, site)));
    }
    return out;
}

std::vector<Finding> detect_double_release(const PropertyGraph& graph, const ingest::CweRecord& cwe,
                                           const DetectOptions& options) {
    Context ctx(graph, options);
    std::vector<std::pair<graph::PropertyValue, std::vector<NodeId>>> groups;
    for (NodeId site : ctx.call_sites(cwe.function_events)) {
        const auto* arg = graph.node(site).property(callgraph::argument_key(1));
        if (!arg) continue;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == *arg; });
        if (it == groups.end()) {
            groups.emplace_back(*arg, std::vector<NodeId>{site});
        } else {
            it->second.push_back(site);
        }
    }
    std::vector<Finding> out;
    for (auto& [arg, members] : groups) {
        if (members.size() < 2) continue;
        std::string message = std::to_string(members.size()) + " releases of the same handle: ";
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (k > 0) message += ", ";
            message += exec_label(graph, members[k]);
        }
        out.push_back(ctx.finding(cwe, members, std::move(message)));
    }
    return out;
}

std::vector<Finding> detect_sizeof_on_pointer(const PropertyGraph& graph,
                                              const callgraph::TranslationUnit* unit,
                                              const ingest::CweRecord& cwe, const DetectOptions& options) {
    Context ctx(graph, options);
    std::vector<Finding> out;
    for (NodeId site : ctx.call_sites(cwe.function_events)) {
        const std::string arg = text_property(graph, site, callgraph::argument_key(1));
        if (!ingest::is_c_identifier(arg)) continue;
        bool pointer = false;
        if (unit) {
            const std::string function = name_of(graph, ctx.roles().enclosing_entry.at(site));
            const auto* def = unit->find(function);
            pointer = def && def->pointer_locals.contains(arg);
        } else {
            pointer = !is_type_word(arg);
        }
        if (pointer) {
            out.push_back(ctx.finding(cwe, {site}, exec_label(graph, site) + " applied to pointer `" + arg + "`"));
        }
    }
    return out;
}

std::vector<Finding> detect_signal_nonreentrant(const PropertyGraph& graph, const ingest::CweRecord& cwe,
                                                const DetectOptions& options) {
    Context ctx(graph, options);
    const auto offending = ctx.call_sites(cwe.function_events);
    const std::set<NodeId> targets(offending.begin(), offending.end());
    std::vector<Finding> out;
    std::set<std::vector<NodeId>> reported;
    for (NodeId site : ctx.call_sites({"signal"})) {
        const std::string handler = text_property(graph, site, callgraph::argument_key(2));
        std::vector<NodeId> handler_entries;
        for (NodeId entry : ctx.roles().entries) {
            if (name_of(graph, entry) == handler) handler_entries.push_back(entry);
        }
        if (handler_entries.empty()) {
            ctx.warn(exec_label(graph, site) + ": signal handler `" + handler +
                     "` is not a function defined in this unit");
            continue;
        }
        for (NodeId entry : handler_entries) {
            if (targets.empty()) continue;
            auto paths = graph.enumerate_paths(entry, targets, std::string(schema::kCalls));
            if (paths.empty()) continue;
            std::vector<NodeId> terminals;
            for (const auto& p : paths) {
                if (std::find(terminals.begin(), terminals.end(), p.end()) == terminals.end()) {
                    terminals.push_back(p.end());
                }
            }
            by_exec_order(graph, terminals);
            if (!reported.insert(terminals).second) continue;
            std::string message = "signal handler `" + handler + "` reaches ";
            for (std::size_t k = 0; k < terminals.size(); ++k) {
                if (k > 0) message += ", ";
                message += exec_label(graph, terminals[k]);
            }
            Finding f{cwe.cwe_id, cwe.name, {}, terminals, std::move(message)};
            for (NodeId t : terminals) {
                for (const auto& p : paths) {
                    if (p.end() == t) f.witness_paths.push_back(p);
                }
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<Finding> detect_getlogin_multithreaded(const PropertyGraph& graph, const ingest::CweRecord& cwe,
                                                   const DetectOptions& options) {
    Context ctx(graph, options);
    if (ctx.call_sites({"pthread_create"}).empty()) return {};
    std::vector<Finding> out;
    for (NodeId site : ctx.call_sites(cwe.function_events)) {
        out.push_back(ctx.finding(cwe, {site}, exec_label(graph, site) + " in a program that starts threads"));
    }
    return out;
}

DetectorCapability detect_missing_release(const PropertyGraph&, const ingest::CweRecord& cwe) {
    return DetectorCapability{cwe.cwe_id, false, kMissingReleaseReason};
}

std::string generate_detection_query(const ingest::CweRecord& cwe, const std::string& entry_name) {
    if (cwe.function_events.empty()) throw Error(cwe.cwe_id + " has no function events");
    const std::string cwe_match = "MATCH (cwe:CWE {`CWE-ID`: " + quote(cwe.cwe_id) + "})\n";
    const std::string start = "(startingNode:CallGraph {Name: " + quote(entry_name) + "})";
    switch (family_of(cwe.cwe_id)) {
        case Family::Banned:
            return cwe_match +
                   "MATCH (callgraph:CallGraph {Name: cwe.`Function Events`})\n"
                   "OPTIONAL MATCH path=" + start + "-[*]->(callgraph)\n"
                   "RETURN path\n";
        case Family::DoubleRelease:
            return cwe_match +
                   "OPTIONAL MATCH (callgraph:CallGraph {Name: cwe.`Function Events`})\n"
                   "WITH callgraph.Argument1 AS argument1, COLLECT(callgraph) AS sameArgument1\n"
                   "WITH argument1, sameArgument1, SIZE(sameArgument1) AS nodeCount\n"
                   "WHERE nodeCount > 1\n"
                   "UNWIND sameArgument1 AS buggyNodes\n"
                   "OPTIONAL MATCH path=" + start + "-[*]->(buggyNodes)\n"
                   "RETURN path\n";
        default: throw UnsupportedTemplateError(cwe.cwe_id);
    }
}

ScanResult run_all(const PropertyGraph& graph, const callgraph::TranslationUnit* unit,
                   std::span<const ingest::CweRecord> catalog, const DetectOptions& options) {
    ScanResult result;
    for (const auto& cwe : catalog) {
        std::vector<Finding> found;
        switch (family_of(cwe.cwe_id)) {
            case Family::Banned: found = detect_banned_calls(graph, cwe, options); break;
            case Family::DoubleRelease: found = detect_double_release(graph, cwe, options); break;
            case Family::Sizeof: found = detect_sizeof_on_pointer(graph, unit, cwe, options); break;
            case Family::Signal: found = detect_signal_nonreentrant(graph, cwe, options); break;
            case Family::Getlogin: found = detect_getlogin_multithreaded(graph, cwe, options); break;
            case Family::MissingRelease:
                result.capabilities.push_back(detect_missing_release(graph, cwe));
                break;
        }
        result.findings.insert(result.findings.end(), found.begin(), found.end());
    }
    auto min_order = [&](const Finding& f) {
        std::int64_t m = std::numeric_limits<std::int64_t>::max();
        for (NodeId t : f.terminal_nodes) m = std::min(m, exec_order(graph, t));
        return m;
    };
    std::stable_sort(result.findings.begin(), result.findings.end(), [&](const Finding& a, const Finding& b) {
        int na = cwe_number(a.cwe_id), nb = cwe_number(b.cwe_id);
        if (na != nb) return na < nb;
        if (a.cwe_id != b.cwe_id) return a.cwe_id < b.cwe_id;
        return min_order(a) < min_order(b);
    });
    return result;
}

}  // namespace pkgraph::detect
