// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/graph_store.hpp"

#include <algorithm>

#include "pkgraph/errors.hpp"

namespace pkgraph::graph {

PropertyValue::PropertyValue(TextList list) {
    for (const auto& element : list) {
        if (element.empty()) throw Error("text-list elements must be non-empty");
    }
    storage_ = std::move(list);
}

namespace {

bool list_contains(const TextList& list, const PropertyValue& scalar) {
    if (!scalar.is_text()) return false;
    return std::find(list.begin(), list.end(), scalar.as_text()) != list.end();
}

}  // namespace

bool property_equals(const PropertyValue& lhs, const PropertyValue& rhs) {
    if (lhs.kind() == rhs.kind()) return lhs == rhs;
    if (lhs.is_text_list()) return list_contains(lhs.as_text_list(), rhs);
    if (rhs.is_text_list()) return list_contains(rhs.as_text_list(), lhs);
    return false;
}

const PropertyValue* Node::property(const std::string& key) const {
    auto it = properties.find(key);
    return it == properties.end() ? nullptr : &it->second;
}

void PropertyGraph::require_mutable() const {
    if (sealed_) throw GraphSealedError();
}

NodeId PropertyGraph::add_node(std::string label, PropertyMap properties) {
    require_mutable();
    if (label.empty()) throw InvalidLabelError("node label must be non-empty");
    NodeId id{nodes_.size()};
    label_index_[label].push_back(id);
    nodes_.push_back(Node{id, std::move(label), std::move(properties)});
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

EdgeId PropertyGraph::add_edge(NodeId source, NodeId target, std::string type,
                               PropertyMap properties) {
    require_mutable();
    if (!has_node(source)) {
        throw UnknownNodeError("unknown edge source " + std::to_string(source.value));
    }
    if (!has_node(target)) {
        throw UnknownNodeError("unknown edge target " + std::to_string(target.value));
    }
    if (type.empty()) throw InvalidLabelError("edge type must be non-empty");
    EdgeId id{edges_.size()};
    edges_.push_back(Edge{id, source, target, std::move(type), std::move(properties)});
    out_[source.value].push_back(id);
    in_[target.value].push_back(id);
    return id;
}

const Node& PropertyGraph::node(NodeId id) const {
    if (!has_node(id)) throw UnknownNodeError("unknown node " + std::to_string(id.value));
    return nodes_[id.value];
}

const Edge& PropertyGraph::edge(EdgeId id) const {
    if (!has_edge(id)) throw Error("unknown edge " + std::to_string(id.value));
    return edges_[id.value];
}

const std::vector<EdgeId>& PropertyGraph::out_edges(NodeId id) const {
    node(id);
    return out_[id.value];
}

const std::vector<EdgeId>& PropertyGraph::in_edges(NodeId id) const {
    node(id);
    return in_[id.value];
}

std::vector<NodeId> PropertyGraph::find_nodes(const std::string& label,
                                              const PropertyMap& filters) const {
    std::vector<NodeId> result;
    auto bucket = label_index_.find(label);
    if (bucket == label_index_.end()) return result;
    for (NodeId id : bucket->second) {
        const Node& candidate = nodes_[id.value];
        bool ok = std::all_of(filters.begin(), filters.end(), [&](const auto& filter) {
            const PropertyValue* value = candidate.property(filter.first);
            return value != nullptr && property_equals(*value, filter.second);
        });
        if (ok) result.push_back(id);
    }
    return result;
}

void PropertyGraph::for_each_trail(NodeId start, const std::optional<std::string>& edge_type,
                                   LengthRange range, std::span<const EdgeId> forbidden,
                                   const std::function<bool(const Path&)>& visit) const {
    node(start);
    std::vector<bool> used(edges_.size(), false);
    for (EdgeId id : forbidden) {
        if (has_edge(id)) used[id.value] = true;
    }

    Path trail;
    trail.nodes.push_back(start);
    bool stopped = false;

    // Recursion depth is bounded by the edge count.
    std::function<void()> extend = [&] {
        if (range.admits(trail.length()) && !visit(trail)) {
            stopped = true;
            return;
        }
        if (range.max_length && trail.length() >= *range.max_length) return;
        for (EdgeId id : out_[trail.end().value]) {
            const Edge& e = edges_[id.value];
            if (used[id.value] || (edge_type && e.type != *edge_type)) continue;
            used[id.value] = true;
            trail.edges.push_back(id);
            trail.nodes.push_back(e.target);
            extend();
            trail.nodes.pop_back();
            trail.edges.pop_back();
            used[id.value] = false;
            if (stopped) return;
        }
    };
    extend();
}

std::vector<Path> PropertyGraph::enumerate_paths(NodeId start, const std::set<NodeId>& targets,
                                                 const std::optional<std::string>& edge_type,
                                                 LengthRange range) const {
    std::vector<Path> paths;
    for_each_trail(start, edge_type, range, {}, [&](const Path& trail) {
        if (targets.contains(trail.end())) paths.push_back(trail);
        return true;
    });
    return paths;
}

bool is_valid_path(const PropertyGraph& graph, const Path& path) {
    if (path.nodes.empty() || path.edges.size() + 1 != path.nodes.size()) return false;
    std::set<EdgeId> seen;
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
        if (!graph.has_edge(path.edges[k])) return false;
        const Edge& e = graph.edge(path.edges[k]);
        if (e.source != path.nodes[k] || e.target != path.nodes[k + 1]) return false;
        if (!seen.insert(e.id).second) return false;
    }
    return std::all_of(path.nodes.begin(), path.nodes.end(),
                       [&](NodeId id) { return graph.has_node(id); });
}

}  // namespace pkgraph::graph
