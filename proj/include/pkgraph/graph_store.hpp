// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// In-memory property graph shared by the vulnerability knowledge graph and the
// program call graph.
//
// Ids are dense and assigned in creation order, so "ascending id" is also
// "creation order". Nothing is ever removed. After seal() the graph is
// immutable and every const member may be called from several threads.

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pkgraph::graph {

using TextList = std::vector<std::string>;

class PropertyValue {
public:
    enum class Kind { Text, Integer, Real, TextList };

    PropertyValue() : storage_(std::string{}) {}
    PropertyValue(std::string text) : storage_(std::move(text)) {}
    PropertyValue(const char* text) : storage_(std::string(text)) {}
    template <std::integral T>
        requires(!std::same_as<T, bool>)
    PropertyValue(T integer) : storage_(static_cast<std::int64_t>(integer)) {}
    PropertyValue(double real) : storage_(real) {}
    /// Throws pkgraph::Error when an element is empty.
    PropertyValue(TextList list);

    Kind kind() const noexcept { return static_cast<Kind>(storage_.index()); }
    bool is_text() const noexcept { return kind() == Kind::Text; }
    bool is_integer() const noexcept { return kind() == Kind::Integer; }
    bool is_real() const noexcept { return kind() == Kind::Real; }
    bool is_text_list() const noexcept { return kind() == Kind::TextList; }

    const std::string& as_text() const { return std::get<std::string>(storage_); }
    std::int64_t as_integer() const { return std::get<std::int64_t>(storage_); }
    double as_real() const { return std::get<double>(storage_); }
    const TextList& as_text_list() const { return std::get<TextList>(storage_); }

    /// Strict structural equality: same kind and same value.
    friend bool operator==(const PropertyValue&, const PropertyValue&) = default;

private:
    std::variant<std::string, std::int64_t, double, TextList> storage_;
};

/// Query-level equality. Values of different kinds never match, except a
/// scalar against a text-list, which matches when the scalar is an element.
bool property_equals(const PropertyValue& lhs, const PropertyValue& rhs);

using PropertyMap = std::map<std::string, PropertyValue>;

struct NodeId {
    std::uint64_t value = 0;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct EdgeId {
    std::uint64_t value = 0;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Node {
    NodeId id;
    std::string label;
    PropertyMap properties;

    const PropertyValue* property(const std::string& key) const;
};

struct Edge {
    EdgeId id;
    NodeId source;
    NodeId target;
    std::string type;
    PropertyMap properties;
};

/// A walk through the graph. `edges[k]` leads from `nodes[k]` to `nodes[k + 1]`.
struct Path {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept { return edges.size(); }
    NodeId start() const { return nodes.front(); }
    NodeId end() const { return nodes.back(); }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Bounds for variable-length traversal. An unset `max_length` is unbounded.
struct LengthRange {
    std::size_t min_length = 1;
    std::optional<std::size_t> max_length;

    bool admits(std::size_t length) const noexcept {
        return length >= min_length && (!max_length || length <= *max_length);
    }
};

class PropertyGraph {
public:
    PropertyGraph() = default;

    NodeId add_node(std::string label, PropertyMap properties = {});
    EdgeId add_edge(NodeId source, NodeId target, std::string type, PropertyMap properties = {});

    /// Nodes carrying `label` whose properties satisfy every filter entry under
    /// property_equals. A missing key never matches. Ascending node id.
    std::vector<NodeId> find_nodes(const std::string& label, const PropertyMap& filters = {}) const;

    /// Every edge-unique path from `start` to a node in `targets` that follows
    /// only `edge_type` edges (any type when unset). Sorted lexicographically by
    /// edge-id sequence.
    std::vector<Path> enumerate_paths(NodeId start, const std::set<NodeId>& targets,
                                      const std::optional<std::string>& edge_type,
                                      LengthRange range = {}) const;

    /// Depth-first walk over edge-unique trails leaving `start`. `visit` is
    /// called for each trail whose length `range` admits, before the trail is
    /// extended, so visits arrive in lexicographic edge-id order. Edges listed
    /// in `forbidden` are never used. Returning false from `visit` stops the
    /// walk.
    void for_each_trail(NodeId start, const std::optional<std::string>& edge_type,
                        LengthRange range, std::span<const EdgeId> forbidden,
                        const std::function<bool(const Path&)>& visit) const;

    void seal() noexcept { sealed_ = true; }
    bool sealed() const noexcept { return sealed_; }

    bool has_node(NodeId id) const noexcept { return id.value < nodes_.size(); }
    bool has_edge(EdgeId id) const noexcept { return id.value < edges_.size(); }
    const Node& node(NodeId id) const;
    const Edge& edge(EdgeId id) const;

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Outgoing / incoming edge ids, ascending.
    const std::vector<EdgeId>& out_edges(NodeId id) const;
    const std::vector<EdgeId>& in_edges(NodeId id) const;

    const std::map<std::string, std::vector<NodeId>>& label_index() const noexcept {
        return label_index_;
    }

private:
    void require_mutable() const;

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
    std::map<std::string, std::vector<NodeId>> label_index_;
    bool sealed_ = false;
};

/// Contiguity, direction and edge-uniqueness check.
bool is_valid_path(const PropertyGraph& graph, const Path& path);

}  // namespace pkgraph::graph
