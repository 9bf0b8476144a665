#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mis/node_set.hpp"

namespace mis {

using Edge = std::pair<Node, Node>;

/// Simple undirected graph on nodes 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicate edges or ids outside [0, n).
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Node> neighbors(Node v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Node v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    std::size_t max_degree() const;

    bool has_edge(Node u, Node v) const;

    /// Each edge once, as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Node>> adjacency_;
    std::size_t edge_count_ = 0;
};

using Thresholds = std::vector<std::int32_t>;

/// A (lambda, beta) influence-maximization instance.
struct Instance {
    Graph graph;
    Thresholds thresholds;
    std::int64_t lambda = 0;
    std::int64_t beta = 0;

    std::size_t size() const { return graph.node_count(); }
    std::int32_t threshold(Node v) const { return thresholds[static_cast<std::size_t>(v)]; }

    /// Throws InputError when thresholds and graph disagree or a parameter is negative.
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Clamps every threshold to degree + 1; such nodes can only be influenced by targeting them.
Instance normalize_thresholds(Instance instance);

enum class GraphClass { Path, Cycle, Complete, Tree, Unsupported };

std::string_view to_string(GraphClass c);
/// Accepts the lowercase names produced by to_string; throws InputError otherwise.
GraphClass parse_graph_class(std::string_view name);

/// Precedence Path > Cycle > Complete > Tree > Unsupported.
GraphClass classify(const Graph& graph);

bool is_connected(const Graph& graph);

} // namespace mis
