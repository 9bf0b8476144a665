#include "mis/graph.hpp"

#include <algorithm>
#include <string>

#include "mis/errors.hpp"

namespace mis {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    const auto limit = static_cast<std::int64_t>(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= limit || v >= limit)
            throw InputError("edges: node id out of range in [" + std::to_string(u) + "," +
                             std::to_string(v) + "]");
        if (u == v) throw InputError("edges: self-loop at node " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InputError("edges: duplicate edge");
    }
    edge_count_ = edges.size();
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
}

bool Graph::has_edge(Node u, Node v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Node v : adjacency_[u])
            if (static_cast<Node>(u) < v) out.emplace_back(static_cast<Node>(u), v);
    return out;
}

void Instance::validate() const {
    if (thresholds.size() != graph.node_count())
        throw InputError("thresholds: expected " + std::to_string(graph.node_count()) + " entries");
    for (auto t : thresholds)
        if (t < 0) throw InputError("thresholds: negative entry " + std::to_string(t));
    if (lambda < 0) throw InputError("lambda: must be non-negative");
    if (beta < 0) throw InputError("beta: must be non-negative");
}

Instance normalize_thresholds(Instance instance) {
    for (std::size_t v = 0; v < instance.thresholds.size(); ++v) {
        const auto cap = static_cast<std::int32_t>(instance.graph.degree(static_cast<Node>(v)) + 1);
        instance.thresholds[v] = std::min(instance.thresholds[v], cap);
    }
    return instance;
}

std::string_view to_string(GraphClass c) {
    switch (c) {
    case GraphClass::Path: return "path";
    case GraphClass::Cycle: return "cycle";
    case GraphClass::Complete: return "complete";
    case GraphClass::Tree: return "tree";
    case GraphClass::Unsupported: return "unsupported";
    }
    return "unsupported";
}

GraphClass parse_graph_class(std::string_view name) {
    for (auto c : {GraphClass::Path, GraphClass::Cycle, GraphClass::Complete, GraphClass::Tree,
                   GraphClass::Unsupported})
        if (to_string(c) == name) return c;
    throw InputError("unknown graph class '" + std::string(name) + "'");
}

bool is_connected(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Node u = stack.back();
        stack.pop_back();
        for (Node w : graph.neighbors(u)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == n;
}

GraphClass classify(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0 || !is_connected(graph)) return GraphClass::Unsupported;
    const bool acyclic = graph.edge_count() == n - 1;
    const std::size_t max_deg = graph.max_degree();
    if (acyclic && max_deg <= 2) return GraphClass::Path;

    bool all_two = true;
    bool all_full = true;
    for (std::size_t v = 0; v < n; ++v) {
        const auto d = graph.degree(static_cast<Node>(v));
        all_two = all_two && d == 2;
        all_full = all_full && d == n - 1;
    }
    if (all_two) return GraphClass::Cycle;
    if (all_full) return GraphClass::Complete;
    if (acyclic) return GraphClass::Tree;
    return GraphClass::Unsupported;
}

} // namespace mis
