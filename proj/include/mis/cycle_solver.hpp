#pragma once

#include <optional>
#include <vector>

#include "mis/graph.hpp"
#include "mis/solution.hpp"

namespace mis {

/// Node ids around a cycle, starting at `start` and continuing towards its
/// smaller neighbor. Throws ClassMismatchError if the graph is not a cycle.
std::vector<Node> cycle_order(const Graph& graph, Node start);

/// Exact solver for cycles.
///
/// With some threshold >= 2, a pivot v of that kind is cut out: either v is a
/// target (its neighbors then enter the remaining path with one less
/// threshold), or it is not, and it counts itself when t(v) = 2 and both
/// neighbors are active one round before the horizon. Without such a node,
/// every node relays and the problem is a circular window cover.
///
/// `pivot` defaults to the smallest id with threshold >= 2; an explicit pivot
/// must have that property (InputError otherwise).
/// Throws ClassMismatchError for other graphs.
Solution solve_cycle(const Instance& instance, std::optional<Node> pivot = std::nullopt);

} // namespace mis
