#pragma once

#include "mis/graph.hpp"
#include "mis/solution.hpp"

namespace mis {

/// Exact solver for complete graphs: target the min(beta, n) largest
/// thresholds (smaller id first among equals), then count rounds directly
/// from the threshold histogram. O(n + rounds until the set stops growing).
/// Throws ClassMismatchError unless every node is adjacent to all others.
Solution solve_complete(const Instance& instance);

/// Same, on the implicit complete graph over thresholds.size() nodes.
Solution solve_complete(const Thresholds& thresholds, std::int64_t lambda, std::int64_t beta);

} // namespace mis
