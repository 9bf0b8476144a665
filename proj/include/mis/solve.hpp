#pragma once

#include <optional>

#include "mis/graph.hpp"
#include "mis/solution.hpp"

namespace mis {

/// Solver picked by classify(): path, cycle, complete or tree.
/// Throws ClassMismatchError for graphs none of them handles.
SolverKind auto_solver(const Instance& instance);

/// Runs the requested solver, or auto_solver(instance) when kind is empty.
Solution solve(const Instance& instance, std::optional<SolverKind> kind = std::nullopt);

} // namespace mis
