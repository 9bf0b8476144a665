#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mis/diffusion.hpp"
#include "mis/graph.hpp"

namespace mis {

enum class SolverKind { Tree, Path, Cycle, Complete, BruteForce };

std::string_view to_string(SolverKind kind);
SolverKind parse_solver_kind(std::string_view name);

struct Solution {
    std::vector<Node> seeds;  ///< ascending
    std::size_t influenced_count = 0;
    SolverKind solver = SolverKind::BruteForce;
    std::optional<DiffusionTrace> trace;
};

/// Effective budget min(beta, n).
inline std::size_t effective_budget(const Instance& instance) {
    return static_cast<std::size_t>(
        std::min<std::int64_t>(instance.beta, static_cast<std::int64_t>(instance.size())));
}

/// Rounds past n never change the active set.
inline std::int64_t effective_lambda(const Instance& instance) {
    return std::min<std::int64_t>(instance.lambda, static_cast<std::int64_t>(instance.size()));
}

} // namespace mis
