#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mis/diffusion.hpp"
#include "mis/solution.hpp"

namespace mis {

struct SolutionReport {
    Solution solution;
    double wall_time_ms = 0.0;
};

/// Newly activated nodes per round, from round 0 (the seeds) to the last
/// round in which anything happened.
std::vector<std::vector<Node>> round_lists(const DiffusionTrace& trace);

/// Inverse of round_lists. Throws InputError on repeated or out-of-range nodes.
DiffusionTrace trace_from_rounds(const std::vector<std::vector<Node>>& rounds, std::size_t node_count,
                                 std::int64_t lambda);

/// One-line JSON: value, seeds, solver, wall_time_ms and, with a trace, rounds.
std::string to_json(const SolutionReport& report);
std::string to_text(const SolutionReport& report);

} // namespace mis
