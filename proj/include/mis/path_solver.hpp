#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mis/graph.hpp"
#include "mis/solution.hpp"

namespace mis {

/// Node ids of a path graph from one endpoint to the other (the endpoint with
/// the smaller id first). Throws ClassMismatchError if the graph is not a path.
std::vector<Node> path_order(const Graph& graph);

/// A maximal stretch of nodes that the zero-threshold nodes do not influence
/// on their own. `thresholds` already include the -1 adjustment of ends that
/// border an influenced node early enough to help.
struct Segment {
    std::vector<std::size_t> positions;  ///< consecutive positions along the line
    Thresholds thresholds;
    std::vector<std::size_t> reduced;    ///< positions whose threshold was lowered
};

struct SegmentDecomposition {
    std::vector<Segment> segments;
    std::vector<std::size_t> auto_influenced;  ///< positions influenced with an empty target set
};

/// Splits a line (thresholds listed in order) around the nodes that zero-threshold
/// nodes influence within lambda rounds. With lambda = 0 nothing spreads; zero
/// thresholds are then raised to 1, which does not change any outcome.
///
/// Informational only: solving the segments separately can miss the optimum,
/// since targeting an influenced node makes it active earlier.
SegmentDecomposition preprocess_zeros(const Thresholds& line, std::int64_t lambda);

/// Same, for a path instance; positions refer to path_order(instance.graph).
SegmentDecomposition preprocess_zeros(const Instance& instance);

/// The path recurrence on a line with thresholds in [0, 3].
///
/// Entry (i, b, r, t) is the best weight influenced on the first i nodes plus r
/// appended non-target nodes of threshold 1, at most b targets among the first
/// i, with node i holding threshold t (its own, or one less when the node to
/// its right is active from the start). A zero-threshold node that is not
/// targeted acts as a free source active from round 1.
class PathDp {
public:
    /// Throws InputError if a threshold lies outside [0, 3].
    PathDp(const Thresholds& thresholds, const std::vector<std::int64_t>& weights, std::int64_t lambda,
           std::int64_t budget);
    PathDp(const Thresholds& thresholds, std::int64_t lambda, std::int64_t budget)
        : PathDp(thresholds, std::vector<std::int64_t>(thresholds.size(), 1), lambda, budget) {}

    std::int64_t budget_cap() const { return cap_; }
    /// Best value with at most b targets, b in [0, budget_cap()]; larger b read as budget_cap().
    std::int64_t value(std::int64_t b) const { return values_[static_cast<std::size_t>(std::min(b, cap_))]; }
    const std::vector<std::int64_t>& values() const { return values_; }

    /// Targets (line positions, ascending) attaining value(b).
    std::vector<std::size_t> targets(std::int64_t b) const;

    /// Number of table entries evaluated.
    std::size_t cells_evaluated() const { return cells_; }

private:
    enum class Choice : std::uint8_t { Skip, Target, Source };

    std::size_t cell_index(std::size_t i, std::int64_t b, std::int64_t r, int slot) const;
    std::int64_t threshold(std::size_t i, int slot) const;
    Choice choice(std::size_t i, std::int64_t b, std::int64_t r, int slot) const;

    std::size_t m_;
    std::int64_t lambda_;
    std::int64_t cap_;
    Thresholds t_;                        // 1-based
    std::vector<std::int64_t> left_run_;  // l(i)
    std::vector<std::int64_t> rows_;      // r range per i is [0, rows_[i])
    std::vector<std::size_t> offset_;
    std::vector<bool> took_target_;
    std::vector<bool> took_source_;
    std::vector<std::int64_t> values_;
    std::size_t cells_ = 0;
};

/// Best weighted influence on a line of nodes given by thresholds and weights.
struct LinePlan {
    std::int64_t value = 0;
    std::vector<std::size_t> targets;  ///< positions, ascending
    std::size_t cells_evaluated = 0;
};

LinePlan solve_line(const Thresholds& thresholds, const std::vector<std::int64_t>& weights, std::int64_t lambda,
                    std::int64_t budget);

/// Exact solver for paths. Throws ClassMismatchError for other graphs.
Solution solve_path(const Instance& instance);

/// Same as solve_path, also reporting the number of DP entries evaluated.
Solution solve_path(const Instance& instance, std::size_t& cells_evaluated);

} // namespace mis
