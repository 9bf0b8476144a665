#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mis/ext_int.hpp"
#include "mis/graph.hpp"
#include "mis/solution.hpp"

namespace mis {

/// Which of the two thresholds a table entry assumes for its node: the
/// original t(v), or the residual t(v) - 1 available when the parent is
/// already active and counts as one influenced neighbor.
enum class ThresholdSlot : std::uint8_t { Residual = 0, Full = 1 };

/// MIS[v][b][tau][t] for a single node v: the most nodes of the subtree T(v)
/// that can be influenced within lambda rounds using at most b targets, where
///   tau = 0        v is targeted,
///   1 <= tau <= λ  v is not targeted and at least t children are active by tau - 1,
///   tau = NEVER    v is not influenced within lambda rounds (so helps no neighbor).
/// Budgets above budget_cap() read as budget_cap(): a subtree never needs
/// more targets than it has nodes.
class NodeTable {
public:
    NodeTable() = default;
    NodeTable(std::int32_t lambda, std::int32_t budget_cap)
        : lambda_(lambda),
          cap_(budget_cap),
          entries_(static_cast<std::size_t>(budget_cap + 1) * static_cast<std::size_t>(lambda + 2) * 2) {}

    std::int32_t lambda() const { return lambda_; }
    std::int32_t budget_cap() const { return cap_; }
    std::size_t round_slots() const { return static_cast<std::size_t>(lambda_) + 2; }

    ExtInt at(std::int64_t b, RoundIndex tau, ThresholdSlot t) const { return at_slot(b, tau.slot(lambda_), t); }
    ExtInt at_slot(std::int64_t b, std::size_t tau_slot, ThresholdSlot t) const {
        return entries_[index(clamp(b), tau_slot, t)];
    }
    void set(std::int32_t b, std::size_t tau_slot, ThresholdSlot t, ExtInt value) {
        entries_[index(b, tau_slot, t)] = value;
    }

private:
    std::int32_t clamp(std::int64_t b) const { return static_cast<std::int32_t>(b < cap_ ? b : cap_); }
    std::size_t index(std::int32_t b, std::size_t tau_slot, ThresholdSlot t) const {
        return (static_cast<std::size_t>(b) * round_slots() + tau_slot) * 2 + static_cast<std::size_t>(t);
    }

    std::int32_t lambda_ = 0;
    std::int32_t cap_ = 0;
    std::vector<ExtInt> entries_;
};

/// A child's table as seen by its parent during the child scans.
struct ChildTable {
    const NodeTable* table = nullptr;
};

/// Base case for a node without children (threshold t is the value in use).
ExtInt leaf_table(std::int64_t b, RoundIndex tau, std::int32_t t, std::int32_t lambda);

/// MIS[v][b][0][·]: v targeted, b - 1 targets split among the children.
ExtInt case_target(std::span<const ChildTable> children, std::int32_t b, std::int32_t lambda);

/// MIS[v][b][tau][t] for 1 <= tau <= lambda: v not targeted, at least t children active by tau - 1.
ExtInt case_internal_round(std::span<const ChildTable> children, std::int32_t b, std::int32_t tau,
                           std::int32_t t, std::int32_t lambda);

/// MIS[v][b][NEVER][·]: v stays inactive, so children keep their full thresholds.
ExtInt case_never(std::span<const ChildTable> children, std::int32_t b, std::int32_t lambda);

/// Bottom-up evaluation of the whole tree plus target-set reconstruction.
///
/// Children are ordered by ascending id. All per-node tables are kept so the
/// reconstruction can replay the child scans of the entries it visits.
class TreeDp {
public:
    /// instance must be a tree (or path) with normalized thresholds.
    explicit TreeDp(const Instance& instance, Node root = 0);

    Node root() const { return root_; }
    std::int32_t lambda() const { return lambda_; }
    std::int32_t budget() const { return budget_; }
    const NodeTable& table(Node v) const { return tables_[static_cast<std::size_t>(v)]; }
    std::span<const Node> children(Node v) const { return children_[static_cast<std::size_t>(v)]; }

    /// max over tau of MIS[root][beta][tau][t(root)]; the earliest finite tau wins ties, NEVER last.
    std::pair<RoundIndex, ExtInt> best_root_round() const;

    /// A target set of size <= beta attaining MIS[root][beta][tau][t(root)].
    std::vector<Node> backtrack(RoundIndex root_tau) const;

private:
    struct Frame {
        Node v;
        std::int32_t budget;
        std::size_t tau_slot;
        ThresholdSlot slot;
    };

    void compute(Node v);
    std::vector<ChildTable> child_tables(Node v) const;
    std::int32_t threshold_of(Node v, ThresholdSlot slot) const;
    void expand(const Frame& frame, std::vector<Frame>& stack, std::vector<Node>& seeds) const;

    Thresholds thresholds_;
    Node root_;
    std::int32_t lambda_;
    std::int32_t budget_;
    std::vector<std::vector<Node>> children_;
    std::vector<std::int32_t> subtree_size_;
    std::vector<NodeTable> tables_;
};

/// Exact solver for trees (paths included). Throws ClassMismatchError for other graphs.
Solution solve_tree(const Instance& instance, Node root = 0);

} // namespace mis
