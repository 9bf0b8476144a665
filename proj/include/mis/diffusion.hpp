#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mis/graph.hpp"
#include "mis/node_set.hpp"

namespace mis {

/// The chain of active sets A[S,0] ⊆ A[S,1] ⊆ ... ⊆ A[S,lambda].
///
/// Stored as the first round in which each node became active, so traces for
/// huge lambda stay O(n). round(tau) materializes A[S,tau].
class DiffusionTrace {
public:
    static constexpr std::int64_t kNever = -1;

    DiffusionTrace() = default;
    DiffusionTrace(std::int64_t lambda, std::vector<std::int64_t> activation_round)
        : lambda_(lambda), activation_(std::move(activation_round)) {}

    std::int64_t lambda() const { return lambda_; }
    std::size_t round_count() const { return static_cast<std::size_t>(lambda_) + 1; }
    std::size_t node_count() const { return activation_.size(); }

    /// Round at which v became active, or kNever if it is not active within lambda.
    std::int64_t activation_round(Node v) const { return activation_[static_cast<std::size_t>(v)]; }

    NodeSet round(std::int64_t tau) const;
    NodeSet seed_set() const { return round(0); }
    NodeSet final_set() const { return round(lambda_); }

    /// Nodes influenced at round tau (A[S,tau] \ A[S,tau-1]), ascending.
    std::vector<Node> newly_activated(std::int64_t tau) const;

    /// Last round in which some node became active (0 if only seeds).
    std::int64_t last_activation_round() const;

    std::size_t influenced_count() const;

private:
    std::int64_t lambda_ = 0;
    std::vector<std::int64_t> activation_;
};

/// Runs the threshold process for instance.lambda rounds.
/// Seeds may repeat; any id outside [0, n) throws InputError.
DiffusionTrace simulate(const Instance& instance, std::span<const Node> seeds);

/// |A[S,lambda]| without building the trace.
std::size_t influenced_count(const Instance& instance, std::span<const Node> seeds);

/// Reusable scratch space for repeated simulations on one instance.
class Simulator {
public:
    explicit Simulator(const Instance& instance);

    /// Fills activation rounds (kNever for inactive) and returns |A[S,lambda]|.
    std::size_t run(std::span<const Node> seeds, std::int64_t lambda);
    std::size_t run(std::span<const Node> seeds) { return run(seeds, instance_.lambda); }

    const std::vector<std::int64_t>& activation() const { return activation_; }

private:
    const Instance& instance_;
    std::vector<std::int64_t> activation_;
    std::vector<std::int32_t> active_neighbors_;
    std::vector<Node> frontier_;
    std::vector<Node> next_;
    std::vector<Node> zero_threshold_;
};

} // namespace mis
