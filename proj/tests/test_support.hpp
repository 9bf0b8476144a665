#pragma once

// Shared helpers for the unit tests: a literal-recurrence simulator that is
// independent of the library's incremental one, plus instance builders.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mis/generate.hpp"
#include "mis/graph.hpp"

namespace mis::testing {

/// A[S,0..lambda] computed straight from the set recurrence, one full pass per round.
inline std::vector<std::set<Node>> naive_rounds(const Instance& inst, const std::vector<Node>& seeds) {
    std::vector<std::set<Node>> rounds;
    rounds.emplace_back(seeds.begin(), seeds.end());
    for (std::int64_t tau = 1; tau <= inst.lambda; ++tau) {
        const auto& prev = rounds.back();
        std::set<Node> next = prev;
        for (std::size_t u = 0; u < inst.size(); ++u) {
            std::int32_t active = 0;
            for (Node w : inst.graph.neighbors(static_cast<Node>(u))) active += prev.count(w) ? 1 : 0;
            if (active >= inst.thresholds[u]) next.insert(static_cast<Node>(u));
        }
        rounds.push_back(std::move(next));
    }
    return rounds;
}

inline std::size_t naive_count(const Instance& inst, const std::vector<Node>& seeds) {
    return naive_rounds(inst, seeds).back().size();
}

/// Independent exhaustive optimum over all subsets of size <= beta (bitmask enumeration).
inline std::size_t naive_optimum(const Instance& inst) {
    const std::size_t n = inst.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::int64_t>(std::popcount(mask)) > inst.beta) continue;
        std::vector<Node> seeds;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1U << v)) seeds.push_back(static_cast<Node>(v));
        best = std::max(best, naive_count(inst, seeds));
    }
    return best;
}

inline Instance with_params(Instance inst, std::int64_t lambda, std::int64_t beta) {
    inst.lambda = lambda;
    inst.beta = beta;
    return inst;
}

inline Instance path_instance(const Thresholds& t, std::int64_t lambda, std::int64_t beta) {
    Instance inst;
    inst.graph = make_path(t.size());
    inst.thresholds = t;
    inst.lambda = lambda;
    inst.beta = beta;
    return inst;
}

inline Instance cycle_instance(const Thresholds& t, std::int64_t lambda, std::int64_t beta) {
    Instance inst = path_instance(t, lambda, beta);
    inst.graph = make_cycle(t.size());
    return inst;
}

inline Instance complete_instance(const Thresholds& t, std::int64_t lambda, std::int64_t beta) {
    Instance inst = path_instance(t, lambda, beta);
    inst.graph = make_complete(t.size());
    return inst;
}

inline Instance graph_instance(std::size_t n, const std::vector<Edge>& edges, const Thresholds& t,
                               std::int64_t lambda, std::int64_t beta) {
    Instance inst;
    inst.graph = Graph(n, edges);
    inst.thresholds = t;
    inst.lambda = lambda;
    inst.beta = beta;
    return inst;
}

/// Random instance of a class with n in [min_n, max_n], lambda and beta in [0, max_param].
inline Instance random_instance(std::mt19937_64& rng, GraphClass cls, std::size_t min_n, std::size_t max_n,
                                std::int64_t max_lambda, std::int64_t max_beta) {
    const auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
    Instance inst = generate(cls, n, UniformThresholds{}, rng());
    inst.lambda = std::uniform_int_distribution<std::int64_t>(0, max_lambda)(rng);
    inst.beta = std::uniform_int_distribution<std::int64_t>(0, max_beta)(rng);
    return inst;
}

} // namespace mis::testing
