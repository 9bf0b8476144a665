#include "mis/diffusion.hpp"

#include <algorithm>
#include <string>

#include "mis/errors.hpp"

namespace mis {

NodeSet DiffusionTrace::round(std::int64_t tau) const {
    NodeSet s(activation_.size());
    for (std::size_t v = 0; v < activation_.size(); ++v)
        if (activation_[v] != kNever && activation_[v] <= tau) s.insert(static_cast<Node>(v));
    return s;
}

std::vector<Node> DiffusionTrace::newly_activated(std::int64_t tau) const {
    std::vector<Node> out;
    for (std::size_t v = 0; v < activation_.size(); ++v)
        if (activation_[v] == tau) out.push_back(static_cast<Node>(v));
    return out;
}

std::int64_t DiffusionTrace::last_activation_round() const {
    std::int64_t last = 0;
    for (auto a : activation_) last = std::max(last, a);
    return last;
}

std::size_t DiffusionTrace::influenced_count() const {
    return static_cast<std::size_t>(
        std::count_if(activation_.begin(), activation_.end(), [](auto a) { return a != kNever; }));
}

Simulator::Simulator(const Instance& instance)
    : instance_(instance),
      activation_(instance.size(), DiffusionTrace::kNever),
      active_neighbors_(instance.size(), 0) {
    for (std::size_t v = 0; v < instance.size(); ++v)
        if (instance.thresholds[v] <= 0) zero_threshold_.push_back(static_cast<Node>(v));
}

std::size_t Simulator::run(std::span<const Node> seeds, std::int64_t lambda) {
    const auto n = static_cast<Node>(instance_.size());
    std::fill(activation_.begin(), activation_.end(), DiffusionTrace::kNever);
    std::fill(active_neighbors_.begin(), active_neighbors_.end(), 0);
    frontier_.clear();

    std::size_t count = 0;
    for (Node s : seeds) {
        if (s < 0 || s >= n) throw InputError("seed id " + std::to_string(s) + " out of range");
        auto& a = activation_[static_cast<std::size_t>(s)];
        if (a == DiffusionTrace::kNever) {
            a = 0;
            frontier_.push_back(s);
            ++count;
        }
    }

    const auto& graph = instance_.graph;
    for (std::int64_t tau = 1; tau <= lambda; ++tau) {
        next_.clear();
        if (tau == 1) {
            for (Node z : zero_threshold_) {
                auto& a = activation_[static_cast<std::size_t>(z)];
                if (a == DiffusionTrace::kNever) {
                    a = tau;
                    next_.push_back(z);
                }
            }
        }
        for (Node u : frontier_) {
            for (Node w : graph.neighbors(u)) {
                const auto wi = static_cast<std::size_t>(w);
                ++active_neighbors_[wi];
                if (activation_[wi] == DiffusionTrace::kNever &&
                    active_neighbors_[wi] >= instance_.thresholds[wi]) {
                    activation_[wi] = tau;
                    next_.push_back(w);
                }
            }
        }
        if (next_.empty()) break;
        count += next_.size();
        std::swap(frontier_, next_);
    }
    return count;
}

DiffusionTrace simulate(const Instance& instance, std::span<const Node> seeds) {
    Simulator sim(instance);
    sim.run(seeds);
    return DiffusionTrace(instance.lambda, sim.activation());
}

std::size_t influenced_count(const Instance& instance, std::span<const Node> seeds) {
    Simulator sim(instance);
    return sim.run(seeds);
}

} // namespace mis
