#include "mis/report.hpp"

#include <sstream>

#include "json.hpp"
#include "mis/errors.hpp"

namespace mis {

std::vector<std::vector<Node>> round_lists(const DiffusionTrace& trace) {
    std::vector<std::vector<Node>> rounds(static_cast<std::size_t>(trace.last_activation_round()) + 1);
    for (std::size_t v = 0; v < trace.node_count(); ++v) {
        const auto r = trace.activation_round(static_cast<Node>(v));
        if (r != DiffusionTrace::kNever) rounds[static_cast<std::size_t>(r)].push_back(static_cast<Node>(v));
    }
    return rounds;
}

DiffusionTrace trace_from_rounds(const std::vector<std::vector<Node>>& rounds, std::size_t node_count,
                                 std::int64_t lambda) {
    std::vector<std::int64_t> activation(node_count, DiffusionTrace::kNever);
    for (std::size_t r = 0; r < rounds.size(); ++r) {
        if (static_cast<std::int64_t>(r) > lambda) throw InputError("rounds: more rounds than lambda allows");
        for (Node v : rounds[r]) {
            if (v < 0 || static_cast<std::size_t>(v) >= node_count)
                throw InputError("rounds: node " + std::to_string(v) + " out of range");
            if (activation[static_cast<std::size_t>(v)] != DiffusionTrace::kNever)
                throw InputError("rounds: node " + std::to_string(v) + " listed twice");
            activation[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(r);
        }
    }
    return {lambda, std::move(activation)};
}

std::string to_json(const SolutionReport& report) {
    const auto& sol = report.solution;
    nlohmann::ordered_json doc;
    doc["value"] = sol.influenced_count;
    doc["seeds"] = sol.seeds;
    doc["solver"] = std::string(to_string(sol.solver));
    doc["wall_time_ms"] = report.wall_time_ms;
    if (sol.trace) doc["rounds"] = round_lists(*sol.trace);
    return doc.dump();
}

std::string to_text(const SolutionReport& report) {
    const auto& sol = report.solution;
    std::ostringstream out;
    out << "solver: " << to_string(sol.solver) << '\n';
    out << "value: " << sol.influenced_count << '\n';
    out << "seeds:";
    for (Node v : sol.seeds) out << ' ' << v;
    out << '\n';
    if (sol.trace) {
        const auto rounds = round_lists(*sol.trace);
        for (std::size_t r = 0; r < rounds.size(); ++r) {
            out << "round " << r << ':';
            for (Node v : rounds[r]) out << ' ' << v;
            out << '\n';
        }
    }
    out << "wall_time_ms: " << report.wall_time_ms << '\n';
    return out.str();
}

} // namespace mis
