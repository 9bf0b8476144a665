#include "mis/complete_solver.hpp"

#include <algorithm>
#include <string>

#include "mis/errors.hpp"

namespace mis {

namespace {

bool is_complete(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) return false;
    for (std::size_t v = 0; v < n; ++v)
        if (graph.degree(static_cast<Node>(v)) != n - 1) return false;
    return true;
}

} // namespace

Solution solve_complete(const Instance& instance) {
    instance.validate();
    if (!is_complete(instance.graph))
        throw ClassMismatchError("complete solver requires a complete graph, got " +
                                 std::string(to_string(classify(instance.graph))));
    return solve_complete(instance.thresholds, instance.lambda, instance.beta);
}

Solution solve_complete(const Thresholds& raw, std::int64_t lambda, std::int64_t beta) {
    const std::size_t n = raw.size();
    const auto budget = static_cast<std::size_t>(std::clamp<std::int64_t>(beta, 0, static_cast<std::int64_t>(n)));
    const auto threshold = [&](std::size_t v) {
        if (raw[v] < 0) throw InputError("thresholds must be non-negative");
        return std::min(static_cast<std::size_t>(raw[v]), n);
    };

    // Counting sort by threshold, descending, ids ascending within a value.
    std::vector<std::size_t> bucket(n + 2, 0);
    for (std::size_t v = 0; v < n; ++v) ++bucket[threshold(v)];
    std::vector<std::size_t> start(n + 2, 0);
    for (std::size_t t = n + 1; t-- > 0;) start[t] = start[t + 1] + bucket[t + 1];
    std::vector<Node> ranked(n);
    for (std::size_t v = 0; v < n; ++v) ranked[start[threshold(v)]++] = static_cast<Node>(v);

    Solution sol;
    sol.solver = SolverKind::Complete;
    sol.seeds.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(budget));
    std::sort(sol.seeds.begin(), sol.seeds.end());

    // below[k]: non-targets with threshold <= k
    std::vector<std::size_t> below(n + 1, 0);
    for (std::size_t r = budget; r < n; ++r) ++below[threshold(static_cast<std::size_t>(ranked[r]))];
    for (std::size_t k = 1; k <= n; ++k) below[k] += below[k - 1];

    std::size_t active = budget;
    for (std::int64_t tau = 1; tau <= lambda; ++tau) {
        const auto next = budget + below[std::min(active, n)];
        if (next == active) break;
        active = next;
    }
    sol.influenced_count = active;
    return sol;
}

} // namespace mis
