#include "mis/oracle.hpp"

#include <algorithm>
#include <string>

#include "mis/diffusion.hpp"
#include "mis/errors.hpp"

namespace mis {

namespace {

/// Advances comb to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<Node>& comb, Node n) {
    const auto k = static_cast<Node>(comb.size());
    for (Node i = k - 1; i >= 0; --i) {
        auto& c = comb[static_cast<std::size_t>(i)];
        if (c < n - k + i) {
            ++c;
            for (Node j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Solution solve_bruteforce(const Instance& instance, std::size_t size_limit, OracleEnumeration mode) {
    instance.validate();
    const std::size_t n = instance.size();
    if (n > size_limit)
        throw OracleSizeError("oracle size exceeded: n = " + std::to_string(n) + " > limit " +
                              std::to_string(size_limit));

    const std::size_t k_max = effective_budget(instance);
    const std::size_t k_min = mode == OracleEnumeration::ExactBudget ? k_max : 0;

    Simulator sim(instance);
    Solution best;
    best.solver = SolverKind::BruteForce;
    bool have_best = false;

    for (std::size_t k = k_min; k <= k_max; ++k) {
        std::vector<Node> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<Node>(i);
        do {
            const std::size_t count = sim.run(comb);
            const bool better =
                !have_best || count > best.influenced_count ||
                (count == best.influenced_count &&
                 std::lexicographical_compare(comb.begin(), comb.end(), best.seeds.begin(), best.seeds.end()));
            if (better) {
                best.influenced_count = count;
                best.seeds = comb;
                have_best = true;
            }
        } while (next_combination(comb, static_cast<Node>(n)));
    }
    return best;
}

} // namespace mis
