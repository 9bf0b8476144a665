#include "mis/cycle_solver.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mis/diffusion.hpp"
#include "mis/errors.hpp"
#include "mis/path_solver.hpp"

namespace mis {

std::vector<Node> cycle_order(const Graph& graph, Node start) {
    const auto cls = classify(graph);
    if (cls != GraphClass::Cycle)
        throw ClassMismatchError("cycle solver requires a cycle, got " + std::string(to_string(cls)));
    const std::size_t n = graph.node_count();
    std::vector<Node> order{start};
    Node prev = start;
    Node cur = graph.neighbors(start).front();
    while (order.size() < n) {
        order.push_back(cur);
        const auto nb = graph.neighbors(cur);
        const Node next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

namespace {

struct LineCover {
    std::int64_t value = 0;
    std::vector<std::size_t> ends;  // last position of each window
};

// Most units covered on a line by at most `budget` windows of w consecutive positions.
LineCover cover_line(const std::vector<std::int64_t>& units, std::size_t w, std::int64_t budget, bool reconstruct) {
    LineCover out;
    const std::size_t k = units.size();
    if (k == 0 || budget <= 0) return out;
    const auto rounds = static_cast<std::size_t>(std::min<std::int64_t>(budget, static_cast<std::int64_t>(k)));

    std::vector<std::int64_t> prefix(k + 1, 0);
    for (std::size_t x = 0; x < k; ++x) prefix[x + 1] = prefix[x] + units[x];
    const auto alone = [&](std::size_t e) { return prefix[e + 1] - prefix[e + 1 - std::min(w, e + 1)]; };

    // rows[j - 1][e]: best with at most j windows, the last one ending at e
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> prev;
    std::vector<std::int64_t> cur(k);
    std::size_t best_j = 0;
    std::size_t best_e = 0;
    for (std::size_t j = 1; j <= rounds; ++j) {
        std::deque<std::size_t> window;  // e' in (e - w, e), decreasing prev[e'] - prefix[e' + 1]
        std::int64_t disjoint = -1;
        for (std::size_t e = 0; e < k; ++e) {
            auto val = alone(e);
            if (j > 1) {
                if (e >= w) {
                    disjoint = std::max(disjoint, prev[e - w]);
                    val = std::max(val, disjoint + alone(e));
                }
                if (e >= 1) {
                    const auto key = prev[e - 1] - prefix[e];
                    while (!window.empty() && prev[window.back()] - prefix[window.back() + 1] <= key) window.pop_back();
                    window.push_back(e - 1);
                }
                while (!window.empty() && window.front() + w <= e) window.pop_front();
                if (!window.empty())
                    val = std::max(val, prev[window.front()] - prefix[window.front() + 1] + prefix[e + 1]);
            }
            cur[e] = val;
            if (val > out.value) {
                out.value = val;
                best_j = j;
                best_e = e;
            }
        }
        if (reconstruct) rows.push_back(cur);
        std::swap(prev, cur);
        cur.assign(k, 0);
    }

    if (!reconstruct || out.value == 0) return out;
    std::size_t j = best_j;
    std::size_t e = best_e;
    auto target = out.value;
    while (true) {
        out.ends.push_back(e);
        if (target == alone(e) || j == 1) break;
        const auto& before = rows[j - 2];
        std::size_t next = k;
        for (std::size_t x = 0; x < e && next == k; ++x) {
            const auto gain = x + w <= e ? alone(e) : prefix[e + 1] - prefix[x + 1];
            if (before[x] + gain == target) next = x;
        }
        target = before[next];
        e = next;
        --j;
    }
    return out;
}

Solution solve_all_relay(const Instance& inst, const std::vector<Node>& order) {
    const std::size_t n = order.size();
    const auto lambda = effective_lambda(inst);
    const auto budget = static_cast<std::int64_t>(effective_budget(inst));
    const auto w = std::min<std::size_t>(static_cast<std::size_t>(2 * lambda + 1), n);

    Simulator sim(inst);
    const auto fixed = static_cast<std::int64_t>(sim.run({}));
    std::vector<std::int64_t> units(n);
    for (std::size_t p = 0; p < n; ++p)
        units[p] = sim.activation()[static_cast<std::size_t>(order[p])] == DiffusionTrace::kNever ? 1 : 0;

    // Maps windows on an arc (arc positions -> cycle positions) back to centers.
    const auto centers = [&](const std::vector<std::size_t>& arc, const LineCover& cover) {
        std::vector<Node> out;
        for (auto e : cover.ends) {
            const auto c = std::clamp<std::int64_t>(static_cast<std::int64_t>(e) - lambda, 0,
                                                    static_cast<std::int64_t>(arc.size()) - 1);
            out.push_back(order[arc[static_cast<std::size_t>(c)]]);
        }
        return out;
    };
    const auto arc_units = [&](const std::vector<std::size_t>& arc) {
        std::vector<std::int64_t> u;
        for (auto p : arc) u.push_back(units[p]);
        return u;
    };

    // Guess 0: no window covers position 0. Guess d: the window centered at offset d does.
    std::int64_t best = -1;
    std::int64_t best_guess = 0;
    const auto guesses = w == n ? 1 : static_cast<std::int64_t>(w);
    const auto sn = static_cast<std::int64_t>(n);
    const auto wrap = [&](std::int64_t p) { return static_cast<std::size_t>(((p % sn) + sn) % sn); };
    const auto center_of = [&](std::int64_t g) { return w == n ? 0 : g - 1 - lambda; };
    const auto arc_for = [&](std::int64_t g, std::int64_t& gain) {
        std::vector<std::size_t> arc;
        gain = 0;
        if (g == 0) {
            for (std::size_t p = 1; p < n; ++p) arc.push_back(p);
            return arc;
        }
        const auto start = w == n ? 0 : center_of(g) - lambda;
        for (std::size_t x = 0; x < w; ++x) gain += units[wrap(start + static_cast<std::int64_t>(x))];
        for (std::size_t x = 0; x < n - w; ++x) arc.push_back(wrap(start + static_cast<std::int64_t>(w + x)));
        return arc;
    };

    if (budget > 0) {
        for (std::int64_t g = 0; g <= guesses; ++g) {
            std::int64_t gain = 0;
            const auto arc = arc_for(g, gain);
            const auto value = gain + cover_line(arc_units(arc), w, g == 0 ? budget : budget - 1, false).value;
            if (value > best) {
                best = value;
                best_guess = g;
            }
        }
    }

    Solution sol;
    sol.solver = SolverKind::Cycle;
    sol.influenced_count = static_cast<std::size_t>(fixed + std::max<std::int64_t>(best, 0));
    if (best > 0) {
        std::int64_t gain = 0;
        const auto arc = arc_for(best_guess, gain);
        const auto cover = cover_line(arc_units(arc), w, best_guess == 0 ? budget : budget - 1, true);
        sol.seeds = centers(arc, cover);
        if (best_guess > 0) sol.seeds.push_back(order[wrap(center_of(best_guess))]);
    }
    std::sort(sol.seeds.begin(), sol.seeds.end());
    sol.seeds.erase(std::unique(sol.seeds.begin(), sol.seeds.end()), sol.seeds.end());
    return sol;
}

} // namespace

Solution solve_cycle(const Instance& instance, std::optional<Node> pivot) {
    instance.validate();
    const auto inst = normalize_thresholds(instance);
    const std::size_t n = inst.size();
    cycle_order(inst.graph, 0);  // class check

    if (!pivot) {
        for (std::size_t v = 0; v < n && !pivot; ++v)
            if (inst.thresholds[v] >= 2) pivot = static_cast<Node>(v);
    } else if (*pivot < 0 || static_cast<std::size_t>(*pivot) >= n || inst.threshold(*pivot) < 2) {
        throw InputError("pivot must be a node with threshold at least 2");
    }
    if (!pivot) return solve_all_relay(inst, cycle_order(inst.graph, 0));

    const auto order = cycle_order(inst.graph, *pivot);
    const auto budget = static_cast<std::int64_t>(effective_budget(inst));
    const auto lambda = inst.lambda;
    Thresholds line;
    for (std::size_t p = 1; p < n; ++p) line.push_back(inst.threshold(order[p]));
    const std::vector<std::int64_t> ones(n - 1, 1);

    std::int64_t best = -1;
    std::vector<Node> best_seeds;
    const auto consider = [&](std::int64_t value, std::vector<Node> seeds) {
        if (value > best) {
            best = value;
            best_seeds = std::move(seeds);
        }
    };
    const auto map_line = [&](const std::vector<std::size_t>& targets) {
        std::vector<Node> seeds;
        for (auto x : targets) seeds.push_back(order[x + 1]);
        return seeds;
    };

    // pivot not targeted
    {
        const auto plan = solve_line(line, ones, lambda, budget);
        consider(plan.value, map_line(plan.targets));
    }
    // pivot not targeted but influenced: heavy pendants stand in for it on both ends
    if (inst.threshold(*pivot) == 2 && lambda >= 1) {
        const auto heavy = static_cast<std::int64_t>(n) + 2;
        Thresholds padded{1};
        padded.insert(padded.end(), line.begin(), line.end());
        padded.push_back(1);
        std::vector<std::int64_t> weights{heavy};
        weights.insert(weights.end(), ones.begin(), ones.end());
        weights.push_back(heavy);
        const auto plan = solve_line(padded, weights, lambda, budget);
        if (plan.value >= 2 * heavy) {
            std::vector<Node> seeds;
            for (auto x : plan.targets) seeds.push_back(order[std::clamp<std::size_t>(x, 1, n - 1)]);
            consider(plan.value - 2 * heavy + 1, seeds);
        }
    }
    // pivot targeted
    if (budget >= 1) {
        auto reduced = line;
        reduced.front() = std::max(reduced.front() - 1, 0);
        reduced.back() = std::max(reduced.back() - 1, 0);
        const auto plan = solve_line(reduced, ones, lambda, budget - 1);
        auto seeds = map_line(plan.targets);
        seeds.push_back(*pivot);
        consider(plan.value + 1, seeds);
    }

    Solution sol;
    sol.solver = SolverKind::Cycle;
    sol.influenced_count = static_cast<std::size_t>(best);
    sol.seeds = std::move(best_seeds);
    std::sort(sol.seeds.begin(), sol.seeds.end());
    sol.seeds.erase(std::unique(sol.seeds.begin(), sol.seeds.end()), sol.seeds.end());
    return sol;
}

} // namespace mis
