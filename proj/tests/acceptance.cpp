// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mis/bench.hpp"
#include "mis/complete_solver.hpp"
#include "mis/cycle_solver.hpp"
#include "mis/diffusion.hpp"
#include "mis/oracle.hpp"
#include "mis/path_solver.hpp"
#include "mis/solve.hpp"
#include "mis/tree_solver.hpp"
#include "test_support.hpp"

using namespace mis;
using namespace mis::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what;
    }
    bool ok() const { return failed == 0; }
};

// Every solver output is also checked by simulation (criterion 6).
Tally consistency;

void check_consistent(const Instance& inst, const Solution& sol, const char* where) {
    const bool ok = sol.seeds.size() <= effective_budget(inst) && influenced_count(inst, sol.seeds) == sol.influenced_count;
    consistency.expect(ok, std::string(where) + " n=" + std::to_string(inst.size()));
}

std::string describe(const Instance& inst) {
    std::string s = "t=[";
    for (std::size_t v = 0; v < inst.size(); ++v) s += (v ? "," : "") + std::to_string(inst.thresholds[v]);
    return s + "] lambda=" + std::to_string(inst.lambda) + " beta=" + std::to_string(inst.beta);
}

void compare_with_oracle(Tally& tally, const Instance& inst, const Solution& sol, const char* where) {
    const auto oracle = solve_bruteforce(inst);
    tally.expect(sol.influenced_count == oracle.influenced_count,
                 std::string(where) + " " + describe(inst) + " got " + std::to_string(sol.influenced_count) +
                     " want " + std::to_string(oracle.influenced_count));
    check_consistent(inst, sol, where);
}

Instance random_thresholds(std::mt19937_64& rng, Graph graph, std::int32_t max_t, std::int64_t max_param) {
    Instance inst;
    inst.graph = std::move(graph);
    for (std::size_t v = 0; v < inst.graph.node_count(); ++v)
        inst.thresholds.push_back(std::uniform_int_distribution<std::int32_t>(0, max_t)(rng));
    inst.lambda = std::uniform_int_distribution<std::int64_t>(0, max_param)(rng);
    inst.beta = std::uniform_int_distribution<std::int64_t>(0, max_param)(rng);
    return inst;
}

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string summary(const Tally& t) {
    std::string s = std::to_string(t.checked - t.failed) + "/" + std::to_string(t.checked) + " agree";
    if (!t.ok()) s += "; first failure: " + t.first_failure;
    return s;
}

void criterion_trees() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    Tally tally;
    for (int i = 0; i < 1000; ++i) {
        const auto inst = random_instance(rng, GraphClass::Tree, 1, 10, 4, 4);
        compare_with_oracle(tally, inst, solve_tree(inst), "tree");
    }
    const auto secs = seconds_since(t0);
    report(1, "tree solver equals brute force on 1000 random trees", tally.ok() && secs < 120.0,
           summary(tally) + ", " + std::to_string(secs) + " s (limit 120 s)");
}

void criterion_paths() {
    std::mt19937_64 rng(102);
    Tally tally;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t patterns = 1;
        for (std::size_t i = 0; i < n; ++i) patterns *= 4;
        Thresholds t(n);
        for (std::size_t code = 0; code < patterns; ++code) {
            auto c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 4) t[i] = static_cast<std::int32_t>(c % 4);
            for (std::int64_t lambda = 0; lambda <= 3; ++lambda)
                for (std::int64_t beta = 0; beta <= 3; ++beta) {
                    const auto inst = path_instance(t, lambda, beta);
                    compare_with_oracle(tally, inst, solve_path(inst), "path");
                }
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const auto inst = random_thresholds(rng, make_path(n), 3, 4);
        compare_with_oracle(tally, inst, solve_path(inst), "path");
    }
    report(2, "path solver equals brute force (exhaustive n <= 6, 1000 random n <= 12)", tally.ok(), summary(tally));
}

void criterion_cycles() {
    std::mt19937_64 rng(103);
    Tally tally;
    for (int i = 0; i < 1000; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
        const auto inst = random_thresholds(rng, make_cycle(n), 3, 4);
        compare_with_oracle(tally, inst, solve_cycle(inst), "cycle");
    }
    report(3, "cycle solver equals brute force on 1000 random cycles", tally.ok(), summary(tally));
}

void criterion_complete() {
    std::mt19937_64 rng(104);
    Tally tally;
    for (int i = 0; i < 500; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const auto inst = random_thresholds(rng, make_complete(n), static_cast<std::int32_t>(n), 4);
        compare_with_oracle(tally, inst, solve_complete(inst), "complete");
    }
    report(4, "complete-graph solver equals brute force on 500 instances", tally.ok(), summary(tally));
}

void criterion_cross() {
    std::mt19937_64 rng(105);
    Tally tally;
    for (int i = 0; i < 500; ++i) {
        const auto inst = random_instance(rng, GraphClass::Path, 1, 200, 8, 8);
        const auto path = solve_path(inst);
        const auto tree = solve_tree(inst);
        tally.expect(path.influenced_count == tree.influenced_count,
                     "n=" + std::to_string(inst.size()) + " path " + std::to_string(path.influenced_count) + " tree " +
                         std::to_string(tree.influenced_count));
        check_consistent(inst, path, "cross/path");
        check_consistent(inst, tree, "cross/tree");
    }
    report(5, "path DP and tree DP agree on 500 random paths", tally.ok(), summary(tally));
}

void criterion_consistency() {
    report(6, "every reported seed set reproduces its count within lambda rounds and budget", consistency.ok(),
           summary(consistency));
}

SolverKind class_solver(GraphClass cls) {
    switch (cls) {
    case GraphClass::Path: return SolverKind::Path;
    case GraphClass::Cycle: return SolverKind::Cycle;
    case GraphClass::Complete: return SolverKind::Complete;
    default: return SolverKind::Tree;
    }
}

void criterion_monotone() {
    std::mt19937_64 rng(107);
    Tally values;
    const GraphClass classes[] = {GraphClass::Tree, GraphClass::Path, GraphClass::Cycle, GraphClass::Complete};
    for (auto cls : classes) {
        const auto kind = class_solver(cls);
        for (int i = 0; i < 200; ++i) {
            const auto base = random_instance(rng, cls, cls == GraphClass::Cycle ? 3 : 1, 40, 4, 4);
            std::size_t prev = 0;
            for (std::int64_t beta = 0; beta <= 4; ++beta) {
                const auto inst = with_params(base, base.lambda, beta);
                const auto sol = solve(inst, kind);
                check_consistent(inst, sol, "monotone");
                values.expect(beta == 0 || sol.influenced_count >= prev,
                              std::string(to_string(cls)) + " beta " + std::to_string(beta));
                prev = sol.influenced_count;
            }
            for (std::int64_t lambda = 0; lambda <= 4; ++lambda) {
                const auto inst = with_params(base, lambda, base.beta);
                const auto sol = solve(inst, kind);
                check_consistent(inst, sol, "monotone");
                values.expect(lambda == 0 || sol.influenced_count >= prev,
                              std::string(to_string(cls)) + " lambda " + std::to_string(lambda));
                prev = sol.influenced_count;
            }
        }
    }

    Tally tables;
    for (int i = 0; i < 60; ++i) {
        const auto inst = normalize_thresholds(random_instance(rng, GraphClass::Tree, 1, 30, 5, 5));
        const TreeDp dp(inst);
        for (std::size_t v = 0; v < inst.size(); ++v) {
            const auto& table = dp.table(static_cast<Node>(v));
            for (std::size_t s = 0; s < table.round_slots(); ++s) {
                for (std::int32_t b = 0; b <= table.budget_cap(); ++b) {
                    const auto full = table.at_slot(b, s, ThresholdSlot::Full);
                    const auto residual = table.at_slot(b, s, ThresholdSlot::Residual);
                    tables.expect(!(residual < full), "residual below full at node " + std::to_string(v));
                    if (b > 0)
                        tables.expect(!(full < table.at_slot(b - 1, s, ThresholdSlot::Full)),
                                      "budget decrease at node " + std::to_string(v));
                }
            }
        }
    }
    report(7, "values grow with beta and lambda; tree tables grow with b and shrink with t",
           values.ok() && tables.ok(), "values " + summary(values) + "; tables " + summary(tables));
}

void criterion_scaling() {
    const auto path = run_bench(BenchSuite::PathLarge, 5);
    const auto complete = run_bench(BenchSuite::CompleteLarge, 3);
    const auto tree = run_bench(BenchSuite::TreeLarge, 1);

    bool ratio_ok = true;
    std::string ratios;
    for (auto r : path.ratios()) {
        ratio_ok = ratio_ok && r <= 2.6;
        ratios += (ratios.empty() ? "" : ", ") + std::to_string(r);
    }
    const double path_s = path.points.back().ms / 1000.0;
    const double complete_s = complete.points.back().ms / 1000.0;
    const double tree_s = tree.points.back().ms / 1000.0;
    const bool pass = ratio_ok && path_s < 10.0 && complete_s < 2.0 && tree_s < 60.0;
    report(8, "scaling: path n=1e5 under 10 s with doubling ratio <= 2.6, clique n=1e6 under 2 s, tree n=2e4 under 60 s",
           pass,
           "path " + std::to_string(path_s) + " s (ratios " + ratios + "), clique " + std::to_string(complete_s) +
               " s, tree " + std::to_string(tree_s) + " s");
}

} // namespace

int main() {
    criterion_trees();
    criterion_paths();
    criterion_cycles();
    criterion_complete();
    criterion_cross();
    criterion_monotone();
    criterion_consistency();
    criterion_scaling();
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
