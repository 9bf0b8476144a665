#include <random>

#include "doctest.h"
#include "mis/cycle_solver.hpp"
#include "mis/diffusion.hpp"
#include "mis/errors.hpp"
#include "test_support.hpp"

using namespace mis;
using namespace mis::testing;

namespace {

void check_against_oracle(const Instance& inst) {
    const auto sol = solve_cycle(inst);
    std::string t;
    for (auto x : inst.thresholds) t += std::to_string(x) + ' ';
    INFO("t=" << t << "lambda=" << inst.lambda << " beta=" << inst.beta);
    CHECK(sol.influenced_count == naive_optimum(inst));
    CHECK(sol.seeds.size() <= effective_budget(inst));
    CHECK(naive_count(inst, sol.seeds) == sol.influenced_count);
    CHECK(sol.solver == SolverKind::Cycle);
}

} // namespace

TEST_CASE("cycle order walks towards the smaller neighbor") {
    CHECK(cycle_order(make_cycle(5), 0) == std::vector<Node>{0, 1, 2, 3, 4});
    CHECK(cycle_order(make_cycle(5), 3) == std::vector<Node>{3, 2, 1, 0, 4});
    CHECK_THROWS_AS(cycle_order(make_path(4), 0), ClassMismatchError);
}

TEST_CASE("cycle examples") {
    const auto c5 = solve_cycle(cycle_instance({2, 1, 1, 1, 1}, 2, 1));
    CHECK(c5.influenced_count == 5);
    CHECK(c5.seeds == std::vector<Node>{0});

    const auto c4 = cycle_instance({2, 2, 2, 2}, 5, 2);
    const auto sol = solve_cycle(c4);
    CHECK(sol.influenced_count == 4);
    CHECK(naive_count(c4, sol.seeds) == 4);

    CHECK(solve_cycle(cycle_instance({1, 2, 3, 1}, 3, 0)).influenced_count == 0);
    CHECK(solve_cycle(cycle_instance({0, 2, 3, 1}, 3, 0)).influenced_count == naive_optimum(cycle_instance({0, 2, 3, 1}, 3, 0)));
    CHECK_THROWS_AS(solve_cycle(path_instance({1, 1, 1}, 1, 1)), ClassMismatchError);
    CHECK_THROWS_AS(solve_cycle(cycle_instance({1, 1, 2}, 1, 1), Node{0}), InputError);
}

TEST_CASE("all thresholds at most one") {
    CHECK(solve_cycle(cycle_instance({1, 1, 1, 1, 1, 1, 1}, 1, 2)).influenced_count == 6);
    CHECK(solve_cycle(cycle_instance({1, 1, 1, 1, 1, 1, 1}, 3, 1)).influenced_count == 7);
    CHECK(solve_cycle(cycle_instance({0, 1, 1, 1, 1, 1, 1, 1}, 1, 1)).influenced_count == 4);
}

TEST_CASE("exhaustive thresholds on short cycles") {
    for (std::size_t n = 3; n <= 6; ++n) {
        Thresholds t(n, 0);
        std::size_t patterns = 1;
        for (std::size_t i = 0; i < n; ++i) patterns *= 4;
        for (std::size_t code = 0; code < patterns; ++code) {
            auto c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 4) t[i] = static_cast<std::int32_t>(c % 4);
            for (std::int64_t lambda = 0; lambda <= 4; ++lambda)
                for (std::int64_t beta = 0; beta <= 4; ++beta) check_against_oracle(cycle_instance(t, lambda, beta));
        }
    }
}

TEST_CASE("random cycles up to twelve nodes") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) check_against_oracle(random_instance(rng, GraphClass::Cycle, 7, 12, 5, 4));
}

TEST_CASE("random all-relay cycles") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
        Thresholds t(n);
        for (auto& x : t) x = std::bernoulli_distribution(0.2)(rng) ? 0 : 1;
        const auto lambda = std::uniform_int_distribution<std::int64_t>(0, 5)(rng);
        const auto beta = std::uniform_int_distribution<std::int64_t>(0, 4)(rng);
        check_against_oracle(cycle_instance(t, lambda, beta));
    }
}

TEST_CASE("pivot choice does not change the value") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = random_instance(rng, GraphClass::Cycle, 3, 30, 6, 5);
        const auto base = solve_cycle(inst);
        const auto norm = normalize_thresholds(inst);
        for (std::size_t v = 0; v < inst.size(); ++v) {
            if (norm.thresholds[v] < 2) continue;
            const auto other = solve_cycle(inst, static_cast<Node>(v));
            CHECK(other.influenced_count == base.influenced_count);
            CHECK(influenced_count(inst, other.seeds) == other.influenced_count);
        }
    }
}
