#include <random>

#include "doctest.h"
#include "mis/complete_solver.hpp"
#include "mis/diffusion.hpp"
#include "mis/errors.hpp"
#include "test_support.hpp"

using namespace mis;
using namespace mis::testing;

TEST_CASE("complete graph examples") {
    const auto a = solve_complete(complete_instance({0, 1, 2, 3}, 2, 1));
    CHECK(a.influenced_count == 4);
    CHECK(a.seeds == std::vector<Node>{3});
    CHECK(a.solver == SolverKind::Complete);

    CHECK(solve_complete(complete_instance({1, 1, 1}, 1, 1)).influenced_count == 3);
    CHECK(solve_complete(complete_instance({2}, 3, 0)).influenced_count == 0);
    CHECK(solve_complete(complete_instance({0}, 3, 0)).influenced_count == 1);
    CHECK(solve_complete(complete_instance({0, 5}, 0, 0)).influenced_count == 0);
    CHECK_THROWS_AS(solve_complete(path_instance({1, 1, 1}, 1, 1)), ClassMismatchError);
}

TEST_CASE("ties go to the smaller id") {
    const auto sol = solve_complete(complete_instance({2, 3, 3, 1, 3}, 1, 2));
    CHECK(sol.seeds == std::vector<Node>{1, 2});
}

TEST_CASE("complete solver matches brute force") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = random_instance(rng, GraphClass::Complete, 1, 10, 5, 5);
        const auto sol = solve_complete(inst);
        CHECK(sol.influenced_count == naive_optimum(inst));
        CHECK(naive_count(inst, sol.seeds) == sol.influenced_count);
        CHECK(sol.seeds.size() == effective_budget(inst));
    }
}

TEST_CASE("permuting equal thresholds leaves the value unchanged") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto inst = random_instance(rng, GraphClass::Complete, 2, 40, 6, 6);
        const auto base = solve_complete(inst).influenced_count;
        std::shuffle(inst.thresholds.begin(), inst.thresholds.end(), rng);
        CHECK(solve_complete(inst).influenced_count == base);
    }
}

TEST_CASE("huge horizon stops at the fixpoint") {
    Thresholds t(1000);
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = static_cast<std::int32_t>(v % 7);
    const auto inst = complete_instance(t, std::int64_t{1} << 40, 3);
    const auto sol = solve_complete(inst);
    CHECK(sol.influenced_count == influenced_count(inst, sol.seeds));
}
