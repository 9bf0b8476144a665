#include "mis/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mis/complete_solver.hpp"
#include "mis/errors.hpp"
#include "mis/generate.hpp"
#include "mis/path_solver.hpp"
#include "mis/tree_solver.hpp"

namespace mis {

std::string_view to_string(BenchSuite suite) {
    switch (suite) {
    case BenchSuite::PathLarge: return "path-large";
    case BenchSuite::TreeLarge: return "tree-large";
    case BenchSuite::CompleteLarge: return "complete-large";
    }
    return "unknown";
}

BenchSuite parse_bench_suite(std::string_view name) {
    for (auto s : {BenchSuite::PathLarge, BenchSuite::TreeLarge, BenchSuite::CompleteLarge})
        if (to_string(s) == name) return s;
    throw InputError("unknown bench suite '" + std::string(name) + "'");
}

std::vector<double> BenchResult::ratios() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < points.size(); ++i) out.push_back(points[i].ms / points[i - 1].ms);
    return out;
}

double BenchResult::exponent() const {
    if (points.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : points) {
        const double x = std::log(static_cast<double>(p.n));
        const double y = std::log(std::max(p.ms, 1e-6));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto k = static_cast<double>(points.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<std::size_t> bench_sizes(BenchSuite suite) {
    switch (suite) {
    case BenchSuite::PathLarge: return {25000, 50000, 100000};
    case BenchSuite::TreeLarge: return {5000, 10000, 20000};
    case BenchSuite::CompleteLarge: return {250000, 500000, 1000000};
    }
    return {};
}

namespace {

template <class F>
double fastest_ms(int repeats, F&& run) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(repeats, 1); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        run();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

BenchResult run_bench(BenchSuite suite, int repeats, std::uint64_t rng_seed) {
    BenchResult result;
    result.suite = suite;
    for (auto n : bench_sizes(suite)) {
        BenchPoint point;
        point.n = n;
        switch (suite) {
        case BenchSuite::PathLarge: {
            // all-ones thresholds keep every run-length range at its widest
            auto inst = generate(GraphClass::Path, n, ConstantThresholds{1}, rng_seed);
            result.solver = SolverKind::Path;
            inst.lambda = result.lambda = 20;
            inst.beta = result.beta = 20;
            point.ms = fastest_ms(repeats, [&] { point.value = solve_path(inst).influenced_count; });
            break;
        }
        case BenchSuite::TreeLarge: {
            auto inst = generate(GraphClass::Tree, n, UniformThresholds{}, rng_seed);
            result.solver = SolverKind::Tree;
            inst.lambda = result.lambda = 5;
            inst.beta = result.beta = 5;
            point.ms = fastest_ms(repeats, [&] { point.value = solve_tree(inst).influenced_count; });
            break;
        }
        case BenchSuite::CompleteLarge: {
            // the clique is implicit; its adjacency would not fit in memory
            std::mt19937_64 rng(rng_seed);
            std::uniform_int_distribution<std::int32_t> dist(0, static_cast<std::int32_t>(n));
            Thresholds t(n);
            for (auto& x : t) x = dist(rng);
            result.solver = SolverKind::Complete;
            result.lambda = 1000000;
            result.beta = 1000;
            point.ms = fastest_ms(repeats, [&] {
                point.value = solve_complete(t, result.lambda, result.beta).influenced_count;
            });
            break;
        }
        }
        result.points.push_back(point);
    }
    return result;
}

} // namespace mis
