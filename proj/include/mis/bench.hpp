#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mis/solution.hpp"

namespace mis {

enum class BenchSuite { PathLarge, TreeLarge, CompleteLarge };

std::string_view to_string(BenchSuite suite);
BenchSuite parse_bench_suite(std::string_view name);

struct BenchPoint {
    std::size_t n = 0;
    std::size_t value = 0;
    double ms = 0.0;  ///< fastest of the repeats
};

struct BenchResult {
    BenchSuite suite = BenchSuite::PathLarge;
    SolverKind solver = SolverKind::Path;
    std::int64_t lambda = 0;
    std::int64_t beta = 0;
    std::vector<BenchPoint> points;  ///< sizes double from one point to the next

    /// Time ratio between consecutive sizes.
    std::vector<double> ratios() const;
    /// Least-squares slope of log(time) against log(n).
    double exponent() const;
};

/// Sizes solved by a suite, smallest first.
std::vector<std::size_t> bench_sizes(BenchSuite suite);

/// Generates each instance once and times the class solver `repeats` times.
BenchResult run_bench(BenchSuite suite, int repeats = 3, std::uint64_t rng_seed = 1);

} // namespace mis
