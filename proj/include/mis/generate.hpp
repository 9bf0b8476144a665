#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mis/graph.hpp"

namespace mis {

struct UniformThresholds {};         ///< t(v) uniform in [0, d(v)+1]
struct ConstantThresholds { std::int32_t value = 1; };
struct CustomThresholds { Thresholds values; };

using ThresholdPolicy = std::variant<UniformThresholds, ConstantThresholds, CustomThresholds>;

/// Parses "uniform", "const:K" or "custom:t0,t1,...".
ThresholdPolicy parse_threshold_policy(std::string_view text);

/// Builds a random instance of the given class with lambda = beta = 0.
/// Trees are uniform labeled trees decoded from a random Prüfer sequence;
/// paths, cycles and complete graphs use the canonical labeling.
/// Thresholds are normalized. Deterministic in rng_seed.
/// Throws InputError for n < 1, n < 3 on cycles, or a custom policy of wrong length.
Instance generate(GraphClass graph_class, std::size_t n, const ThresholdPolicy& policy,
                  std::uint64_t rng_seed);

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph tree_from_pruefer(std::size_t n, const std::vector<Node>& sequence);

} // namespace mis
