#pragma once

#include <cstddef>

#include "mis/graph.hpp"
#include "mis/solution.hpp"

namespace mis {

inline constexpr std::size_t kDefaultOracleSizeLimit = 20;

enum class OracleEnumeration {
    ExactBudget,  ///< only sets of size min(beta, n); sufficient by seed monotonicity
    UpToBudget,   ///< every set of size 0..min(beta, n)
};

/// Exhaustive search over seed sets in lexicographic combination order.
/// Ties go to the lexicographically smallest sorted seed list among the enumerated sets.
/// Throws OracleSizeError when n exceeds size_limit.
Solution solve_bruteforce(const Instance& instance, std::size_t size_limit = kDefaultOracleSizeLimit,
                          OracleEnumeration mode = OracleEnumeration::ExactBudget);

} // namespace mis
