#include "mis/solution.hpp"

#include <string>

#include "mis/errors.hpp"

namespace mis {

std::string_view to_string(SolverKind kind) {
    switch (kind) {
    case SolverKind::Tree: return "tree";
    case SolverKind::Path: return "path";
    case SolverKind::Cycle: return "cycle";
    case SolverKind::Complete: return "complete";
    case SolverKind::BruteForce: return "bruteforce";
    }
    return "bruteforce";
}

SolverKind parse_solver_kind(std::string_view name) {
    for (auto k : {SolverKind::Tree, SolverKind::Path, SolverKind::Cycle, SolverKind::Complete,
                   SolverKind::BruteForce})
        if (to_string(k) == name) return k;
    throw InputError("unknown solver '" + std::string(name) + "'");
}

} // namespace mis
