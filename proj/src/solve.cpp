#include "mis/solve.hpp"

#include <string>

#include "mis/complete_solver.hpp"
#include "mis/cycle_solver.hpp"
#include "mis/errors.hpp"
#include "mis/oracle.hpp"
#include "mis/path_solver.hpp"
#include "mis/tree_solver.hpp"

namespace mis {

SolverKind auto_solver(const Instance& instance) {
    switch (const auto cls = classify(instance.graph)) {
    case GraphClass::Path: return SolverKind::Path;
    case GraphClass::Cycle: return SolverKind::Cycle;
    case GraphClass::Complete: return SolverKind::Complete;
    case GraphClass::Tree: return SolverKind::Tree;
    case GraphClass::Unsupported:
        throw ClassMismatchError("no exact solver for graph class " + std::string(to_string(cls)));
    }
    throw ClassMismatchError("unknown graph class");
}

Solution solve(const Instance& instance, std::optional<SolverKind> kind) {
    instance.validate();
    switch (kind ? *kind : auto_solver(instance)) {
    case SolverKind::Tree: return solve_tree(instance);
    case SolverKind::Path: return solve_path(instance);
    case SolverKind::Cycle: return solve_cycle(instance);
    case SolverKind::Complete: return solve_complete(instance);
    case SolverKind::BruteForce: return solve_bruteforce(instance);
    }
    throw InputError("unknown solver");
}

} // namespace mis
