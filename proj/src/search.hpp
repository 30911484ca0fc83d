#pragma once

#include <utility>
#include <vector>

#include "tfs/fstruct.hpp"
#include "tfs/signature.hpp"

namespace tfs::detail {

/// Well-typing search over a fixed transition table: find the species
/// assignments rho with app(rho[q], a) defined and subsuming rho[q'] for
/// every edge (q, a) -> q'. Domains restrict each state's candidates and
/// carry any refinement constraints (membership in speciesAtLeast sets).
struct WellTypingProblem {
  const std::vector<std::vector<std::pair<AttrId, StateId>>>* delta = nullptr;
  StateId root = 0;
  /// Per state, ascending by type id. Consumed by the solver.
  std::vector<std::vector<TypeId>> domains;
};

/// Arc-consistency pruning followed by backtracking over the states in
/// breadth-first order from the root. Solutions come back sorted
/// lexicographically by state index; with firstOnly at most one is
/// returned (not necessarily the lexicographic least).
std::vector<std::vector<TypeId>> solveWellTyping(WellTypingProblem problem, const Signature& sig,
                                                 bool firstOnly);

}  // namespace tfs::detail
