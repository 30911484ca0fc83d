#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tfs/fstruct.hpp"
#include "tfs/signature.hpp"

namespace tfs {

/// The resolvants of one skeleton: a shared automaton plus the species
/// output functions that make it well-typed, the disjunctive
/// representation a unifier can stay closed on.
struct ResolvantSet {
  FeatureStructure skeleton;
  /// Species assignments indexed by state, duplicate-free and sorted
  /// lexicographically (state declaration order, species declaration
  /// order).
  std::vector<std::vector<TypeId>> assignments;

  bool empty() const { return assignments.empty(); }
  std::size_t size() const { return assignments.size(); }
};

/// All |species|^stateCount total assignments of species to states, in
/// lexicographic order (position 0 most significant, species in
/// declaration order). Callers guard the size; stateCount must be nonzero.
std::vector<std::vector<TypeId>> gen(std::size_t stateCount, const Signature& sig);

/// Well-typing test over a transition table: every edge (q, a) -> q' has
/// app(rho[q], a) defined and subsuming rho[q'].
bool test1(const std::vector<std::vector<std::pair<AttrId, StateId>>>& delta,
           std::span<const TypeId> rho, const Signature& sig);

/// Pointwise refinement test: sub(theta[q], rho[q]) for every q.
bool test2(std::span<const TypeId> theta, std::span<const TypeId> rho, const Signature& sig);

inline constexpr std::uint64_t kDefaultCandidateBound = 10'000'000;

/// Reference enumeration: sweeps every candidate from gen and keeps those
/// passing test1 and test2. Throws Error when |species|^|states| exceeds
/// candidateBound.
ResolvantSet resNaive(const FeatureStructure& f, const Signature& sig,
                      std::uint64_t candidateBound = kDefaultCandidateBound);

/// Production path: per-state candidate domains from speciesAtLeast,
/// arc-consistency pruning over the transition table, then backtracking
/// enumeration. Agrees with resNaive exactly, set and order.
ResolvantSet resRefined(const FeatureStructure& f, const Signature& sig);

/// Satisfiability: true iff f has a resolvant. Short-circuits at the first
/// one found.
bool sat(const FeatureStructure& f, const Signature& sig);

/// The idx-th resolvant as a validated structure.
ResolvedFeatureStructure resolvantAt(const ResolvantSet& rs, std::size_t idx,
                                     const Signature& sig);

}  // namespace tfs
