#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tfs/fstruct.hpp"
#include "tfs/resolve.hpp"
#include "tfs/signature.hpp"

namespace tfs {

/// A merged skeleton with per-state requirement sets. Keeping the collected
/// types as a set sidesteps type joins, which a subsumption partial order
/// need not provide.
struct ConstrainedSkeleton {
  std::vector<std::string> stateNames;
  StateId root = 0;
  /// Per state, sorted by attribute id.
  std::vector<std::vector<std::pair<AttrId, StateId>>> delta;
  /// Per state: nonempty, sorted, duplicate-free type requirements.
  std::vector<std::vector<TypeId>> constraints;

  std::size_t stateCount() const { return stateNames.size(); }
};

/// Quotient of the disjoint union of a and b under the least congruence
/// identifying the roots and closing under shared attribute edges. Each
/// merged state collects the types of its members. The merge itself cannot
/// fail; an unsatisfiable combination shows up as an empty resolvant set
/// downstream.
ConstrainedSkeleton mergeSkeletons(const FeatureStructure& a, const FeatureStructure& b);

/// All species assignments passing well-typing (test1) and refining every
/// constraint of every state, in lexicographic order. The returned
/// skeleton carries each state's first constraint as its type.
ResolvantSet resolveConstrained(const ConstrainedSkeleton& cs, const Signature& sig);

/// Unification on the disjunctive representation: merges the skeletons,
/// collects both sides' types as constraints, and re-resolves. The result
/// is again a valid ResolvantSet, so the unifier is closed on the
/// representation. Both inputs must be over sig; assignments are
/// revalidated and a mismatch throws Error.
ResolvantSet unifyRepresentations(const ResolvantSet& a, const ResolvantSet& b,
                                  const Signature& sig);

}  // namespace tfs
