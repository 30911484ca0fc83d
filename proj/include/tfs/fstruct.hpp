#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfs/signature.hpp"

namespace tfs {

using StateId = std::uint32_t;

/// A finite attribute sequence.
using Path = std::vector<AttrId>;

/// A rooted connected deterministic finite machine with type outputs: the
/// machine form of a typed feature structure. States are named; indexes
/// follow declaration order and every traversal here is deterministic.
///
/// Immutable after construction; safe for concurrent shared reads.
class FeatureStructure {
public:
  struct Edge {
    StateId from;
    AttrId attr;
    StateId to;
  };

  /// Validates and builds. Requires a nonempty state set, in-range edge
  /// endpoints and declared types, one target per (state, attribute), and
  /// connectivity of every state from the root.
  static FeatureStructure make(std::vector<std::string> stateNames, StateId root,
                               const std::vector<Edge>& edges, std::vector<TypeId> types,
                               const Signature& sig);

  std::size_t stateCount() const { return stateNames_.size(); }
  const std::string& stateName(StateId q) const;
  const std::vector<std::string>& stateNames() const { return stateNames_; }
  std::optional<StateId> findState(std::string_view name) const;
  StateId root() const { return root_; }

  TypeId typeOf(StateId q) const;
  const std::vector<TypeId>& types() const { return types_; }

  std::optional<StateId> delta(StateId q, AttrId a) const;
  /// Outgoing edges of q, sorted by attribute id.
  const std::vector<std::pair<AttrId, StateId>>& edgesFrom(StateId q) const;
  const std::vector<std::vector<std::pair<AttrId, StateId>>>& adjacency() const { return delta_; }
  std::size_t edgeCount() const;

  /// The state reached from the root along path, or nullopt when some step
  /// is undefined. The empty path runs to the root.
  std::optional<StateId> run(std::span<const AttrId> path) const;

  /// States in breadth-first order from the root, edges taken in attribute
  /// order. Visits every state exactly once.
  std::vector<StateId> bfsOrder() const;

  /// True iff states (by name and order), root and transitions coincide.
  bool sameSkeleton(const FeatureStructure& other) const;

private:
  FeatureStructure() = default;

  std::vector<std::string> stateNames_;
  std::unordered_map<std::string, StateId> stateIndex_;
  StateId root_ = 0;
  std::vector<std::vector<std::pair<AttrId, StateId>>> delta_;
  std::vector<TypeId> types_;
};

/// Parses the feature structure file format:
///
///   root <state>            (exactly once)
///   node <state> <type>     (one per state)
///   edge <state> <attr> <state>
///
/// `#` comments and blank lines as in signature files. Lines may appear in
/// any order; states are declared by their node line.
FeatureStructure parseFeatureStructure(std::string_view text, const Signature& sig);

/// Serializes in the same grammar: root line, node lines in state order,
/// edge lines in (state, attribute) order.
std::string printFeatureStructure(const FeatureStructure& fs, const Signature& sig);

/// A feature structure whose outputs are species and satisfy well-typing:
/// wherever delta(q, a) is defined, app(speciesOf(q), a) is defined and
/// subsumes speciesOf(delta(q, a)).
class ResolvedFeatureStructure {
public:
  /// Validates rho (size, species-ness, well-typing) over the skeleton.
  static ResolvedFeatureStructure make(const FeatureStructure& skeleton, std::vector<TypeId> rho,
                                       const Signature& sig);

  /// The species-output machine itself; speciesOf appears as typeOf.
  const FeatureStructure& asFeatureStructure() const { return machine_; }

  std::size_t stateCount() const { return machine_.stateCount(); }
  StateId root() const { return machine_.root(); }
  TypeId speciesOf(StateId q) const { return machine_.typeOf(q); }

private:
  explicit ResolvedFeatureStructure(FeatureStructure m) : machine_(std::move(m)) {}
  FeatureStructure machine_;
};

/// True iff candidate shares states, root and transitions with f exactly,
/// candidate's outputs are species satisfying well-typing, and they
/// pointwise refine f's types. Mismatched skeletons yield false, not an
/// error; candidate's outputs are read as the proposed species assignment.
bool isResolvantOf(const FeatureStructure& candidate, const FeatureStructure& f,
                   const Signature& sig);
bool isResolvantOf(const ResolvedFeatureStructure& r, const FeatureStructure& f,
                   const Signature& sig);

}  // namespace tfs
