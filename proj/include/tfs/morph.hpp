#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfs/fstruct.hpp"
#include "tfs/signature.hpp"

namespace tfs {

class FiniteInterpretation;

/// A connected species-output machine: the finite representation of a
/// morph. Construction validates structure (connectivity, species
/// outputs); total well-typing is decided by checkMorph so that ill-typed
/// machines can be represented and diagnosed rather than rejected.
class MorphAutomaton {
public:
  struct Edge {
    StateId from;
    AttrId attr;
    StateId to;
  };

  static MorphAutomaton make(std::vector<std::string> nodeNames, StateId root,
                             const std::vector<Edge>& edges, std::vector<TypeId> species,
                             const Signature& sig);

  std::size_t nodeCount() const { return machine_.stateCount(); }
  const std::string& nodeName(StateId n) const { return machine_.stateName(n); }
  const std::vector<std::string>& nodeNames() const { return machine_.stateNames(); }
  std::optional<StateId> findNode(std::string_view name) const { return machine_.findState(name); }
  StateId root() const { return machine_.root(); }
  TypeId speciesOf(StateId n) const { return machine_.typeOf(n); }
  std::optional<StateId> delta(StateId n, AttrId a) const { return machine_.delta(n, a); }
  const std::vector<std::pair<AttrId, StateId>>& edgesFrom(StateId n) const {
    return machine_.edgesFrom(n);
  }
  const std::vector<std::vector<std::pair<AttrId, StateId>>>& adjacency() const {
    return machine_.adjacency();
  }

  /// The same machine read as a feature structure (species are types).
  const FeatureStructure& asFeatureStructure() const { return machine_; }

private:
  explicit MorphAutomaton(FeatureStructure m) : machine_(std::move(m)) {}
  FeatureStructure machine_;
};

/// Total well-typing at every node: an a-edge leaves n exactly when
/// app(speciesOf(n), a) is defined, and then the value subsumes the
/// target's species. The path-level morph conditions hold automatically
/// for the path set induced by a connected deterministic machine.
bool checkMorph(const MorphAutomaton& m, const Signature& sig);

/// Builds a totally well-typed machine that r approximates: r's machine
/// extended with one shared canonical node per needed species, each
/// appropriateness gap filled with an edge to the canonical node of the
/// first species (declaration order) refining the appropriate value.
/// Rationality guarantees the choice exists; at most |species| nodes are
/// added.
MorphAutomaton witness(const ResolvedFeatureStructure& r, const Signature& sig);

/// True iff the unique root-preserving machine homomorphism from f into m
/// exists: transitions are simulated and every f type subsumes the species
/// of its image. Decides abstract subsumption of the morph by f.
bool approximates(const FeatureStructure& f, const MorphAutomaton& m, const Signature& sig);

/// Reads a totally well-typed machine as a finite interpretation: nodes
/// become the universe, species outputs the species assignment,
/// transitions the attribute functions. Requires checkMorph(m).
FiniteInterpretation morphToInterpretation(const MorphAutomaton& m, const Signature& sig);

/// Morph automata serialize in the feature structure grammar with species
/// on the node lines.
MorphAutomaton parseMorphAutomaton(std::string_view text, const Signature& sig);
std::string printMorphAutomaton(const MorphAutomaton& m, const Signature& sig);

}  // namespace tfs
