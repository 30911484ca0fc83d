#include "tfs/morph.hpp"

#include <deque>
#include <map>
#include <set>
#include <utility>

#include "tfs/interp.hpp"

namespace tfs {

MorphAutomaton MorphAutomaton::make(std::vector<std::string> nodeNames, StateId root,
                                    const std::vector<Edge>& edges, std::vector<TypeId> species,
                                    const Signature& sig) {
  std::vector<FeatureStructure::Edge> fsEdges;
  fsEdges.reserve(edges.size());
  for (const Edge& e : edges) fsEdges.push_back({e.from, e.attr, e.to});
  FeatureStructure machine =
      FeatureStructure::make(std::move(nodeNames), root, fsEdges, std::move(species), sig);
  for (StateId q = 0; q < machine.stateCount(); ++q) {
    if (!sig.isSpecies(machine.typeOf(q))) {
      throw Error("node '" + machine.stateName(q) + "' carries '" +
                  sig.typeName(machine.typeOf(q)) + "', which is not a species");
    }
  }
  return MorphAutomaton(std::move(machine));
}

bool checkMorph(const MorphAutomaton& m, const Signature& sig) {
  for (StateId q = 0; q < m.nodeCount(); ++q) {
    for (AttrId a = 0; a < sig.attrCount(); ++a) {
      auto value = sig.app(m.speciesOf(q), a);
      auto target = m.delta(q, a);
      if (value.has_value() != target.has_value()) return false;
      if (value && !sig.sub(*value, m.speciesOf(*target))) return false;
    }
  }
  return true;
}

MorphAutomaton witness(const ResolvedFeatureStructure& r, const Signature& sig) {
  const FeatureStructure& base = r.asFeatureStructure();
  std::vector<std::string> names = base.stateNames();
  std::vector<TypeId> species = base.types();
  std::vector<std::map<AttrId, StateId>> delta(base.stateCount());
  for (StateId q = 0; q < base.stateCount(); ++q) {
    for (const auto& [a, to] : base.edgesFrom(q)) delta[q][a] = to;
  }

  std::set<std::string> used(names.begin(), names.end());
  std::map<TypeId, StateId> canonical;
  auto canonicalNode = [&](TypeId s) {
    auto it = canonical.find(s);
    if (it != canonical.end()) return it->second;
    std::string name = "_" + sig.typeName(s);
    while (used.count(name)) name = "_" + name;
    used.insert(name);
    StateId id = static_cast<StateId>(names.size());
    names.push_back(name);
    species.push_back(s);
    delta.emplace_back();
    canonical.emplace(s, id);
    return id;
  };

  // Fill every appropriateness gap with an edge to the canonical node of
  // the first species refining the appropriate value; canonical nodes are
  // closed under the same rule as they get appended.
  for (StateId q = 0; q < names.size(); ++q) {
    for (AttrId a = 0; a < sig.attrCount(); ++a) {
      auto value = sig.app(species[q], a);
      if (!value || delta[q].count(a)) continue;
      const std::vector<TypeId>& candidates = sig.speciesAtLeast(*value);
      if (candidates.empty()) throw Error("signature is not rational");
      StateId target = canonicalNode(candidates.front());  // may grow delta
      delta[q][a] = target;
    }
  }

  std::vector<MorphAutomaton::Edge> edges;
  for (StateId q = 0; q < names.size(); ++q) {
    for (const auto& [a, to] : delta[q]) edges.push_back({q, a, to});
  }
  return MorphAutomaton::make(std::move(names), base.root(), edges, std::move(species), sig);
}

bool approximates(const FeatureStructure& f, const MorphAutomaton& m, const Signature& sig) {
  constexpr StateId kUnmapped = 0xffffffffu;
  std::vector<StateId> image(f.stateCount(), kUnmapped);
  image[f.root()] = m.root();
  if (!sig.sub(f.typeOf(f.root()), m.speciesOf(m.root()))) return false;
  std::deque<StateId> queue{f.root()};
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const auto& [a, to] : f.edgesFrom(q)) {
      auto target = m.delta(image[q], a);
      if (!target) return false;
      if (image[to] == kUnmapped) {
        image[to] = *target;
        if (!sig.sub(f.typeOf(to), m.speciesOf(*target))) return false;
        queue.push_back(to);
      } else if (image[to] != *target) {
        return false;
      }
    }
  }
  return true;
}

FiniteInterpretation morphToInterpretation(const MorphAutomaton& m, const Signature& sig) {
  if (!checkMorph(m, sig)) {
    throw Error("machine is not totally well-typed; it does not represent a morph");
  }
  std::vector<FiniteInterpretation::Value> values;
  for (StateId q = 0; q < m.nodeCount(); ++q) {
    for (const auto& [a, to] : m.edgesFrom(q)) values.push_back({q, a, to});
  }
  std::vector<TypeId> species;
  species.reserve(m.nodeCount());
  for (StateId q = 0; q < m.nodeCount(); ++q) species.push_back(m.speciesOf(q));
  return FiniteInterpretation::make(m.nodeNames(), std::move(species), values, sig);
}

MorphAutomaton parseMorphAutomaton(std::string_view text, const Signature& sig) {
  FeatureStructure fs = parseFeatureStructure(text, sig);
  std::vector<MorphAutomaton::Edge> edges;
  for (StateId q = 0; q < fs.stateCount(); ++q) {
    for (const auto& [a, to] : fs.edgesFrom(q)) edges.push_back({q, a, to});
  }
  return MorphAutomaton::make(fs.stateNames(), fs.root(), edges, fs.types(), sig);
}

std::string printMorphAutomaton(const MorphAutomaton& m, const Signature& sig) {
  return printFeatureStructure(m.asFeatureStructure(), sig);
}

}  // namespace tfs
