#include "tfs/fstruct.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "textio.hpp"

namespace tfs {

FeatureStructure FeatureStructure::make(std::vector<std::string> stateNames, StateId root,
                                        const std::vector<Edge>& edges, std::vector<TypeId> types,
                                        const Signature& sig) {
  if (stateNames.empty()) throw Error("a feature structure needs at least its root state");
  const std::size_t n = stateNames.size();
  if (root >= n) throw Error("root state out of range");
  if (types.size() != n) throw Error("type assignment size does not match state count");
  for (TypeId t : types) {
    if (t >= sig.typeCount()) throw Error("undeclared type id " + std::to_string(t));
  }

  FeatureStructure fs;
  for (StateId q = 0; q < n; ++q) {
    if (!detail::isIdentifier(stateNames[q])) {
      throw Error("invalid state name '" + stateNames[q] + "'");
    }
    if (!fs.stateIndex_.emplace(stateNames[q], q).second) {
      throw Error("duplicate state '" + stateNames[q] + "'");
    }
  }
  fs.stateNames_ = std::move(stateNames);
  fs.root_ = root;
  fs.types_ = std::move(types);
  fs.delta_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) throw Error("edge endpoint out of range");
    if (e.attr >= sig.attrCount()) throw Error("undeclared attribute id " + std::to_string(e.attr));
    auto& out = fs.delta_[e.from];
    auto pos = std::lower_bound(out.begin(), out.end(), e.attr,
                                [](const auto& p, AttrId a) { return p.first < a; });
    if (pos != out.end() && pos->first == e.attr) {
      throw Error("duplicate edge (" + fs.stateNames_[e.from] + ", " + sig.attrName(e.attr) + ")");
    }
    out.insert(pos, {e.attr, e.to});
  }

  // Connectivity from the root.
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue{fs.root_};
  seen[fs.root_] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const auto& [attr, to] : fs.delta_[q]) {
      (void)attr;
      if (!seen[to]) {
        seen[to] = true;
        queue.push_back(to);
      }
    }
  }
  for (StateId q = 0; q < n; ++q) {
    if (!seen[q]) {
      throw Error("state '" + fs.stateNames_[q] + "' is unreachable from the root");
    }
  }
  return fs;
}

const std::string& FeatureStructure::stateName(StateId q) const {
  if (q >= stateCount()) throw Error("state id out of range");
  return stateNames_[q];
}

std::optional<StateId> FeatureStructure::findState(std::string_view name) const {
  auto it = stateIndex_.find(std::string(name));
  if (it == stateIndex_.end()) return std::nullopt;
  return it->second;
}

TypeId FeatureStructure::typeOf(StateId q) const {
  if (q >= stateCount()) throw Error("state id out of range");
  return types_[q];
}

std::optional<StateId> FeatureStructure::delta(StateId q, AttrId a) const {
  if (q >= stateCount()) throw Error("state id out of range");
  const auto& out = delta_[q];
  auto pos = std::lower_bound(out.begin(), out.end(), a,
                              [](const auto& p, AttrId x) { return p.first < x; });
  if (pos == out.end() || pos->first != a) return std::nullopt;
  return pos->second;
}

const std::vector<std::pair<AttrId, StateId>>& FeatureStructure::edgesFrom(StateId q) const {
  if (q >= stateCount()) throw Error("state id out of range");
  return delta_[q];
}

std::size_t FeatureStructure::edgeCount() const {
  std::size_t total = 0;
  for (const auto& out : delta_) total += out.size();
  return total;
}

std::optional<StateId> FeatureStructure::run(std::span<const AttrId> path) const {
  StateId q = root_;
  for (AttrId a : path) {
    auto next = delta(q, a);
    if (!next) return std::nullopt;
    q = *next;
  }
  return q;
}

std::vector<StateId> FeatureStructure::bfsOrder() const {
  std::vector<StateId> order;
  order.reserve(stateCount());
  std::vector<bool> seen(stateCount(), false);
  std::deque<StateId> queue{root_};
  seen[root_] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (const auto& [attr, to] : delta_[q]) {
      (void)attr;
      if (!seen[to]) {
        seen[to] = true;
        queue.push_back(to);
      }
    }
  }
  return order;
}

bool FeatureStructure::sameSkeleton(const FeatureStructure& other) const {
  return stateNames_ == other.stateNames_ && root_ == other.root_ && delta_ == other.delta_;
}

FeatureStructure parseFeatureStructure(std::string_view text, const Signature& sig) {
  struct RawEdge {
    detail::Token from, attr, to;
  };
  std::vector<std::string> stateNames;
  std::vector<detail::Token> stateTypes;
  std::set<std::string> declared;
  std::vector<RawEdge> rawEdges;
  std::optional<detail::Token> rootTok;

  for (const detail::Line& line : detail::tokenize(text)) {
    const std::string& kw = line.tokens.front().text;
    if (kw == "root") {
      detail::expectTokens(line, 2, "root <state>");
      if (rootTok) detail::parseFail(line.tokens[1], "duplicate root line");
      rootTok = detail::identifier(line, 1);
    } else if (kw == "node") {
      detail::expectTokens(line, 3, "node <state> <type>");
      const detail::Token& name = detail::identifier(line, 1);
      const detail::Token& type = detail::identifier(line, 2);
      if (!declared.insert(name.text).second) {
        detail::parseFail(name, "duplicate state '" + name.text + "'");
      }
      stateNames.push_back(name.text);
      stateTypes.push_back(type);
    } else if (kw == "edge") {
      detail::expectTokens(line, 4, "edge <state> <attr> <state>");
      rawEdges.push_back({detail::identifier(line, 1), detail::identifier(line, 2),
                          detail::identifier(line, 3)});
    } else {
      detail::parseFail(line.tokens.front(),
                        "expected `root`, `node` or `edge`, got '" + kw + "'");
    }
  }

  if (!rootTok) detail::parseFail(1, "missing root line");
  auto stateId = [&](const detail::Token& tok) -> StateId {
    auto it = std::find(stateNames.begin(), stateNames.end(), tok.text);
    if (it == stateNames.end()) detail::parseFail(tok, "unknown state '" + tok.text + "'");
    return static_cast<StateId>(it - stateNames.begin());
  };

  std::vector<TypeId> types;
  types.reserve(stateTypes.size());
  for (const detail::Token& t : stateTypes) {
    auto id = sig.findType(t.text);
    if (!id) detail::parseFail(t, "unknown type '" + t.text + "'");
    types.push_back(*id);
  }

  std::vector<FeatureStructure::Edge> edges;
  edges.reserve(rawEdges.size());
  std::set<std::pair<StateId, AttrId>> edgeKeys;
  for (const RawEdge& e : rawEdges) {
    StateId from = stateId(e.from);
    auto attr = sig.findAttr(e.attr.text);
    if (!attr) detail::parseFail(e.attr, "unknown attribute '" + e.attr.text + "'");
    StateId to = stateId(e.to);
    if (!edgeKeys.emplace(from, *attr).second) {
      detail::parseFail(e.attr, "duplicate edge (" + e.from.text + ", " + e.attr.text + ")");
    }
    edges.push_back({from, *attr, to});
  }

  StateId root = stateId(*rootTok);
  return FeatureStructure::make(std::move(stateNames), root, edges, std::move(types), sig);
}

std::string printFeatureStructure(const FeatureStructure& fs, const Signature& sig) {
  std::ostringstream out;
  out << "root " << fs.stateName(fs.root()) << "\n";
  for (StateId q = 0; q < fs.stateCount(); ++q) {
    out << "node " << fs.stateName(q) << " " << sig.typeName(fs.typeOf(q)) << "\n";
  }
  for (StateId q = 0; q < fs.stateCount(); ++q) {
    for (const auto& [attr, to] : fs.edgesFrom(q)) {
      out << "edge " << fs.stateName(q) << " " << sig.attrName(attr) << " " << fs.stateName(to)
          << "\n";
    }
  }
  return out.str();
}

namespace {

// Shared by ResolvedFeatureStructure::make and isResolvantOf: the candidate
// outputs must be species and well-typed over the candidate's own skeleton.
bool speciesAndWellTyped(const FeatureStructure& m, const Signature& sig, std::string* why) {
  for (StateId q = 0; q < m.stateCount(); ++q) {
    if (!sig.isSpecies(m.typeOf(q))) {
      if (why) {
        *why = "output of state '" + m.stateName(q) + "' is '" + sig.typeName(m.typeOf(q)) +
               "', not a species";
      }
      return false;
    }
  }
  for (StateId q = 0; q < m.stateCount(); ++q) {
    for (const auto& [attr, to] : m.edgesFrom(q)) {
      auto value = sig.app(m.typeOf(q), attr);
      if (!value || !sig.sub(*value, m.typeOf(to))) {
        if (why) {
          *why = "well-typing fails at (" + m.stateName(q) + ", " + sig.attrName(attr) + ")";
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ResolvedFeatureStructure ResolvedFeatureStructure::make(const FeatureStructure& skeleton,
                                                        std::vector<TypeId> rho,
                                                        const Signature& sig) {
  if (rho.size() != skeleton.stateCount()) {
    throw Error("species assignment size does not match state count");
  }
  std::vector<FeatureStructure::Edge> edges;
  for (StateId q = 0; q < skeleton.stateCount(); ++q) {
    for (const auto& [attr, to] : skeleton.edgesFrom(q)) {
      edges.push_back({q, attr, to});
    }
  }
  FeatureStructure machine = FeatureStructure::make(skeleton.stateNames(), skeleton.root(), edges,
                                                    std::move(rho), sig);
  std::string why;
  if (!speciesAndWellTyped(machine, sig, &why)) throw Error(why);
  return ResolvedFeatureStructure(std::move(machine));
}

bool isResolvantOf(const FeatureStructure& candidate, const FeatureStructure& f,
                   const Signature& sig) {
  if (!candidate.sameSkeleton(f)) return false;
  if (!speciesAndWellTyped(candidate, sig, nullptr)) return false;
  for (StateId q = 0; q < f.stateCount(); ++q) {
    if (!sig.sub(f.typeOf(q), candidate.typeOf(q))) return false;
  }
  return true;
}

bool isResolvantOf(const ResolvedFeatureStructure& r, const FeatureStructure& f,
                   const Signature& sig) {
  return isResolvantOf(r.asFeatureStructure(), f, sig);
}

}  // namespace tfs
