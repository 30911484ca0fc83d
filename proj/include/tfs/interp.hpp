#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfs/fstruct.hpp"
#include "tfs/morph.hpp"
#include "tfs/signature.hpp"

namespace tfs {

using ObjectId = std::uint32_t;

/// A finite model: a universe of objects, each carrying a species, and a
/// partial function on objects per attribute. Validation enforces both
/// appropriateness directions: a defined value must land in the
/// appropriate type's denotation, and an appropriate attribute must be
/// defined.
class FiniteInterpretation {
public:
  struct Value {
    ObjectId obj;
    AttrId attr;
    ObjectId target;
  };

  static FiniteInterpretation make(std::vector<std::string> objectNames,
                                   std::vector<TypeId> species, const std::vector<Value>& values,
                                   const Signature& sig);

  std::size_t universeSize() const { return objectNames_.size(); }
  const std::string& objectName(ObjectId u) const;
  const std::vector<std::string>& objectNames() const { return objectNames_; }
  std::optional<ObjectId> findObject(std::string_view name) const;

  TypeId speciesOf(ObjectId u) const;

  /// A(a)(u), or nullopt when undefined.
  std::optional<ObjectId> attrValue(ObjectId u, AttrId a) const;
  /// Values leaving u, sorted by attribute id.
  const std::vector<std::pair<AttrId, ObjectId>>& valuesOf(ObjectId u) const;

  /// Left-to-right composition of the attribute functions along path; the
  /// empty path yields u itself.
  std::optional<ObjectId> pathEval(ObjectId u, std::span<const AttrId> path) const;

private:
  FiniteInterpretation() = default;

  std::vector<std::string> objectNames_;
  std::unordered_map<std::string, ObjectId> objectIndex_;
  std::vector<TypeId> speciesOf_;
  std::vector<std::vector<std::pair<AttrId, ObjectId>>> values_;
};

/// Parses the interpretation file format:
///
///   obj <id> <species>
///   val <obj> <attr> <obj>
///
/// `#` comments and blank lines as elsewhere; lines in any order.
FiniteInterpretation parseInterpretation(std::string_view text, const Signature& sig);

/// obj lines in universe order, then val lines in (object, attribute) order.
std::string printInterpretation(const FiniteInterpretation& i, const Signature& sig);

/// The abstraction of u: the sub-machine of the interpretation reachable
/// from u. Passes checkMorph by the interpretation invariants.
MorphAutomaton abstraction(const FiniteInterpretation& i, ObjectId u, const Signature& sig);

/// Truth of f at object u: f approximates the abstraction of u. Exact.
bool truthOf(const FeatureStructure& f, const FiniteInterpretation& i, ObjectId u,
             const Signature& sig);

/// Truth conditions checked over all paths of length <= depth: every such
/// path running to a state must evaluate on u, paths converging in f must
/// converge in the model, and the state's type must subsume the species
/// reached. Sound and complete once depth >= stateCount * universeSize.
bool truthBounded(const FeatureStructure& f, const FiniteInterpretation& i, ObjectId u,
                  std::size_t depth, const Signature& sig);

}  // namespace tfs
