#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tfs/error.hpp"

namespace tfs {

using TypeId = std::uint32_t;
using AttrId = std::uint32_t;

/// A finite type signature: types under a subsumption partial order, the
/// derived species set (the maximal types), attributes, and the
/// appropriateness table constraining which attributes act on which types
/// and what type the result has.
///
/// Declaration order is significant. Species are listed in declaration
/// order and every enumeration in the library follows that order, so all
/// outputs are deterministic.
///
/// Immutable after construction; safe for concurrent shared reads.
class Signature {
public:
  std::size_t typeCount() const { return typeNames_.size(); }
  std::size_t attrCount() const { return attrNames_.size(); }
  std::size_t appropCount() const { return appropCount_; }

  const std::string& typeName(TypeId t) const;
  const std::string& attrName(AttrId a) const;

  std::optional<TypeId> findType(std::string_view name) const;
  std::optional<AttrId> findAttr(std::string_view name) const;

  /// Lookups that throw Error on unknown names.
  TypeId requireType(std::string_view name) const;
  AttrId requireAttr(std::string_view name) const;

  /// True iff t1 subsumes t2, i.e. t1 is at least as general as t2.
  bool sub(TypeId t1, TypeId t2) const;

  /// Appropriateness value for (t, a), or nullopt when undefined.
  std::optional<TypeId> app(TypeId t, AttrId a) const;

  /// The species (maximal types), in declaration order.
  const std::vector<TypeId>& species() const { return species_; }
  bool isSpecies(TypeId t) const;

  /// All species s with t ⊑ s (t subsumes s), in species declaration order.
  const std::vector<TypeId>& speciesAtLeast(TypeId t) const;

  /// Rationality scan: for every species s and attribute a with app(s, a)
  /// defined, some species refines the value. Automatic in a finite
  /// signature; kept as an explicit check so the property is asserted
  /// rather than assumed.
  bool checkRational() const;

private:
  friend class SignatureBuilder;
  Signature() = default;

  void checkTypeId(TypeId t) const;
  void checkAttrId(AttrId a) const;

  static constexpr TypeId kUndefined = 0xffffffffu;

  std::vector<std::string> typeNames_;
  std::vector<std::string> attrNames_;
  std::unordered_map<std::string, TypeId> typeIndex_;
  std::unordered_map<std::string, AttrId> attrIndex_;
  // ancestors_[t][g] is true iff g subsumes t (reflexive-transitive closure).
  std::vector<std::vector<bool>> ancestors_;
  std::vector<TypeId> species_;
  std::vector<bool> speciesFlag_;
  std::vector<TypeId> approp_;  // typeCount x attrCount, kUndefined for gaps
  std::vector<std::vector<TypeId>> speciesAtLeast_;
  std::size_t appropCount_ = 0;
};

/// Incremental construction of a Signature. A type's parents must already
/// be declared when the type is added; build() closes subsumption
/// reflexively-transitively, derives the species and validates every
/// invariant (appropriateness monotonicity in particular).
class SignatureBuilder {
public:
  TypeId addType(const std::string& name, const std::vector<std::string>& parents = {});
  AttrId addAttr(const std::string& name);
  void addApprop(const std::string& type, const std::string& attr, const std::string& value);

  bool hasType(std::string_view name) const;
  bool hasAttr(std::string_view name) const;

  Signature build();

private:
  struct Approp {
    TypeId type;
    AttrId attr;
    TypeId value;
  };

  Signature sig_;
  std::vector<std::vector<TypeId>> parents_;  // per type, declared refinement edges
  std::vector<Approp> approps_;
};

/// Parses the signature file format:
///
///   type <name>
///   type <name> refines <name> [<name> ...]
///   attr <name>
///   approp <type> <attr> <type>
///
/// Lines are independent; `#` starts a comment; blank lines are ignored.
/// Names referenced must be declared on an earlier line. Throws ParseError
/// for syntax and reference errors, Error for invariant violations.
Signature parseSignature(std::string_view text);

}  // namespace tfs
