#include "tfs/signature.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "textio.hpp"

namespace tfs {

const std::string& Signature::typeName(TypeId t) const {
  checkTypeId(t);
  return typeNames_[t];
}

const std::string& Signature::attrName(AttrId a) const {
  checkAttrId(a);
  return attrNames_[a];
}

std::optional<TypeId> Signature::findType(std::string_view name) const {
  auto it = typeIndex_.find(std::string(name));
  if (it == typeIndex_.end()) return std::nullopt;
  return it->second;
}

std::optional<AttrId> Signature::findAttr(std::string_view name) const {
  auto it = attrIndex_.find(std::string(name));
  if (it == attrIndex_.end()) return std::nullopt;
  return it->second;
}

TypeId Signature::requireType(std::string_view name) const {
  if (auto t = findType(name)) return *t;
  throw Error("unknown type '" + std::string(name) + "'");
}

AttrId Signature::requireAttr(std::string_view name) const {
  if (auto a = findAttr(name)) return *a;
  throw Error("unknown attribute '" + std::string(name) + "'");
}

bool Signature::sub(TypeId t1, TypeId t2) const {
  checkTypeId(t1);
  checkTypeId(t2);
  return ancestors_[t2][t1];
}

std::optional<TypeId> Signature::app(TypeId t, AttrId a) const {
  checkTypeId(t);
  checkAttrId(a);
  TypeId v = approp_[t * attrCount() + a];
  if (v == kUndefined) return std::nullopt;
  return v;
}

bool Signature::isSpecies(TypeId t) const {
  checkTypeId(t);
  return speciesFlag_[t];
}

const std::vector<TypeId>& Signature::speciesAtLeast(TypeId t) const {
  checkTypeId(t);
  return speciesAtLeast_[t];
}

bool Signature::checkRational() const {
  for (TypeId s : species_) {
    for (AttrId a = 0; a < attrCount(); ++a) {
      if (auto v = app(s, a)) {
        if (speciesAtLeast_[*v].empty()) return false;
      }
    }
  }
  return true;
}

void Signature::checkTypeId(TypeId t) const {
  if (t >= typeCount()) throw Error("unknown type id " + std::to_string(t));
}

void Signature::checkAttrId(AttrId a) const {
  if (a >= attrCount()) throw Error("unknown attribute id " + std::to_string(a));
}

TypeId SignatureBuilder::addType(const std::string& name, const std::vector<std::string>& parents) {
  if (!detail::isIdentifier(name)) throw Error("invalid type name '" + name + "'");
  if (sig_.typeIndex_.count(name)) throw Error("duplicate type '" + name + "'");
  std::vector<TypeId> parentIds;
  parentIds.reserve(parents.size());
  for (const std::string& p : parents) {
    auto it = sig_.typeIndex_.find(p);
    if (it == sig_.typeIndex_.end()) {
      throw Error("unknown type '" + p + "' (types must be declared before use)");
    }
    parentIds.push_back(it->second);
  }
  TypeId id = static_cast<TypeId>(sig_.typeNames_.size());
  sig_.typeNames_.push_back(name);
  sig_.typeIndex_.emplace(name, id);
  parents_.push_back(std::move(parentIds));
  return id;
}

AttrId SignatureBuilder::addAttr(const std::string& name) {
  if (!detail::isIdentifier(name)) throw Error("invalid attribute name '" + name + "'");
  if (sig_.attrIndex_.count(name)) throw Error("duplicate attribute '" + name + "'");
  AttrId id = static_cast<AttrId>(sig_.attrNames_.size());
  sig_.attrNames_.push_back(name);
  sig_.attrIndex_.emplace(name, id);
  return id;
}

void SignatureBuilder::addApprop(const std::string& type, const std::string& attr,
                                 const std::string& value) {
  auto t = sig_.typeIndex_.find(type);
  if (t == sig_.typeIndex_.end()) throw Error("unknown type '" + type + "'");
  auto a = sig_.attrIndex_.find(attr);
  if (a == sig_.attrIndex_.end()) throw Error("unknown attribute '" + attr + "'");
  auto v = sig_.typeIndex_.find(value);
  if (v == sig_.typeIndex_.end()) throw Error("unknown type '" + value + "'");
  approps_.push_back({t->second, a->second, v->second});
}

bool SignatureBuilder::hasType(std::string_view name) const {
  return sig_.typeIndex_.count(std::string(name)) != 0;
}

bool SignatureBuilder::hasAttr(std::string_view name) const {
  return sig_.attrIndex_.count(std::string(name)) != 0;
}

Signature SignatureBuilder::build() {
  Signature sig = sig_;
  const std::size_t n = sig.typeCount();
  const std::size_t m = sig.attrCount();

  // Reflexive-transitive closure. Parents precede children, so one pass in
  // declaration order suffices and the declared edges cannot form a cycle.
  sig.ancestors_.assign(n, std::vector<bool>(n, false));
  for (TypeId t = 0; t < n; ++t) {
    sig.ancestors_[t][t] = true;
    for (TypeId p : parents_[t]) {
      for (TypeId g = 0; g < n; ++g) {
        if (sig.ancestors_[p][g]) sig.ancestors_[t][g] = true;
      }
    }
  }

  // Species: types that subsume nothing but themselves.
  sig.speciesFlag_.assign(n, true);
  for (TypeId t = 0; t < n; ++t) {
    for (TypeId g = 0; g < n; ++g) {
      if (g != t && sig.ancestors_[t][g]) sig.speciesFlag_[g] = false;
    }
  }
  for (TypeId t = 0; t < n; ++t) {
    if (sig.speciesFlag_[t]) sig.species_.push_back(t);
  }

  // Appropriateness table.
  sig.approp_.assign(n * m, Signature::kUndefined);
  for (const Approp& e : approps_) {
    TypeId& slot = sig.approp_[e.type * m + e.attr];
    if (slot != Signature::kUndefined) {
      throw Error("duplicate appropriateness entry for (" + sig.typeNames_[e.type] + ", " +
                  sig.attrNames_[e.attr] + ")");
    }
    slot = e.value;
  }
  sig.appropCount_ = approps_.size();

  // Monotonicity along the closed order.
  for (TypeId t = 0; t < n; ++t) {
    for (TypeId u = 0; u < n; ++u) {
      if (t == u || !sig.ancestors_[u][t]) continue;  // need t subsuming u
      for (AttrId a = 0; a < m; ++a) {
        TypeId tv = sig.approp_[t * m + a];
        if (tv == Signature::kUndefined) continue;
        TypeId uv = sig.approp_[u * m + a];
        const std::string triple = "(" + sig.typeNames_[t] + ", " + sig.typeNames_[u] + ", " +
                                   sig.attrNames_[a] + ")";
        if (uv == Signature::kUndefined) {
          throw Error("appropriateness monotonicity violation at " + triple + ": approp(" +
                      sig.typeNames_[u] + ", " + sig.attrNames_[a] + ") is undefined");
        }
        if (!sig.ancestors_[uv][tv]) {
          throw Error("appropriateness monotonicity violation at " + triple + ": approp(" +
                      sig.typeNames_[t] + ", " + sig.attrNames_[a] + ") = " + sig.typeNames_[tv] +
                      " does not subsume approp(" + sig.typeNames_[u] + ", " +
                      sig.attrNames_[a] + ") = " + sig.typeNames_[uv]);
        }
      }
    }
  }

  sig.speciesAtLeast_.assign(n, {});
  for (TypeId t = 0; t < n; ++t) {
    for (TypeId s : sig.species_) {
      if (sig.ancestors_[s][t]) sig.speciesAtLeast_[t].push_back(s);
    }
  }

  return sig;
}

Signature parseSignature(std::string_view text) {
  SignatureBuilder builder;
  std::set<std::pair<std::string, std::string>> appropKeys;
  for (const detail::Line& line : detail::tokenize(text)) {
    const std::string& kw = line.tokens.front().text;
    if (kw == "type") {
      if (line.tokens.size() < 2) detail::parseFail(line.tokens.front(), "expected `type <name>`");
      const detail::Token& name = detail::identifier(line, 1);
      std::vector<std::string> parents;
      if (line.tokens.size() > 2) {
        if (line.tokens[2].text != "refines" || line.tokens.size() < 4) {
          detail::parseFail(line.tokens[2], "expected `refines <name> [<name> ...]`");
        }
        for (std::size_t i = 3; i < line.tokens.size(); ++i) {
          const detail::Token& p = detail::identifier(line, i);
          if (!builder.hasType(p.text)) {
            detail::parseFail(p, "unknown type '" + p.text +
                                     "' (types must be declared before use)");
          }
          parents.push_back(p.text);
        }
      }
      if (builder.hasType(name.text)) {
        detail::parseFail(name, "duplicate type '" + name.text + "'");
      }
      builder.addType(name.text, parents);
    } else if (kw == "attr") {
      detail::expectTokens(line, 2, "attr <name>");
      const detail::Token& name = detail::identifier(line, 1);
      if (builder.hasAttr(name.text)) {
        detail::parseFail(name, "duplicate attribute '" + name.text + "'");
      }
      builder.addAttr(name.text);
    } else if (kw == "approp") {
      detail::expectTokens(line, 4, "approp <type> <attr> <type>");
      const detail::Token& t = detail::identifier(line, 1);
      const detail::Token& a = detail::identifier(line, 2);
      const detail::Token& v = detail::identifier(line, 3);
      if (!builder.hasType(t.text)) detail::parseFail(t, "unknown type '" + t.text + "'");
      if (!builder.hasAttr(a.text)) detail::parseFail(a, "unknown attribute '" + a.text + "'");
      if (!builder.hasType(v.text)) detail::parseFail(v, "unknown type '" + v.text + "'");
      if (!appropKeys.emplace(t.text, a.text).second) {
        detail::parseFail(t, "duplicate appropriateness entry for (" + t.text + ", " + a.text +
                                 ")");
      }
      builder.addApprop(t.text, a.text, v.text);
    } else {
      detail::parseFail(line.tokens.front(),
                        "expected `type`, `attr` or `approp`, got '" + kw + "'");
    }
  }
  return builder.build();
}

}  // namespace tfs
