#include "tfs/resolve.hpp"

#include <algorithm>

#include "search.hpp"

namespace tfs {

std::vector<std::vector<TypeId>> gen(std::size_t stateCount, const Signature& sig) {
  if (stateCount == 0) throw Error("gen requires at least one state");
  const std::vector<TypeId>& species = sig.species();
  std::vector<std::vector<TypeId>> out;
  if (species.empty()) return out;
  std::vector<std::size_t> odo(stateCount, 0);
  while (true) {
    std::vector<TypeId> rho(stateCount);
    for (std::size_t q = 0; q < stateCount; ++q) rho[q] = species[odo[q]];
    out.push_back(std::move(rho));
    std::size_t i = stateCount;
    while (i > 0) {
      --i;
      if (++odo[i] < species.size()) break;
      odo[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool test1(const std::vector<std::vector<std::pair<AttrId, StateId>>>& delta,
           std::span<const TypeId> rho, const Signature& sig) {
  for (StateId q = 0; q < delta.size(); ++q) {
    for (const auto& [a, to] : delta[q]) {
      auto value = sig.app(rho[q], a);
      if (!value || !sig.sub(*value, rho[to])) return false;
    }
  }
  return true;
}

bool test2(std::span<const TypeId> theta, std::span<const TypeId> rho, const Signature& sig) {
  for (std::size_t q = 0; q < theta.size(); ++q) {
    if (!sig.sub(theta[q], rho[q])) return false;
  }
  return true;
}

ResolvantSet resNaive(const FeatureStructure& f, const Signature& sig,
                      std::uint64_t candidateBound) {
  const std::size_t n = f.stateCount();
  const std::vector<TypeId>& species = sig.species();

  bool exceeds = false;
  if (!species.empty()) {
    std::uint64_t count = 1;
    for (std::size_t q = 0; q < n && !exceeds; ++q) {
      if (count > candidateBound / species.size()) {
        exceeds = true;
      } else {
        count *= species.size();
      }
    }
    exceeds = exceeds || count > candidateBound;
  }
  if (exceeds) {
    throw Error("resNaive candidate space " + std::to_string(species.size()) + "^" +
                std::to_string(n) + " exceeds the bound of " + std::to_string(candidateBound));
  }

  ResolvantSet rs{f, {}};
  if (species.empty()) return rs;
  std::vector<std::size_t> odo(n, 0);
  std::vector<TypeId> rho(n);
  while (true) {
    for (std::size_t q = 0; q < n; ++q) rho[q] = species[odo[q]];
    if (test1(f.adjacency(), rho, sig) && test2(f.types(), rho, sig)) {
      rs.assignments.push_back(rho);
    }
    std::size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (++odo[i] < species.size()) break;
      odo[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return rs;
}

ResolvantSet resRefined(const FeatureStructure& f, const Signature& sig) {
  detail::WellTypingProblem problem;
  problem.delta = &f.adjacency();
  problem.root = f.root();
  problem.domains.reserve(f.stateCount());
  for (StateId q = 0; q < f.stateCount(); ++q) {
    problem.domains.push_back(sig.speciesAtLeast(f.typeOf(q)));
  }
  return ResolvantSet{f, detail::solveWellTyping(std::move(problem), sig, false)};
}

bool sat(const FeatureStructure& f, const Signature& sig) {
  detail::WellTypingProblem problem;
  problem.delta = &f.adjacency();
  problem.root = f.root();
  problem.domains.reserve(f.stateCount());
  for (StateId q = 0; q < f.stateCount(); ++q) {
    problem.domains.push_back(sig.speciesAtLeast(f.typeOf(q)));
  }
  return !detail::solveWellTyping(std::move(problem), sig, true).empty();
}

ResolvedFeatureStructure resolvantAt(const ResolvantSet& rs, std::size_t idx,
                                     const Signature& sig) {
  if (idx >= rs.assignments.size()) throw Error("resolvant index out of range");
  return ResolvedFeatureStructure::make(rs.skeleton, rs.assignments[idx], sig);
}

}  // namespace tfs
