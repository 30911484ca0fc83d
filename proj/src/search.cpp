#include "search.hpp"

#include <algorithm>
#include <deque>

namespace tfs::detail {

namespace {

struct FlatEdge {
  StateId from;
  AttrId attr;
  StateId to;
};

// Does some species in dom refine t? Both sequences ascend by type id.
bool refinableWithin(TypeId t, const std::vector<TypeId>& dom, const Signature& sig) {
  const std::vector<TypeId>& above = sig.speciesAtLeast(t);
  auto a = above.begin();
  auto d = dom.begin();
  while (a != above.end() && d != dom.end()) {
    if (*a == *d) return true;
    if (*a < *d) {
      ++a;
    } else {
      ++d;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<TypeId>> solveWellTyping(WellTypingProblem problem, const Signature& sig,
                                                 bool firstOnly) {
  const auto& delta = *problem.delta;
  const std::size_t n = delta.size();
  auto& domains = problem.domains;

  std::vector<FlatEdge> edges;
  for (StateId q = 0; q < n; ++q) {
    for (const auto& [a, to] : delta[q]) edges.push_back({q, a, to});
  }

  // Unary pass. A self-loop pins the constraint to a single value; any
  // out-edge requires the appropriateness to be defined at all.
  for (const FlatEdge& e : edges) {
    auto keep = [&](TypeId s) {
      auto v = sig.app(s, e.attr);
      if (!v) return false;
      return e.from != e.to || sig.sub(*v, s);
    };
    std::erase_if(domains[e.from], [&](TypeId s) { return !keep(s); });
    if (domains[e.from].empty()) return {};
  }

  // AC-3 over the edges with distinct endpoints. Arc (i, 0) revises the
  // source against the target's domain, (i, 1) the target against the
  // source's.
  std::vector<std::vector<std::pair<std::size_t, int>>> arcsTouching(n);
  std::deque<std::pair<std::size_t, int>> work;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].from == edges[i].to) continue;
    work.push_back({i, 0});
    work.push_back({i, 1});
    // shrinking a domain re-queues the arcs supported by it
    arcsTouching[edges[i].to].push_back({i, 0});
    arcsTouching[edges[i].from].push_back({i, 1});
  }
  while (!work.empty()) {
    auto [i, dir] = work.front();
    work.pop_front();
    const FlatEdge& e = edges[i];
    bool shrunk = false;
    StateId revised;
    if (dir == 0) {
      revised = e.from;
      std::size_t before = domains[e.from].size();
      std::erase_if(domains[e.from], [&](TypeId s) {
        return !refinableWithin(*sig.app(s, e.attr), domains[e.to], sig);
      });
      shrunk = domains[e.from].size() != before;
    } else {
      revised = e.to;
      std::size_t before = domains[e.to].size();
      std::erase_if(domains[e.to], [&](TypeId t) {
        return std::none_of(domains[e.from].begin(), domains[e.from].end(), [&](TypeId s) {
          return sig.sub(*sig.app(s, e.attr), t);
        });
      });
      shrunk = domains[e.to].size() != before;
    }
    if (shrunk) {
      if (domains[revised].empty()) return {};
      for (const auto& arc : arcsTouching[revised]) work.push_back(arc);
    }
  }

  // Assignment order: breadth-first from the root, edges in attribute
  // order. Connectivity puts every state in the order.
  std::vector<StateId> order;
  {
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{problem.root};
    seen[problem.root] = true;
    while (!queue.empty()) {
      StateId q = queue.front();
      queue.pop_front();
      order.push_back(q);
      for (const auto& [a, to] : delta[q]) {
        (void)a;
        if (!seen[to]) {
          seen[to] = true;
          queue.push_back(to);
        }
      }
    }
  }

  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  // Per state: edges whose other endpoint is assigned earlier (or self).
  // Unary pruning already guarantees definedness on every out-attribute,
  // and self-loops are settled, so only cross checks remain.
  std::vector<std::vector<FlatEdge>> checks(n);
  for (const FlatEdge& e : edges) {
    if (e.from == e.to) continue;
    if (pos[e.from] >= pos[e.to]) {
      checks[e.from].push_back(e);
    } else {
      checks[e.to].push_back(e);
    }
  }

  std::vector<std::vector<TypeId>> solutions;
  std::vector<TypeId> rho(n, 0);
  std::vector<bool> assigned(n, false);

  auto consistent = [&](StateId q) {
    for (const FlatEdge& e : checks[q]) {
      StateId other = e.from == q ? e.to : e.from;
      if (!assigned[other]) continue;  // other endpoint comes later via its own checks
      if (!sig.sub(*sig.app(rho[e.from], e.attr), rho[e.to])) return false;
    }
    return true;
  };

  std::size_t depth = 0;
  std::vector<std::size_t> choice(order.size(), 0);
  while (true) {
    if (depth == order.size()) {
      solutions.push_back(rho);
      if (firstOnly) return solutions;
      --depth;
      ++choice[depth];
    }
    StateId q = order[depth];
    assigned[q] = false;
    bool advanced = false;
    while (choice[depth] < domains[q].size()) {
      rho[q] = domains[q][choice[depth]];
      assigned[q] = true;
      if (consistent(q)) {
        advanced = true;
        break;
      }
      assigned[q] = false;
      ++choice[depth];
    }
    if (advanced) {
      ++depth;
      if (depth < order.size()) choice[depth] = 0;
    } else {
      if (depth == 0) break;
      --depth;
      assigned[order[depth]] = false;
      ++choice[depth];
    }
  }

  std::sort(solutions.begin(), solutions.end());
  return solutions;
}

}  // namespace tfs::detail
