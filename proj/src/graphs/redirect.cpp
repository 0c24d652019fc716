#include "satlab/graphs/redirect.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "satlab/error.hpp"

namespace satlab::graphs {

namespace {

std::vector<std::size_t> rank_of(const FiniteGraph& g, const ColOrdering& ordering) {
  back_degrees(g, ordering.order);  // validates the permutation
  std::vector<std::size_t> rank(g.size());
  for (std::size_t i = 0; i < ordering.order.size(); ++i) rank[ordering.order[i]] = i;
  return rank;
}

std::vector<Vertex> normalized(std::vector<Vertex> c, std::size_t n) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (Vertex v : c) {
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "target vertex " + std::to_string(v) + " out of range");
  }
  return c;
}

bool has(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::set<Vertex> decreasing_reach(const FiniteDigraph& d, const std::vector<std::size_t>& rank, Vertex from) {
  std::set<Vertex> seen{from};
  std::vector<Vertex> stack{from};
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : d.out(u)) {
      if (rank[w] < rank[u] && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

RedirectResult redirect(const FiniteGraph& g, const ColOrdering& ordering,
                        const std::vector<std::vector<Vertex>>& targets, const RedirectOptions& options) {
  const std::size_t n = g.size();
  const auto rank = rank_of(g, ordering);
  std::vector<std::vector<Vertex>> cs;
  for (const auto& c : targets) cs.push_back(normalized(c, n));

  RedirectResult result{orient_down(g, ordering), {}, {}, std::nullopt, {}};
  std::set<Vertex> chosen;
  std::set<Vertex> lower_union;  // union of N(x_j) n x_j over earlier steps

  auto lower_nbrs = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbours(x)) {
      if (rank[u] < rank[x]) out.push_back(u);
    }
    return out;
  };

  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i];
    std::set<Vertex> forbidden;
    for (std::size_t eta = 0; eta <= i; ++eta) {
      const auto& subtract = options.alt_cond3 ? cs[eta] : c;
      for (Vertex beta : cs[eta]) {
        for (Vertex v : decreasing_reach(result.digraph, rank, beta)) {
          if (!has(subtract, v)) forbidden.insert(v);
        }
      }
    }
    std::optional<Vertex> pick;
    for (Vertex x = 0; x < n && !pick; ++x) {
      if (chosen.count(x) || lower_union.count(x)) continue;  // 1, 5
      bool ok = true;
      for (Vertex v : c) ok = ok && g.has_edge(x, v) && rank[v] < rank[x];  // 2
      for (Vertex v : g.neighbours(x)) {
        if (!ok) break;
        ok = !forbidden.count(v);                                 // 3
        ok = ok && (has(c, v) || !lower_union.count(v));          // 4
        ok = ok && (has(c, v) || !chosen.count(v));               // 6
      }
      if (ok) pick = x;
    }
    if (!pick) {
      result.failed_target = i;
      break;
    }
    const Vertex x = *pick;
    ReversalEntry entry{i, x, {}};
    for (Vertex v : lower_nbrs(x)) {
      lower_union.insert(v);
      if (has(c, v)) continue;
      result.digraph.reverse_arc(x, v);
      entry.reversed.emplace_back(x, v);
    }
    chosen.insert(x);
    result.assignment.push_back(x);
    result.log.push_back(std::move(entry));
  }

  auto failures = check_redirect(g, ordering, targets, result);
  if (!failures.empty()) {
    if (!options.alt_cond3) throw std::logic_error("redirect: " + failures.front());
    result.invariant_violations = std::move(failures);
  }
  return result;
}

std::vector<std::string> check_redirect(const FiniteGraph& g, const ColOrdering& ordering,
                                        const std::vector<std::vector<Vertex>>& targets,
                                        const RedirectResult& result) {
  std::vector<std::string> failures;
  const auto rank = rank_of(g, ordering);
  const auto& d = result.digraph;
  if (!(d.underlying() == g)) failures.push_back("underlying graph changed");
  for (std::size_t i = 0; i < result.assignment.size(); ++i) {
    const auto c = normalized(targets[i], g.size());
    if (d.out(result.assignment[i]) != c) {
      failures.push_back("out-set of x_" + std::to_string(i) + " differs from its target");
    }
  }
  if (!is_acyclic(d)) failures.push_back("digraph has a cycle");
  std::set<Edge> seen;
  std::set<Vertex> heads;
  for (const auto& entry : result.log) {
    for (const auto& [x, c] : entry.reversed) {
      const Edge undirected{std::min(x, c), std::max(x, c)};
      if (!seen.insert(undirected).second) failures.push_back("an arc was reversed twice");
      if (!heads.insert(c).second) failures.push_back("reversal sets are not disjoint");
    }
  }
  for (Vertex b = 0; b < d.size(); ++b) {
    for (Vertex a : d.in(b)) {
      if (rank[a] >= rank[b]) continue;
      for (Vertex c : d.out(b)) {
        if (rank[b] < rank[c]) failures.push_back("increasing path of length two");
      }
    }
  }
  return failures;
}

}  // namespace satlab::graphs
