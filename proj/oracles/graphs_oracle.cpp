#include "graphs_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace satlab::oracles {

using graphs::FiniteDigraph;
using graphs::FiniteGraph;
using graphs::Vertex;

bool bit_adjacent(std::uint64_t m, std::uint64_t n) {
  const auto lo = std::min(m, n);
  const auto hi = std::max(m, n);
  return lo < 64 && ((hi >> lo) & 1u);
}

std::uint64_t brute_witness(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::uint64_t v = 0;; ++v) {
    bool ok = true;
    for (auto x : a) ok = ok && x != v && bit_adjacent(x, v);
    for (auto x : b) ok = ok && x != v && !bit_adjacent(x, v);
    if (ok) return v;
  }
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> brute_witness_table(unsigned universe,
                                                                                     unsigned max_a,
                                                                                     unsigned max_b) {
  std::vector<std::uint32_t> small;
  for (std::uint32_t m = 0; m < (1u << universe); ++m) {
    if (static_cast<unsigned>(__builtin_popcount(m)) <= std::max(max_a, max_b)) small.push_back(m);
  }
  const std::uint64_t limit = std::uint64_t{1} << (universe + 1);
  std::vector<std::uint32_t> adj(limit);
  for (std::uint64_t v = 0; v < limit; ++v) {
    for (unsigned u = 0; u < universe; ++u) {
      if (u != v && bit_adjacent(u, v)) adj[v] |= 1u << u;
    }
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> out;
  for (std::uint32_t a : small) {
    if (static_cast<unsigned>(__builtin_popcount(a)) > max_a) continue;
    std::vector<std::uint32_t> pending;
    for (std::uint32_t b : small) {
      if (static_cast<unsigned>(__builtin_popcount(b)) <= max_b && (a & b) == 0) pending.push_back(b);
    }
    for (std::uint64_t v = 0; v < limit && !pending.empty(); ++v) {
      const std::uint32_t self = v < universe ? (1u << v) : 0u;
      if ((self & a) || (adj[v] & a) != a) continue;
      std::vector<std::uint32_t> rest;
      for (std::uint32_t b : pending) {
        if ((self & b) == 0 && (adj[v] & b) == 0) {
          out[{a, b}] = v;
        } else {
          rest.push_back(b);
        }
      }
      pending = std::move(rest);
    }
  }
  return out;
}

std::size_t brute_colouring_number(const FiniteGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = n + 1;
  do {
    std::size_t worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t back = 0;
      for (std::size_t j = 0; j < i; ++j) back += g.has_edge(perm[i], perm[j]) ? 1 : 0;
      worst = std::max(worst, back);
    }
    best = std::min(best, worst + 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t brute_class_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::vector<std::vector<bool>>> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) m[pairs[k].first][pairs[k].second] = m[pairs[k].second][pairs[k].first] = true;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<bool>> best;
    do {
      std::vector<std::vector<bool>> p(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) p[perm[i]][perm[j]] = m[i][j];
      }
      if (best.empty() || p < best) best = p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

bool dfs_acyclic(const FiniteDigraph& d) {
  std::vector<int> state(d.size(), 0);
  bool cycle = false;
  auto visit = [&](auto&& self, Vertex v) -> void {
    state[v] = 1;
    for (Vertex w : d.out(v)) {
      if (state[w] == 1) cycle = true;
      if (state[w] == 0) self(self, w);
    }
    state[v] = 2;
  };
  for (Vertex v = 0; v < d.size(); ++v) {
    if (state[v] == 0) visit(visit, v);
  }
  return !cycle;
}

std::optional<std::vector<Vertex>> brute_digraph_iso(const FiniteDigraph& a, const FiniteDigraph& b) {
  if (a.size() != b.size() || a.arc_count() != b.arc_count()) return std::nullopt;
  std::vector<Vertex> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < a.size() && ok; ++u) {
      for (Vertex v = 0; v < a.size() && ok; ++v) ok = a.has_arc(u, v) == b.has_arc(perm[u], perm[v]);
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool brute_graph_iso(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < a.size() && ok; ++u) {
      for (Vertex v = u + 1; v < a.size() && ok; ++v) ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_saturation_failure(const FiniteGraph& g,
                                                                                            std::size_t s,
                                                                                            std::size_t t) {
  const std::size_t n = g.size();
  std::vector<std::vector<Vertex>> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> sub;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) sub.push_back(v);
    }
    subsets.push_back(sub);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (const auto& a : subsets) {
    if (a.size() >= s) continue;
    for (const auto& b : subsets) {
      if (b.size() >= t) continue;
      bool disjoint = true;
      for (Vertex x : b) disjoint = disjoint && !std::count(a.begin(), a.end(), x);
      if (!disjoint) continue;
      bool found = false;
      for (Vertex v = 0; v < n && !found; ++v) {
        if (std::count(a.begin(), a.end(), v) || std::count(b.begin(), b.end(), v)) continue;
        bool ok = true;
        for (Vertex x : a) ok = ok && g.has_edge(v, x);
        for (Vertex x : b) ok = ok && !g.has_edge(v, x);
        found = ok;
      }
      if (!found) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace satlab::oracles
