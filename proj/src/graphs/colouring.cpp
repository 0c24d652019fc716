#include "satlab/graphs/colouring.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "satlab/error.hpp"

namespace satlab::graphs {

namespace {

std::vector<std::size_t> positions(std::size_t n, const std::vector<Vertex>& order) {
  if (order.size() != n) {
    throw Error(ErrorCode::IncompleteOrdering, "ordering lists " + std::to_string(order.size()) + " of " +
                                                   std::to_string(n) + " vertices");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v >= n || pos[v] != n) {
      throw Error(ErrorCode::IncompleteOrdering, "ordering repeats or misnames vertex " + std::to_string(v));
    }
    pos[v] = i;
  }
  return pos;
}

}  // namespace

std::vector<std::size_t> back_degrees(const FiniteGraph& g, const std::vector<Vertex>& order) {
  const auto pos = positions(g.size(), order);
  std::vector<std::size_t> out(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbours(v)) {
      if (pos[u] < pos[v]) ++out[v];
    }
  }
  return out;
}

bool is_valid_ordering(const FiniteGraph& g, const ColOrdering& ordering) {
  for (std::size_t d : back_degrees(g, ordering.order)) {
    if (d >= ordering.bound) return false;
  }
  return true;
}

ColOrdering colouring_number(const FiniteGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> removal;
  std::size_t worst = 0;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    worst = std::max(worst, d);
    removed[v] = true;
    removal.push_back(v);
    for (Vertex u : g.neighbours(v)) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      queue.emplace(--degree[u], u);
    }
  }
  ColOrdering out;
  out.order.assign(removal.rbegin(), removal.rend());
  out.bound = n == 0 ? 0 : worst + 1;
  return out;
}

FiniteDigraph orient_down(const FiniteGraph& g, const ColOrdering& ordering) {
  const auto pos = positions(g.size(), ordering.order);
  std::vector<Edge> arcs;
  for (const auto& [u, v] : g.edges()) {
    if (pos[u] > pos[v]) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return FiniteDigraph::from_arcs(g.size(), arcs);
}

std::optional<std::vector<Vertex>> topological_order(const FiniteDigraph& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> indegree(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = d.in(v).size();
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> out;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    out.push_back(v);
    for (Vertex w : d.out(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (out.size() != n) return std::nullopt;
  return out;
}

bool is_acyclic(const FiniteDigraph& d) { return topological_order(d).has_value(); }

}  // namespace satlab::graphs
