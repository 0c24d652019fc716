#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satlab/natural.hpp"

namespace satlab::graphs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on 0..n-1 with sorted adjacency lists.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(std::size_t n) : adj_(n) {}
  // Throws MalformedGraph on loops or out-of-range endpoints. Repeated pairs
  // are merged.
  static FiniteGraph from_edges(std::size_t n, const std::vector<Edge>& edges);
  static FiniteGraph complete(std::size_t n);
  static FiniteGraph cycle(std::size_t n);
  static FiniteGraph petersen();

  std::size_t size() const { return adj_.size(); }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  // Sorted pairs with u < v.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  FiniteGraph complement() const;
  // Induced subgraph on `keep`, relabelled in the given order.
  FiniteGraph induced(const std::vector<Vertex>& keep) const;

  friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

// Directed graph without loops, parallel arcs or 2-cycles.
class FiniteDigraph {
 public:
  FiniteDigraph() = default;
  explicit FiniteDigraph(std::size_t n) : out_(n), in_(n) {}
  // Throws MalformedDigraph on loops, out-of-range endpoints, repeated arcs
  // or an arc together with its reverse.
  static FiniteDigraph from_arcs(std::size_t n, const std::vector<Edge>& arcs);

  std::size_t size() const { return out_.size(); }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex u, Vertex v) const;
  std::vector<Edge> arcs() const;
  std::size_t arc_count() const;
  FiniteGraph underlying() const;
  // Replaces u->v by v->u; the arc must exist.
  void reverse_arc(Vertex u, Vertex v);

  friend bool operator==(const FiniteDigraph&, const FiniteDigraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

// Text format: first line `n`, then one `u v` pair per line. `#` starts a
// comment. Digraph lines read as arcs u -> v and may also be written `u > v`.
FiniteGraph parse_graph(std::string_view text);
FiniteDigraph parse_digraph(std::string_view text);
std::string format_graph(const FiniteGraph& g);
std::string format_digraph(const FiniteDigraph& d);

// The BIT graph on 0..n-1.
FiniteGraph bit_graph(std::size_t n);
// The BIT digraph (n -> m iff bit m of n is set) induced on `vertices`,
// relabelled by position in the list.
FiniteDigraph bit_digraph(const std::vector<Natural>& vertices);

}  // namespace satlab::graphs
