#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "satlab/graphs/graph.hpp"

namespace satlab::graphs {

// A vertex ordering in which every vertex has fewer than `bound` earlier
// neighbours.
struct ColOrdering {
  std::vector<Vertex> order;
  std::size_t bound = 0;
};

// Number of earlier neighbours of each vertex (indexed by vertex). Throws
// IncompleteOrdering unless `order` is a permutation of the vertices.
std::vector<std::size_t> back_degrees(const FiniteGraph& g, const std::vector<Vertex>& order);
// Whether every back degree is below `ordering.bound`.
bool is_valid_ordering(const FiniteGraph& g, const ColOrdering& ordering);

// Least bound over all orderings, by repeatedly deleting a vertex of minimum
// remaining degree (smallest id first) and listing vertices in reverse
// deletion order. The bound is the degeneracy plus one, or 0 for no vertices.
ColOrdering colouring_number(const FiniteGraph& g);

// Every edge directed from the later endpoint to the earlier one.
FiniteDigraph orient_down(const FiniteGraph& g, const ColOrdering& ordering);

bool is_acyclic(const FiniteDigraph& d);
// Kahn order (sources first, smallest id first) or nullopt on a cycle.
std::optional<std::vector<Vertex>> topological_order(const FiniteDigraph& d);

}  // namespace satlab::graphs
