#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satlab/graphs/colouring.hpp"
#include "satlab/graphs/graph.hpp"

namespace satlab::graphs {

struct ReversalEntry {
  std::size_t step = 0;
  Vertex vertex = 0;
  std::vector<Edge> reversed;  // arcs x -> c as they were before reversal
};

struct RedirectOptions {
  // Condition 3 subtracts C_eta inside the union instead of the current C_i.
  bool alt_cond3 = false;
};

struct RedirectResult {
  FiniteDigraph digraph;
  std::vector<Vertex> assignment;  // x_i for each handled target
  std::vector<ReversalEntry> log;
  // Index of the first target without an admissible vertex; the other fields
  // then describe the run up to that target.
  std::optional<std::size_t> failed_target;
  // Invariant violations. Only the alternative reading can produce these; under
  // the default reading a violation is a logic_error.
  std::vector<std::string> invariant_violations;
};

// Starts from orient_down(g, ordering) and, for each target C_i, picks the
// least vertex x_i (by id) meeting conditions 1-6, then reverses every arc
// x_i -> c with c an earlier neighbour outside C_i. A(b) is the set of
// vertices reachable from b by a path that decreases in the ordering, b
// included, in the current digraph.
RedirectResult redirect(const FiniteGraph& g, const ColOrdering& ordering,
                        const std::vector<std::vector<Vertex>>& targets, const RedirectOptions& options = {});

// Postconditions of a (possibly partial) run: the underlying graph is g,
// out(x_i) = C_i, acyclic, reversal sets pairwise disjoint, no arc reversed
// twice and no a < b < c with a -> b -> c. Returns the failures.
std::vector<std::string> check_redirect(const FiniteGraph& g, const ColOrdering& ordering,
                                        const std::vector<std::vector<Vertex>>& targets,
                                        const RedirectResult& result);

}  // namespace satlab::graphs
