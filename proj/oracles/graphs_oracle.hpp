#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "satlab/graphs/graph.hpp"

namespace satlab::oracles {

// Adjacency in the BIT graph on machine integers.
bool bit_adjacent(std::uint64_t m, std::uint64_t n);

// Least v outside A u B adjacent to all of A and none of B, by linear scan.
std::uint64_t brute_witness(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

// Least witness for every disjoint (A, B) of subsets of {0..universe-1} with
// |A| <= max_a and |B| <= max_b, keyed by (mask of A, mask of B). One ascending
// scan over v < 2^(universe+1) per A.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> brute_witness_table(unsigned universe,
                                                                                     unsigned max_a,
                                                                                     unsigned max_b);

// Minimum over all vertex orderings of (max number of earlier neighbours + 1).
std::size_t brute_colouring_number(const graphs::FiniteGraph& g);

// Number of isomorphism classes among all labelled graphs on n vertices,
// comparing adjacency matrices under every permutation.
std::size_t brute_class_count(std::size_t n);

// Cycle detection by depth-first search.
bool dfs_acyclic(const graphs::FiniteDigraph& d);

// A bijection f with u -> v iff f(u) -> f(v), by trying every permutation.
std::optional<std::vector<graphs::Vertex>> brute_digraph_iso(const graphs::FiniteDigraph& a,
                                                             const graphs::FiniteDigraph& b);
bool brute_graph_iso(const graphs::FiniteGraph& a, const graphs::FiniteGraph& b);

// First (A, B) with |A| < s, |B| < t (A by size then lex, B likewise) that has
// no witness.
std::optional<std::pair<std::vector<graphs::Vertex>, std::vector<graphs::Vertex>>> brute_saturation_failure(
    const graphs::FiniteGraph& g, std::size_t s, std::size_t t);

}  // namespace satlab::oracles
