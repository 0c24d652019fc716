#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "satlab/graphs/graph.hpp"
#include "satlab/natural.hpp"

namespace satlab::graphs {

// Adjacency in the BIT graph: with a < b, bit a of b. Throws LoopQuery if m == n.
bool bit_edge(const Natural& m, const Natural& n);

// Out-set N_z(n) in the BIT digraph: the positions of the set bits of n.
std::vector<Natural> out_set(const Natural& n);
// The unique vertex whose out-set is `a`.
Natural realize_out_set(const std::vector<Natural>& a);

// Whether v lies outside A u B, is adjacent to all of A and to none of B.
bool is_witness(const std::vector<Natural>& a, const std::vector<Natural>& b, const Natural& v);

// Least witness for (A, B) in the BIT graph. Throws InvalidArgument if A and
// B meet, TooLarge if an element that would have to serve as a bit position
// exceeds 2^24.
Natural saturation_witness(const std::vector<Natural>& a, const std::vector<Natural>& b);
// Sum of 2^a over A plus one bit above max(A u B).
Natural fast_witness(const std::vector<Natural>& a, const std::vector<Natural>& b);

struct SaturationReport {
  bool saturated = true;
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> counterexample;
  std::size_t pairs_checked = 0;
};

// Checks every disjoint (A, B) with |A| < s and |B| < t, A ordered by size
// then lexicographically, and B likewise within each A.
SaturationReport check_saturation(const FiniteGraph& g, std::size_t s, std::size_t t);

}  // namespace satlab::graphs
