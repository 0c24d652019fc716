#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "satlab/graphs/graph.hpp"
#include "satlab/natural.hpp"

namespace satlab::oracles {

// Ackermann code of a brace expression, evaluated by direct recursion on the
// text with machine integers.
std::uint64_t brace_code(std::string_view text);
// Canonical brace text of a small code (members in increasing code order).
std::string brace_text(std::uint64_t code);

// One extensional acyclic digraph per isomorphism type with at most
// `max_size` vertices. Built by repeatedly adding a vertex whose out-set is a
// new subset of the existing vertices; types are told apart by canonical_brace.
std::vector<graphs::FiniteDigraph> extensional_digraphs(std::size_t max_size);

// Brace text of the collapse of v with members sorted as strings.
std::string canonical_brace(const graphs::FiniteDigraph& d, graphs::Vertex v);

// Vertex i of the result is vertex perm[i] of d.
graphs::FiniteDigraph relabel(const graphs::FiniteDigraph& d, const std::vector<graphs::Vertex>& perm);

// Collapse codes by plain recursion on out-sets (exponential, small inputs).
std::vector<Natural> naive_collapse_codes(const graphs::FiniteDigraph& d);

}  // namespace satlab::oracles
