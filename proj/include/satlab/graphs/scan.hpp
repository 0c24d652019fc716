#pragma once

#include <cstdint>
#include <vector>

#include "satlab/graphs/graph.hpp"

namespace satlab::graphs {

// Graphs on up to 11 vertices as bitmasks over vertex pairs: pair (i, j) with
// i < j is bit j*(j-1)/2 + i.
std::uint64_t graph_code(const FiniteGraph& g);
FiniteGraph graph_from_code(std::size_t n, std::uint64_t code);
// Largest code over all relabellings.
std::uint64_t canonical_code(std::size_t n, std::uint64_t code);

// Canonical codes of all graphs on n <= 7 vertices up to isomorphism,
// descending. Throws TooLarge above 7.
std::vector<std::uint64_t> graph_catalog(std::size_t n);

struct ScanRow {
  std::size_t id = 0;  // 1-based
  std::size_t col = 0;
  std::size_t col_complement = 0;
  std::uint64_t code = 0;
};

inline constexpr std::size_t kExhaustiveScanLimit = 6;

// Colouring numbers of each graph and its complement: the full catalog up to
// 6 vertices, `samples` uniform random graphs (seeded) for 7 and 8. Throws
// TooLarge above 8.
std::vector<ScanRow> complement_scan(std::size_t n, std::uint64_t seed = 1, std::size_t samples = 64);

}  // namespace satlab::graphs
