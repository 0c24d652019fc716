#include "satlab/graphs/scan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "satlab/error.hpp"
#include "satlab/graphs/colouring.hpp"

namespace satlab::graphs {

namespace {

constexpr std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// For every permutation of 0..n-1, the image of each pair index.
std::vector<std::vector<std::uint8_t>> pair_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  do {
    std::vector<std::uint8_t> map(n * (n - 1) / 2);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const std::size_t a = std::min(perm[i], perm[j]);
        const std::size_t b = std::max(perm[i], perm[j]);
        map[pair_index(i, j)] = static_cast<std::uint8_t>(pair_index(a, b));
      }
    }
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t canonical_with(const std::vector<std::vector<std::uint8_t>>& perms, std::uint64_t code) {
  std::uint64_t best = 0;
  for (const auto& map : perms) {
    std::uint64_t image = 0;
    for (std::size_t k = 0; k < map.size(); ++k) {
      if ((code >> k) & 1u) image |= std::uint64_t{1} << map[k];
    }
    best = std::max(best, image);
  }
  return best;
}

}  // namespace

std::uint64_t graph_code(const FiniteGraph& g) {
  if (g.size() > 11) throw Error(ErrorCode::TooLarge, "graph codes cover at most 11 vertices");
  std::uint64_t code = 0;
  for (const auto& [u, v] : g.edges()) code |= std::uint64_t{1} << pair_index(u, v);
  return code;
}

FiniteGraph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > 11) throw Error(ErrorCode::TooLarge, "graph codes cover at most 11 vertices");
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if ((code >> pair_index(i, j)) & 1u) edges.emplace_back(i, j);
    }
  }
  return FiniteGraph::from_edges(n, edges);
}

std::uint64_t canonical_code(std::size_t n, std::uint64_t code) {
  if (n > 8) throw Error(ErrorCode::TooLarge, "canonical codes are computed for at most 8 vertices");
  if (n < 2) return 0;
  return canonical_with(pair_permutations(n), code);
}

std::vector<std::uint64_t> graph_catalog(std::size_t n) {
  if (n > 7) throw Error(ErrorCode::TooLarge, "the catalog is built for at most 7 vertices");
  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 2; m <= n; ++m) {
    // Every graph on m vertices arises from one on m-1 by adding vertex m-1.
    const auto perms = pair_permutations(m);
    const std::size_t shift = pair_index(0, m - 1);
    std::unordered_set<std::uint64_t> found;
    for (std::uint64_t base : level) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (m - 1)); ++nbrs) {
        found.insert(canonical_with(perms, base | (nbrs << shift)));
      }
    }
    level.assign(found.begin(), found.end());
  }
  std::sort(level.rbegin(), level.rend());
  return level;
}

std::vector<ScanRow> complement_scan(std::size_t n, std::uint64_t seed, std::size_t samples) {
  if (n > 8) throw Error(ErrorCode::TooLarge, "complement_scan handles at most 8 vertices");
  std::vector<std::uint64_t> codes;
  if (n <= kExhaustiveScanLimit) {
    codes = graph_catalog(n);
  } else {
    std::mt19937_64 rng(seed);
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::size_t s = 0; s < samples; ++s) codes.push_back(rng() & ((std::uint64_t{1} << pairs) - 1));
  }
  std::vector<ScanRow> rows;
  for (std::size_t k = 0; k < codes.size(); ++k) {
    const auto g = graph_from_code(n, codes[k]);
    rows.push_back({k + 1, colouring_number(g).bound, colouring_number(g.complement()).bound, codes[k]});
  }
  return rows;
}

}  // namespace satlab::graphs
