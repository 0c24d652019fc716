#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "satlab/error.hpp"
#include "satlab/graphs/graph.hpp"
#include "satlab/hf/hfset.hpp"

namespace satlab::hf {

struct CollapseMap {
  std::vector<HFSet> sets;  // indexed by vertex
  bool injective = true;
};

// collapse(v) = { collapse(w) : v -> w }. Throws CyclicInput on a cycle.
CollapseMap mostowski_collapse(const graphs::FiniteDigraph& d);

// Vertices of the BIT digraph reachable from `roots` along out-sets,
// ascending (the N_z-closure).
std::vector<Natural> bit_closure(const std::vector<Natural>& roots);

// Assigns phi(x) by recursion on membership: phi(x) = realizer({phi(y) : y in x}),
// memoized by set. The realizer returns a vertex whose out-set is exactly the
// given vertices, or nullopt; nullopt raises RealizerFailure.
template <class V>
V epsilon_embed(const HFSet& x, const std::function<std::optional<V>(const std::vector<V>&)>& realizer,
                std::map<HFSet, V>& memo) {
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  std::vector<V> images;
  images.reserve(x.size());
  for (const auto& y : x.children()) images.push_back(epsilon_embed(y, realizer, memo));
  auto v = realizer(images);
  if (!v) throw Error(ErrorCode::RealizerFailure, "no vertex realizes the image of " + format_hf(x));
  memo.emplace(x, *v);
  return *v;
}

// With the BIT realizer A -> sum of 2^a.
Natural epsilon_embed_bit(const HFSet& x);

// Realizer over a finite digraph: the least vertex whose out-set is exactly `s`.
std::optional<graphs::Vertex> table_realize(const graphs::FiniteDigraph& d, const std::vector<graphs::Vertex>& s);

struct IsoResult {
  bool isomorphic = false;
  std::vector<graphs::Vertex> mapping;  // vertex of D1 -> vertex of D2, when isomorphic
};

// Compares collapse images. Throws NotExtensional when either collapse is not
// injective, CyclicInput on a cycle.
IsoResult iso_extensional(const graphs::FiniteDigraph& d1, const graphs::FiniteDigraph& d2);

}  // namespace satlab::hf
