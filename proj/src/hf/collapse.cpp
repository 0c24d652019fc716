#include "satlab/hf/collapse.hpp"

#include <algorithm>
#include <set>

#include "satlab/graphs/bit.hpp"
#include "satlab/graphs/colouring.hpp"

namespace satlab::hf {

using graphs::FiniteDigraph;
using graphs::Vertex;

CollapseMap mostowski_collapse(const FiniteDigraph& d) {
  const auto order = graphs::topological_order(d);
  if (!order) throw Error(ErrorCode::CyclicInput, "digraph has a cycle");
  CollapseMap out;
  out.sets.resize(d.size());
  // Reverse topological order visits every out-neighbour first.
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    std::vector<HFSet> children;
    for (Vertex w : d.out(*it)) children.push_back(out.sets[w]);
    out.sets[*it] = HFSet::of(std::move(children));
  }
  const std::set<HFSet> distinct(out.sets.begin(), out.sets.end());
  out.injective = distinct.size() == out.sets.size();
  return out;
}

std::vector<Natural> bit_closure(const std::vector<Natural>& roots) {
  std::set<Natural> seen(roots.begin(), roots.end());
  std::vector<Natural> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    const Natural n = stack.back();
    stack.pop_back();
    for (const auto& m : graphs::out_set(n)) {
      if (seen.insert(m).second) stack.push_back(m);
    }
  }
  return {seen.begin(), seen.end()};
}

Natural epsilon_embed_bit(const HFSet& x) {
  std::map<HFSet, Natural> memo;
  const std::function<std::optional<Natural>(const std::vector<Natural>&)> bit =
      [](const std::vector<Natural>& s) -> std::optional<Natural> { return graphs::realize_out_set(s); };
  return epsilon_embed<Natural>(x, bit, memo);
}

std::optional<Vertex> table_realize(const FiniteDigraph& d, const std::vector<Vertex>& s) {
  std::vector<Vertex> want = s;
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d.out(v) == want) return v;
  }
  return std::nullopt;
}

IsoResult iso_extensional(const FiniteDigraph& d1, const FiniteDigraph& d2) {
  const auto c1 = mostowski_collapse(d1);
  const auto c2 = mostowski_collapse(d2);
  if (!c1.injective || !c2.injective) {
    throw Error(ErrorCode::NotExtensional, std::string(!c1.injective ? "first" : "second") +
                                               " digraph has two vertices with the same collapse");
  }
  IsoResult out;
  if (d1.size() != d2.size()) return out;
  std::map<HFSet, Vertex> where;
  for (Vertex v = 0; v < d2.size(); ++v) where.emplace(c2.sets[v], v);
  for (Vertex v = 0; v < d1.size(); ++v) {
    auto it = where.find(c1.sets[v]);
    if (it == where.end()) return {};
    out.mapping.push_back(it->second);
  }
  for (const auto& [u, v] : d1.arcs()) {
    if (!d2.has_arc(out.mapping[u], out.mapping[v])) throw std::logic_error("collapse bijection is not an isomorphism");
  }
  if (d1.arc_count() != d2.arc_count()) throw std::logic_error("collapse bijection is not an isomorphism");
  out.isomorphic = true;
  return out;
}

}  // namespace satlab::hf
