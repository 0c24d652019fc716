#include "satlab/backforth/backforth.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "satlab/graphs/bit.hpp"
#include "satlab/orders/cuts.hpp"
#include "satlab/orders/grammar.hpp"

namespace satlab::backforth {

using orders::OrderDesc;
using orders::OrderTerm;

std::string format_element(const Element& e) {
  if (const auto* t = std::get_if<OrderTerm>(&e)) return orders::format_term(*t);
  return std::get<Natural>(e).to_string();
}

Type type_over(const Presentation& p, const std::vector<Element>& over, const Element& x) {
  Type t;
  for (const auto& y : over) {
    if (y == x) continue;
    (p.related(y, x) ? t.first : t.second).push_back(y);
  }
  return t;
}

bool realizes(const Presentation& p, const Type& t, const Element& e) {
  for (const auto& f : t.first) {
    if (f == e || !p.related(f, e)) return false;
  }
  for (const auto& s : t.second) {
    if (s == e) return false;
    if (p.signature == Signature::Order ? !p.related(e, s) : p.related(s, e)) return false;
  }
  return true;
}

std::optional<Element> PartialIso::forward(const Element& x) const {
  auto it = forward_.find(x);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> PartialIso::backward(const Element& y) const {
  auto it = backward_.find(y);
  if (it == backward_.end()) return std::nullopt;
  return it->second;
}

void PartialIso::add(Element x, Element y) {
  if (forward_.count(x) || backward_.count(y)) {
    throw Error(ErrorCode::InvalidArgument, "pair (" + format_element(x) + ", " + format_element(y) +
                                                ") overlaps the partial map");
  }
  forward_.emplace(x, y);
  backward_.emplace(y, x);
  pairs_.emplace_back(std::move(x), std::move(y));
}

bool is_partial_iso(const Presentation& left, const Presentation& right, const PartialIso& p) {
  const auto& pairs = p.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      if (left.related(pairs[i].first, pairs[j].first) != right.related(pairs[i].second, pairs[j].second)) {
        return false;
      }
    }
  }
  return true;
}

PartialIso bf_step(const Presentation& left, const Presentation& right, const PartialIso& p,
                   std::uint64_t step_index) {
  const bool forth = step_index % 2 == 0;
  const Presentation& from = forth ? left : right;
  const Presentation& to = forth ? right : left;
  std::optional<Element> x;
  for (std::uint64_t k = 0;; ++k) {
    auto e = from.element_at(k);
    if (!e) return p;
    if (!(forth ? p.forward(*e) : p.backward(*e))) {
      x = std::move(e);
      break;
    }
  }
  Type t;
  for (const auto& [a, b] : p.pairs()) {
    const Element& mine = forth ? a : b;
    const Element& theirs = forth ? b : a;
    (from.related(mine, *x) ? t.first : t.second).push_back(theirs);
  }
  const auto y = to.extender(t);
  if (!y) {
    throw Error(ErrorCode::ExtenderExhausted, "no element of " + to.name + " realizes the type of " +
                                                  format_element(*x) + " over " + std::to_string(p.size()) +
                                                  " mapped elements");
  }
  if (!realizes(to, t, *y) || (forth ? p.backward(*y) : p.forward(*y))) {
    throw Error(ErrorCode::InvalidExtender, "extender of " + to.name + " returned " + format_element(*y) +
                                                ", which does not realize the requested type");
  }
  PartialIso out = p;
  if (forth) {
    out.add(*x, *y);
  } else {
    out.add(*y, *x);
  }
  return out;
}

BfResult bf_run(const Presentation& left, const Presentation& right, std::uint64_t steps) {
  if (left.signature != right.signature) {
    throw Error(ErrorCode::InvalidArgument, left.name + " and " + right.name + " have different signatures");
  }
  BfResult out;
  for (std::uint64_t s = 0; s < steps; ++s) {
    try {
      out.map = bf_step(left, right, out.map, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExtenderExhausted && e.code() != ErrorCode::InvalidExtender) throw;
      out.failure = e.code();
      out.message = e.what();
      return out;
    }
    out.steps_done = s + 1;
  }
  return out;
}

bool check_presentation(const Presentation& p, std::size_t depth) {
  std::vector<Element> elems;
  for (std::uint64_t k = 0; k < depth; ++k) {
    auto e = p.element_at(k);
    if (!e) break;
    elems.push_back(std::move(*e));
  }
  if (std::set<Element>(elems.begin(), elems.end()).size() != elems.size()) return false;
  for (std::size_t m = 0; m < elems.size(); ++m) {
    const std::vector<Element> prefix(elems.begin(), elems.begin() + m);
    for (std::size_t j = m; j < elems.size(); ++j) {
      const Type t = type_over(p, prefix, elems[j]);
      const auto e = p.extender(t);
      if (!e || !realizes(p, t, *e)) return false;
    }
  }
  return true;
}

namespace {

// Enumeration by consecutive blocks, each permuted by a seeded shuffle. The
// permutations are cached; the cache is internally synchronized.
class BlockEnumeration {
 public:
  BlockEnumeration(std::function<std::uint64_t(std::uint64_t)> block_size, std::uint64_t seed)
      : block_size_(std::move(block_size)), seed_(seed) {}

  // (block, offset within the block after shuffling).
  std::pair<std::uint64_t, std::uint64_t> locate(std::uint64_t k) {
    std::uint64_t b = 0;
    while (true) {
      const std::uint64_t size = block_size_(b);
      if (k < size) break;
      k -= size;
      ++b;
    }
    if (seed_ == 0) return {b, k};
    std::lock_guard lock(mutex_);
    auto it = perms_.find(b);
    if (it == perms_.end()) {
      const std::uint64_t size = block_size_(b);
      if (size > (std::uint64_t{1} << 22)) throw Error(ErrorCode::TooLarge, "enumeration index is too large");
      std::vector<std::uint64_t> perm(size);
      std::iota(perm.begin(), perm.end(), 0);
      std::mt19937_64 rng(seed_ * 0x9E3779B97F4A7C15ULL + b);
      std::shuffle(perm.begin(), perm.end(), rng);
      it = perms_.emplace(b, std::move(perm)).first;
    }
    return {b, it->second[k]};
  }

 private:
  std::function<std::uint64_t(std::uint64_t)> block_size_;
  std::uint64_t seed_;
  std::mutex mutex_;
  std::map<std::uint64_t, std::vector<std::uint64_t>> perms_;
};

std::vector<OrderTerm> terms_of(const std::vector<Element>& v) {
  std::vector<OrderTerm> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(std::get<OrderTerm>(e));
  return out;
}

std::vector<Natural> naturals_of(const std::vector<Element>& v) {
  std::vector<Natural> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(std::get<Natural>(e));
  return out;
}

std::vector<std::uint64_t> seeded_order(std::uint64_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

std::uint64_t as_index(const Element& e) {
  if (const auto* t = std::get_if<OrderTerm>(&e)) return t->as<orders::IndexTerm>().index;
  return *std::get<Natural>(e).to_u64();
}

}  // namespace

Presentation make_dlo_presentation(std::uint64_t seed) {
  // Block b > 0 holds the 2 * 3^(b-1) terms whose largest support position is b-1.
  auto blocks = std::make_shared<BlockEnumeration>(
      [](std::uint64_t b) -> std::uint64_t {
        if (b == 0) return 1;
        if (b > 40) throw Error(ErrorCode::TooLarge, "enumeration index is too large");
        std::uint64_t size = 2;
        for (std::uint64_t i = 1; i < b; ++i) size *= 3;
        return size;
      },
      seed);
  const auto desc = OrderDesc::ternary();
  Presentation p;
  p.name = "dlo:" + std::to_string(seed);
  p.signature = Signature::Order;
  p.element_at = [blocks](std::uint64_t k) -> std::optional<Element> {
    const auto [b, offset] = blocks->locate(k);
    std::map<std::uint64_t, int> support;
    if (b > 0) {
      support[b - 1] = offset % 2 == 0 ? -1 : 1;
      std::uint64_t rest = offset / 2;
      for (std::uint64_t pos = 0; pos + 1 < b; ++pos, rest /= 3) {
        if (rest % 3 != 0) support[pos] = rest % 3 == 1 ? -1 : 1;
      }
    }
    return Element(OrderTerm::ternary(std::move(support)));
  };
  p.related = [desc](const Element& x, const Element& y) {
    return orders::cmp_unchecked(desc, std::get<OrderTerm>(x), std::get<OrderTerm>(y)) < 0;
  };
  p.extender = [desc](const Type& t) -> std::optional<Element> {
    try {
      return Element(orders::realize_cut(desc, orders::Cut(desc, terms_of(t.first), terms_of(t.second))));
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  return p;
}

Presentation make_bit_presentation(std::uint64_t seed) {
  auto blocks = std::make_shared<BlockEnumeration>(
      [](std::uint64_t b) -> std::uint64_t {
        if (b > 63) throw Error(ErrorCode::TooLarge, "enumeration index is too large");
        return b == 0 ? 1 : std::uint64_t{1} << (b - 1);
      },
      seed);
  Presentation p;
  p.name = "bit:" + std::to_string(seed);
  p.signature = Signature::Graph;
  p.element_at = [blocks](std::uint64_t k) -> std::optional<Element> {
    const auto [b, offset] = blocks->locate(k);
    return Element(Natural(b == 0 ? 0 : (std::uint64_t{1} << (b - 1)) + offset));
  };
  p.related = [](const Element& x, const Element& y) {
    const auto& m = std::get<Natural>(x);
    const auto& n = std::get<Natural>(y);
    return m != n && graphs::bit_edge(m, n);
  };
  p.extender = [](const Type& t) -> std::optional<Element> {
    try {
      return Element(graphs::saturation_witness(naturals_of(t.first), naturals_of(t.second)));
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  return p;
}

Presentation make_chain_presentation(std::uint64_t n, std::uint64_t seed) {
  const auto order = std::make_shared<const std::vector<std::uint64_t>>(seeded_order(n, seed));
  Presentation p;
  p.name = "chain:" + std::to_string(n) + ":" + std::to_string(seed);
  p.signature = Signature::Order;
  p.element_at = [order](std::uint64_t k) -> std::optional<Element> {
    if (k >= order->size()) return std::nullopt;
    return Element(OrderTerm::index((*order)[k]));
  };
  p.related = [](const Element& x, const Element& y) { return as_index(x) < as_index(y); };
  p.extender = [n](const Type& t) -> std::optional<Element> {
    std::uint64_t lo = 0;
    std::uint64_t hi = n;
    for (const auto& e : t.first) lo = std::max(lo, as_index(e) + 1);
    for (const auto& e : t.second) hi = std::min(hi, as_index(e));
    if (lo >= hi) return std::nullopt;
    return Element(OrderTerm::index(lo));
  };
  return p;
}

Presentation make_graph_presentation(const graphs::FiniteGraph& g, std::uint64_t seed) {
  const auto graph = std::make_shared<const graphs::FiniteGraph>(g);
  const auto order = std::make_shared<const std::vector<std::uint64_t>>(seeded_order(g.size(), seed));
  Presentation p;
  p.name = "graph:" + std::to_string(g.size()) + ":" + std::to_string(seed);
  p.signature = Signature::Graph;
  p.element_at = [order](std::uint64_t k) -> std::optional<Element> {
    if (k >= order->size()) return std::nullopt;
    return Element(Natural((*order)[k]));
  };
  p.related = [graph](const Element& x, const Element& y) {
    return graph->has_edge(static_cast<graphs::Vertex>(as_index(x)), static_cast<graphs::Vertex>(as_index(y)));
  };
  p.extender = [graph](const Type& t) -> std::optional<Element> {
    std::vector<char> used(graph->size(), 0);
    for (const auto& e : t.first) used[as_index(e)] = 1;
    for (const auto& e : t.second) used[as_index(e)] = 1;
    for (graphs::Vertex v = 0; v < graph->size(); ++v) {
      if (used[v]) continue;
      const bool ok = std::all_of(t.first.begin(), t.first.end(),
                                  [&](const Element& e) { return graph->has_edge(as_index(e), v); }) &&
                      std::none_of(t.second.begin(), t.second.end(),
                                   [&](const Element& e) { return graph->has_edge(as_index(e), v); });
      if (ok) return Element(Natural(v));
    }
    return std::nullopt;
  };
  return p;
}

}  // namespace satlab::backforth
