#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "satlab/error.hpp"
#include "satlab/graphs/graph.hpp"
#include "satlab/natural.hpp"
#include "satlab/orders/order.hpp"

namespace satlab::backforth {

using Element = std::variant<orders::OrderTerm, Natural>;
std::string format_element(const Element& e);

enum class Signature { Order, Graph };

// Relational type of a new element over a finite set. Orders: (strictly
// below, strictly above). Graphs: (adjacent, non-adjacent).
struct Type {
  std::vector<Element> first;
  std::vector<Element> second;
};

struct Presentation {
  std::string name;
  Signature signature = Signature::Order;
  // Injective enumeration; nullopt past the end of a finite presentation.
  std::function<std::optional<Element>(std::uint64_t)> element_at;
  // Orders: x < y. Graphs: x adjacent to y (symmetric, irreflexive).
  std::function<bool(const Element&, const Element&)> related;
  // A realizer of the type outside its two sets, or nullopt.
  std::function<std::optional<Element>(const Type&)> extender;
};

// Type of `x` over `over`, both taken in `p`.
Type type_over(const Presentation& p, const std::vector<Element>& over, const Element& x);
bool realizes(const Presentation& p, const Type& t, const Element& e);

class PartialIso {
 public:
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  // In the order the pairs were added.
  const std::vector<std::pair<Element, Element>>& pairs() const { return pairs_; }
  std::optional<Element> forward(const Element& x) const;
  std::optional<Element> backward(const Element& y) const;
  // Throws InvalidArgument if either side is already mapped.
  void add(Element x, Element y);

 private:
  std::vector<std::pair<Element, Element>> pairs_;
  std::map<Element, Element> forward_;
  std::map<Element, Element> backward_;
};

// Whether `p` preserves and reflects the relation between every two pairs.
bool is_partial_iso(const Presentation& left, const Presentation& right, const PartialIso& p);

// Even steps extend forward from the least-enumerated unmapped left element,
// odd steps backward. A step on a side whose enumeration is fully mapped
// leaves p unchanged. Throws ExtenderExhausted when the extender fails and
// InvalidExtender when its answer does not realize the type.
PartialIso bf_step(const Presentation& left, const Presentation& right, const PartialIso& p,
                   std::uint64_t step_index);

struct BfResult {
  PartialIso map;
  std::uint64_t steps_done = 0;
  std::optional<ErrorCode> failure;  // set when a step aborted the run
  std::string message;
};

// Folds bf_step over steps 0..steps-1, stopping at the first failure with the
// partial map built so far. Throws InvalidArgument on mismatched signatures.
BfResult bf_run(const Presentation& left, const Presentation& right, std::uint64_t steps);

// Presentation self-check: injectivity of the first `depth` elements, and for
// every type that some later element realizes over a prefix, the extender
// returns a realizer.
bool check_presentation(const Presentation& p, std::size_t depth);

// Finite-support ternary order; seed 0 enumerates level by level in the
// canonical order, other seeds shuffle each level.
Presentation make_dlo_presentation(std::uint64_t seed);
// BIT graph; seed 0 enumerates 0, 1, 2, ...; other seeds shuffle each block
// [2^(b-1), 2^b). The extender is saturation_witness.
Presentation make_bit_presentation(std::uint64_t seed);
// Finite chain 0 < ... < n-1 with a seeded enumeration and exhaustive extender.
Presentation make_chain_presentation(std::uint64_t n, std::uint64_t seed);
// Finite graph with a seeded enumeration and exhaustive extender.
Presentation make_graph_presentation(const graphs::FiniteGraph& g, std::uint64_t seed);

}  // namespace satlab::backforth
