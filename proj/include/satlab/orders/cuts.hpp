#pragma once

#include <optional>
#include <vector>

#include "satlab/orders/order.hpp"

namespace satlab::orders {

// A finite cut: every lower term strictly below every upper term.
class Cut {
 public:
  // Validates the terms and throws MalformedCut unless lower < upper.
  Cut(const OrderDesc& desc, std::vector<OrderTerm> lower, std::vector<OrderTerm> upper);

  const std::vector<OrderTerm>& lower() const { return lower_; }
  const std::vector<OrderTerm>& upper() const { return upper_; }

 private:
  std::vector<OrderTerm> lower_;
  std::vector<OrderTerm> upper_;
};

// Returns z with lower < {z} < upper. For the ternary order and for
// lexicographic powers with room above the supports, a point just above the
// lower maximum is that maximum with +1 (resp. a value above the default)
// appended at the least position past both bounding supports; a point just
// below the upper minimum appends -1 (resp. a value below the default).
// Throws EmptyOrderBetween when the order has no point in the cut.
OrderTerm realize_cut(const OrderDesc& desc, const Cut& cut);

// Same, for the cut bounded by at most one term on each side.
OrderTerm realize_between(const OrderDesc& desc, const OrderTerm* below, const OrderTerm* above);

struct Gap {
  std::optional<OrderTerm> below;  // greatest element of the lower side
  std::optional<OrderTerm> above;  // least element of the upper side
  std::optional<OrderTerm> witness;
};

struct PatchReport {
  bool patched = true;
  std::vector<Gap> gaps;  // every gap of A in canonical (ascending) order
  std::optional<Cut> counterexample;
};

// Whether every cut a0 < a1 of A is filled by some b in B. For finite A it
// suffices to check the gaps between consecutive elements plus, unless
// `strict_gaps`, the two endpoint gaps. The counterexample is the first
// unfilled gap, reported by its bounding elements.
PatchReport patches_check(const OrderDesc& desc, const std::vector<OrderTerm>& b,
                          const std::vector<OrderTerm>& a, bool strict_gaps = false);

// Least upper bound of a nonempty set of pairs in the lexicographic product
// of two finite orders, by the maximum-of-projection case split.
OrderTerm lub_product(const OrderDesc& outer, const OrderDesc& inner, const std::vector<OrderTerm>& s);
// Greatest lower bound, computed as the lub in prod(rev(outer), rev(inner)).
OrderTerm glb_product(const OrderDesc& outer, const OrderDesc& inner, const std::vector<OrderTerm>& s);

// Least element of a finite order that is >= every element of `s`.
OrderTerm least_upper_bound(const OrderDesc& desc, const std::vector<OrderTerm>& s);

}  // namespace satlab::orders
