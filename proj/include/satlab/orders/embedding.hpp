#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satlab/orders/order.hpp"

namespace satlab::orders {

// Finite strictly increasing map between two orders. `pairs` is sorted by the
// domain order.
struct OrderEmbedding {
  OrderDesc domain;
  OrderDesc codomain;
  std::vector<std::pair<OrderTerm, OrderTerm>> pairs;

  // Checks validity of every term and strict monotonicity on all pairs.
  bool verify() const;
  std::optional<OrderTerm> image(const OrderTerm& x) const;
};

// Lexicographically least embedding of the finite order X into Y, if one
// exists among the first `size_bound` enumerated elements of Y.
// Throws InvalidArgument for infinite X and BoundTooSmall when the truncated
// enumeration of Y cannot decide.
std::optional<OrderEmbedding> embed_search(const OrderDesc& x, const OrderDesc& y, std::uint64_t size_bound);

// L^k with the least element of L as default.
OrderDesc finite_power(const OrderDesc& l, std::uint64_t k);

// Least k with X embedding into L^k. Throws BaseTooSmall when |L| < 2.
std::uint64_t ldim(const OrderDesc& x, const OrderDesc& l);

// Embeds A u B into L^(a+1+b) given iA: A -> L^a and iB: B -> L^b. Both input
// embeddings have `ambient` as domain; their codomains are finite powers of a
// common base. Throws NoSeparatingPoint when L^(a+1) has no room for a
// selector image.
OrderEmbedding merge_union_embedding(const OrderDesc& ambient, const std::vector<OrderTerm>& a,
                                     const std::vector<OrderTerm>& b, const OrderEmbedding& ia,
                                     const OrderEmbedding& ib);

// Embeds the lexicographic 2^depth (as lexpow(fin:2,depth,0)) into the open
// interval (a0, a1) of `desc`, stage by stage: x^0 keeps the image of x and
// x^1 gets a new point just above it. Throws MalformedInterval if a0 >= a1.
OrderEmbedding grow_binary(const OrderDesc& desc, const OrderTerm& a0, const OrderTerm& a1, std::uint64_t depth);

inline constexpr std::uint64_t kMaxGrowDepth = 16;

}  // namespace satlab::orders
