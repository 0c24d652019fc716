#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satlab/orders/order.hpp"

namespace satlab::oracles {

// Elements of a finite descriptor in increasing order, built directly from
// the definitions of each construction (no use of cmp).
std::vector<orders::OrderTerm> ranked_elements(const orders::OrderDesc& desc);

// Position of `t` in `ranked`, or -1.
long rank_of(const std::vector<orders::OrderTerm>& ranked, const orders::OrderTerm& t);

// Dense lexicographic comparison of two ternary terms.
int ternary_compare(const orders::TernaryTerm& x, const orders::TernaryTerm& y);

// Least upper bound by scanning every upper bound.
std::optional<orders::OrderTerm> brute_lub(const std::vector<orders::OrderTerm>& ranked,
                                           const std::vector<orders::OrderTerm>& s);

// Lexicographically least increasing injection {0..n-1} -> {0..m-1} found by
// exhaustive search over index combinations.
std::optional<std::vector<std::size_t>> brute_embedding(std::size_t n, std::size_t m);

// Least k with some increasing injection into L^k, by exhaustive search.
std::uint64_t brute_ldim(std::size_t n, std::size_t base);

// Def.-level patch check over every split a0 < a1 of A (A given by ranks).
// Returns true when each split has a b strictly between.
bool brute_patches(const std::vector<long>& b_ranks, const std::vector<long>& a_ranks, bool strict_gaps);

}  // namespace satlab::oracles
