#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satlab/natural.hpp"

namespace satlab::hf {

// Hereditarily finite set in canonical form: children sorted by Ackermann code
// without repetition. Values are immutable and share structure.
class HFSet {
 public:
  HFSet();  // the empty set
  // Sorts and deduplicates.
  static HFSet of(std::vector<HFSet> children);

  const std::vector<HFSet>& children() const { return node_->children; }
  // The code is materialized only while every member code is below 2^24
  // (always the case up to rank 6); code() throws TooLarge otherwise.
  bool has_code() const { return node_->code.has_value(); }
  const Natural& code() const;
  std::size_t rank() const { return node_->rank; }
  std::size_t size() const { return node_->children.size(); }
  bool empty() const { return node_->children.empty(); }
  bool contains(const HFSet& y) const;

  // Order of Ackermann codes, decided structurally when codes are missing.
  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b);
  friend bool operator==(const HFSet& a, const HFSet& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    std::vector<HFSet> children;
    std::optional<Natural> code = Natural(0);
    std::size_t rank = 0;
  };
  explicit HFSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// code(x) = sum over y in x of 2^code(y). Throws TooLarge when the code is
// not materialized.
Natural encode(const HFSet& x);
HFSet decode(const Natural& code);

// Brace notation: `{}`, `{{},{{}}}`; `#<code>` stands for decode(code) at any
// depth. Whitespace is ignored. Errors are ParseError.
HFSet parse_hf(std::string_view text);
// Sets of rank above `max_rank` print as `#<code>` when they have a code.
inline constexpr std::size_t kMaxPrintRank = 6;
std::string format_hf(const HFSet& x, std::size_t max_rank = kMaxPrintRank);

}  // namespace satlab::hf
