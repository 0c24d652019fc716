#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace satlab::ba {

// Element of the free Boolean algebra on generators v0, v1, ... (the
// countable atomless algebra): a truth table over its minimal support.
class BAElem {
 public:
  using Support = boost::container::small_vector<std::uint32_t, 6>;
  using Words = boost::container::small_vector<std::uint64_t, 1>;

  // Table size limit: supports hold at most this many generators.
  static constexpr std::size_t kMaxSupport = 24;

  BAElem() : table_(1, 0) {}  // zero
  static BAElem zero() { return {}; }
  static BAElem one();
  static BAElem var(std::uint32_t k);
  // `support` sorted and duplicate-free; bit i of a row index is the value of
  // support[i]. Drops generators the table does not depend on.
  static BAElem from_table(const std::vector<std::uint32_t>& support, const std::vector<bool>& rows);

  const Support& support() const { return support_; }
  bool row(std::uint64_t index) const { return (table_[index >> 6] >> (index & 63)) & 1u; }
  std::uint64_t row_count() const { return std::uint64_t{1} << support_.size(); }
  bool is_zero() const;
  bool is_one() const;
  // Value under the assignment that sets exactly the generators in `true_gens`.
  bool eval(const std::vector<std::uint32_t>& true_gens) const;
  // f with generator k fixed to `value`.
  BAElem cofactor(std::uint32_t k, bool value) const;
  // Least generator index above the support.
  std::uint32_t fresh_index() const { return support_.empty() ? 0 : support_.back() + 1; }

  friend BAElem operator&(const BAElem& x, const BAElem& y);
  friend BAElem operator|(const BAElem& x, const BAElem& y);
  friend BAElem operator~(const BAElem& x);

  friend bool leq(const BAElem& x, const BAElem& y);
  friend bool operator==(const BAElem&, const BAElem&) = default;
  // Structural order for containers.
  friend std::strong_ordering operator<=>(const BAElem&, const BAElem&) = default;

 private:
  Support support_;
  Words table_;
  void canonicalize();
  // Word-wise and (op 0) or or (op 1) over the union of the supports.
  static BAElem combine(const BAElem& x, const BAElem& y, int op);
};

inline BAElem meet(const BAElem& x, const BAElem& y) { return x & y; }
inline BAElem join(const BAElem& x, const BAElem& y) { return x | y; }
inline BAElem complement(const BAElem& x) { return ~x; }
bool leq(const BAElem& x, const BAElem& y);
bool less(const BAElem& x, const BAElem& y);
bool disjoint(const BAElem& x, const BAElem& y);
std::uint32_t fresh_index(const std::vector<BAElem>& elems);

// Grammar: E := T ('|' T)*, T := F ('&' F)*, F := '~' F | '(' E ')' | 0 | 1 | v<k>.
BAElem parse_term(std::string_view text);
// Sum of prime implicants; parses back to an equal element.
std::string format_term(const BAElem& x);

}  // namespace satlab::ba
