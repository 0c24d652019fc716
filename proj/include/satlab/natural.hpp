#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace satlab {

// Arbitrary-precision natural number. Only the operations the BIT and
// Ackermann machinery needs are exposed; every value is non-negative.
class Natural {
 public:
  using Repr = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t value) : value_(value) {}  // NOLINT: implicit by intent

  // Parses a decimal string (digits only).
  static Natural parse(std::string_view text);
  // 2^bit.
  static Natural power_of_two(std::size_t bit);
  // Sum of 2^b over the given bit positions (duplicates ignored).
  static Natural from_bits(std::span<const std::size_t> bits);

  bool bit(std::size_t index) const { return boost::multiprecision::bit_test(value_, index); }
  bool is_zero() const { return value_.is_zero(); }
  // Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  // Positions of the set bits, ascending.
  std::vector<std::size_t> set_bits() const;
  std::optional<std::uint64_t> to_u64() const;
  std::string to_string() const { return value_.str(); }

  Natural& set_bit(std::size_t index);
  Natural& clear_bit(std::size_t index);

  friend Natural operator+(const Natural& a, const Natural& b) {
    return wrap(a.value_ + b.value_);
  }
  friend Natural operator|(const Natural& a, const Natural& b) { return wrap(a.value_ | b.value_); }
  friend Natural operator&(const Natural& a, const Natural& b) { return wrap(a.value_ & b.value_); }
  friend Natural operator<<(const Natural& a, std::size_t k) { return wrap(a.value_ << k); }
  friend Natural operator>>(const Natural& a, std::size_t k) { return wrap(a.value_ >> k); }
  // Low `k` bits.
  Natural low_bits(std::size_t k) const { return wrap(value_ & ((Repr(1) << k) - 1)); }

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const Repr& repr() const { return value_; }

 private:
  static Natural wrap(Repr v) {
    Natural r;
    r.value_ = std::move(v);
    return r;
  }
  Repr value_;
};

}  // namespace satlab

template <>
struct std::hash<satlab::Natural> {
  std::size_t operator()(const satlab::Natural& n) const noexcept {
    return boost::multiprecision::hash_value(n.repr());
  }
};
