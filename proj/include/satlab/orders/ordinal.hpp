#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satlab::orders {

// An ordinal below omega^omega in Cantor normal form:
//   w^e1*c1 + w^e2*c2 + ...   with e1 > e2 > ... and every ci > 0.
// The empty term list is 0.
class Ordinal {
 public:
  struct Term {
    std::uint64_t exponent = 0;
    std::uint64_t coefficient = 1;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Ordinal() = default;
  // Throws InvalidArgument unless exponents strictly decrease and coefficients are positive.
  explicit Ordinal(std::vector<Term> terms);

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega_power(std::uint64_t exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const { return !terms_.empty() && terms_.back().exponent == 0; }
  bool is_limit() const { return !terms_.empty() && !is_successor(); }
  std::optional<std::uint64_t> finite_value() const;

  Ordinal successor() const;
  // Defined only for successor ordinals.
  Ordinal predecessor() const;

  // Ordinal (non-commutative) addition.
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  // Text form: "0", "7", "w", "w^2", "w^2*3+w+5".
  std::string to_string() const;
  static Ordinal parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

// Every ordinal o < bound with weight sum((e+1)*c) <= level, ascending. The
// sets grow with `level` and exhaust the ordinals below `bound` in the limit.
std::vector<Ordinal> ordinals_below(const Ordinal& bound, std::uint64_t level);

}  // namespace satlab::orders
