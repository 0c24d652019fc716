#include "satlab/natural.hpp"

#include <cctype>

#include "satlab/error.hpp"

namespace satlab {

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "expected a natural number, got empty text");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "expected a natural number, got '" + std::string(text) + "'");
    }
  }
  Natural n;
  n.value_ = Repr(std::string(text));
  return n;
}

Natural Natural::power_of_two(std::size_t bit) {
  Natural n;
  boost::multiprecision::bit_set(n.value_, bit);
  return n;
}

Natural Natural::from_bits(std::span<const std::size_t> bits) {
  Natural n;
  for (std::size_t b : bits) boost::multiprecision::bit_set(n.value_, b);
  return n;
}

std::size_t Natural::bit_length() const {
  if (value_.is_zero()) return 0;
  return boost::multiprecision::msb(value_) + 1;
}

std::vector<std::size_t> Natural::set_bits() const {
  std::vector<std::size_t> out;
  if (value_.is_zero()) return out;
  const std::size_t top = boost::multiprecision::msb(value_);
  const std::size_t low = boost::multiprecision::lsb(value_);
  for (std::size_t i = low; i <= top; ++i) {
    if (boost::multiprecision::bit_test(value_, i)) out.push_back(i);
  }
  return out;
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (bit_length() > 64) return std::nullopt;
  return value_.convert_to<std::uint64_t>();
}

Natural& Natural::set_bit(std::size_t index) {
  boost::multiprecision::bit_set(value_, index);
  return *this;
}

Natural& Natural::clear_bit(std::size_t index) {
  boost::multiprecision::bit_unset(value_, index);
  return *this;
}

}  // namespace satlab
