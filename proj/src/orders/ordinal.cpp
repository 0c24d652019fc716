#include "satlab/orders/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "satlab/error.hpp"

namespace satlab::orders {

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) {
      throw Error(ErrorCode::InvalidArgument, "ordinal coefficient must be positive");
    }
    if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent) {
      throw Error(ErrorCode::InvalidArgument, "ordinal exponents must strictly decrease");
    }
  }
}

Ordinal Ordinal::finite(std::uint64_t n) {
  if (n == 0) return Ordinal();
  return Ordinal({Term{0, n}});
}

Ordinal Ordinal::omega_power(std::uint64_t exponent, std::uint64_t coefficient) {
  return Ordinal({Term{exponent, coefficient}});
}

std::optional<std::uint64_t> Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].exponent == 0) return terms_[0].coefficient;
  return std::nullopt;
}

Ordinal Ordinal::successor() const { return *this + Ordinal::finite(1); }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw Error(ErrorCode::InvalidArgument, "predecessor of a non-successor ordinal");
  Ordinal r = *this;
  if (--r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.terms_.empty()) return a;
  const std::uint64_t lead = b.terms_.front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) out.push_back(t);
    else if (t.exponent == lead) {
      out.push_back({lead, t.coefficient + b.terms_.front().coefficient});
      break;
    } else {
      break;
    }
  }
  if (out.empty() || out.back().exponent != lead) out.push_back(b.terms_.front());
  for (std::size_t i = 1; i < b.terms_.size(); ++i) out.push_back(b.terms_[i]);
  return Ordinal(std::move(out));
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.exponent != y.exponent) return x.exponent <=> y.exponent;
    if (x.coefficient != y.coefficient) return x.coefficient <=> y.coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
    if (t.coefficient > 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    std::vector<Ordinal> summands;
    skip_space();
    summands.push_back(term());
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      skip_space();
      summands.push_back(term());
      skip_space();
    }
    if (pos_ != text_.size()) fail("trailing characters");
    Ordinal result;
    for (const auto& s : summands) result = result + s;
    return result;
  }

 private:
  Ordinal term() {
    if (pos_ < text_.size() && (text_[pos_] == 'w' || text_[pos_] == 'W')) {
      ++pos_;
      std::uint64_t exponent = 1;
      std::uint64_t coefficient = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        exponent = number();
        skip_space();
      }
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_space();
        coefficient = number();
      }
      if (coefficient == 0) return Ordinal();
      return Ordinal::omega_power(exponent, coefficient);
    }
    return Ordinal::finite(number());
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "bad ordinal '" + std::string(text_) + "': " + what +
                    " (grammar: n | w | w^e | w^e*c, joined by '+')");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse(); }

namespace {

void collect_ordinals(std::uint64_t max_exponent, std::uint64_t budget,
                      std::vector<Ordinal::Term>& prefix, const Ordinal& bound,
                      std::vector<Ordinal>& out) {
  Ordinal o(prefix);
  if (o < bound) out.push_back(std::move(o));
  for (std::uint64_t e = 0; e <= max_exponent; ++e) {
    if (!prefix.empty() && e >= prefix.back().exponent) break;
    for (std::uint64_t c = 1; (e + 1) * c <= budget; ++c) {
      prefix.push_back({e, c});
      collect_ordinals(e, budget - (e + 1) * c, prefix, bound, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Ordinal> ordinals_below(const Ordinal& bound, std::uint64_t level) {
  std::vector<Ordinal> out;
  std::vector<Ordinal::Term> prefix;
  const std::uint64_t max_exponent = level == 0 ? 0 : level - 1;
  collect_ordinals(max_exponent, level, prefix, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace satlab::orders
