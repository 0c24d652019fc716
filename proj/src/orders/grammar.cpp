#include "satlab/orders/grammar.hpp"

#include <cctype>
#include <charconv>

#include "satlab/error.hpp"

namespace satlab::orders {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }
  std::uint64_t number() {
    skip_space();
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  // Text up to the next top-level character in `stops`.
  std::string_view until_any(std::string_view stops) {
    skip_space();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "cannot parse '" + std::string(text_) + "' at offset " +
                                           std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

OrderDesc desc_rule(Cursor& c);
OrderTerm term_rule(const OrderDesc& desc, Cursor& c);

OrderDesc desc_rule(Cursor& c) {
  if (c.consume("fin:")) return OrderDesc::finite(c.number());
  if (c.consume("rev(")) {
    OrderDesc inner = desc_rule(c);
    c.expect(")");
    return OrderDesc::reverse(std::move(inner));
  }
  if (c.consume("sum(")) {
    OrderDesc l = desc_rule(c);
    c.expect(",");
    OrderDesc r = desc_rule(c);
    c.expect(")");
    return OrderDesc::sum(std::move(l), std::move(r));
  }
  if (c.consume("prod(")) {
    OrderDesc a = desc_rule(c);
    c.expect(",");
    OrderDesc b = desc_rule(c);
    c.expect(")");
    return OrderDesc::product(std::move(a), std::move(b));
  }
  if (c.consume("lexpow(")) {
    OrderDesc base = desc_rule(c);
    c.expect(",");
    Ordinal exponent = Ordinal::parse(c.until_any(","));
    c.expect(",");
    OrderTerm def = term_rule(base, c);
    c.expect(")");
    return OrderDesc::lexpow(std::move(base), std::move(exponent), std::move(def));
  }
  if (c.consume("tern")) return OrderDesc::ternary();
  c.fail("expected fin:N, rev(D), sum(D,D), prod(D,D), lexpow(D,ORD,T) or tern");
}

OrderTerm term_rule(const OrderDesc& desc, Cursor& c) {
  if (desc.is<FiniteOrder>()) return OrderTerm::index(c.number());
  if (desc.is<ReverseOrder>()) {
    c.expect("rev(");
    OrderTerm t = term_rule(*desc.as<ReverseOrder>().inner, c);
    c.expect(")");
    return OrderTerm::reversed(std::move(t));
  }
  if (desc.is<SumOrder>()) {
    const auto& s = desc.as<SumOrder>();
    if (c.consume("l(")) {
      OrderTerm t = term_rule(*s.left, c);
      c.expect(")");
      return OrderTerm::left(std::move(t));
    }
    c.expect("r(");
    OrderTerm t = term_rule(*s.right, c);
    c.expect(")");
    return OrderTerm::right(std::move(t));
  }
  if (desc.is<ProductOrder>()) {
    const auto& p = desc.as<ProductOrder>();
    c.expect("(");
    OrderTerm a = term_rule(*p.outer, c);
    c.expect(",");
    OrderTerm b = term_rule(*p.inner, c);
    c.expect(")");
    return OrderTerm::pair(std::move(a), std::move(b));
  }
  if (desc.is<LexPowerOrder>()) {
    const auto& p = desc.as<LexPowerOrder>();
    c.expect("{");
    std::vector<PowerEntry> entries;
    if (!c.consume("}")) {
      do {
        Ordinal pos = Ordinal::parse(c.until_any(":"));
        c.expect(":");
        entries.push_back({std::move(pos), term_rule(*p.base, c)});
      } while (c.consume(","));
      c.expect("}");
    }
    return OrderTerm::power(std::move(entries));
  }
  // Ternary.
  c.consume("tern");
  c.expect("{");
  std::map<std::uint64_t, int> support;
  if (!c.consume("}")) {
    do {
      const std::uint64_t pos = c.number();
      c.expect(":");
      int v = 0;
      if (c.consume("+")) v = 1;
      else if (c.consume("-")) v = -1;
      else c.fail("expected + or -");
      c.consume("1");
      if (!support.emplace(pos, v).second) c.fail("duplicate position");
    } while (c.consume(","));
    c.expect("}");
  }
  return OrderTerm::ternary(std::move(support));
}

}  // namespace

OrderDesc parse_desc(std::string_view text) {
  Cursor c(text);
  OrderDesc d = desc_rule(c);
  if (!c.at_end()) c.fail("trailing characters");
  return d;
}

OrderTerm parse_term(const OrderDesc& desc, std::string_view text) {
  Cursor c(text);
  OrderTerm t = term_rule(desc, c);
  if (!c.at_end()) c.fail("trailing characters");
  validate(desc, t);
  return t;
}

std::vector<OrderTerm> parse_term_list(const OrderDesc& desc, std::string_view text) {
  std::vector<OrderTerm> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char ch : piece) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (!blank) out.push_back(parse_term(desc, piece));
    start = end + 1;
  }
  return out;
}

std::string format_desc(const OrderDesc& desc) {
  if (desc.is<FiniteOrder>()) return "fin:" + std::to_string(desc.as<FiniteOrder>().size);
  if (desc.is<ReverseOrder>()) return "rev(" + format_desc(*desc.as<ReverseOrder>().inner) + ")";
  if (desc.is<SumOrder>()) {
    const auto& s = desc.as<SumOrder>();
    return "sum(" + format_desc(*s.left) + "," + format_desc(*s.right) + ")";
  }
  if (desc.is<ProductOrder>()) {
    const auto& p = desc.as<ProductOrder>();
    return "prod(" + format_desc(*p.outer) + "," + format_desc(*p.inner) + ")";
  }
  if (desc.is<LexPowerOrder>()) {
    const auto& p = desc.as<LexPowerOrder>();
    return "lexpow(" + format_desc(*p.base) + "," + p.exponent.to_string() + "," +
           format_term(*p.default_value) + ")";
  }
  return "tern";
}

std::string format_term(const OrderTerm& term) {
  if (term.is<IndexTerm>()) return std::to_string(term.as<IndexTerm>().index);
  if (term.is<ReversedTerm>()) return "rev(" + format_term(*term.as<ReversedTerm>().inner) + ")";
  if (term.is<SideTerm>()) {
    const auto& s = term.as<SideTerm>();
    return std::string(s.side == Side::Left ? "l(" : "r(") + format_term(*s.inner) + ")";
  }
  if (term.is<PairTerm>()) {
    const auto& p = term.as<PairTerm>();
    return "(" + format_term(*p.outer) + "," + format_term(*p.inner) + ")";
  }
  if (term.is<PowerTerm>()) {
    std::string out = "{";
    bool first = true;
    for (const auto& e : term.as<PowerTerm>().support) {
      if (!first) out += ',';
      first = false;
      out += e.position.to_string() + ":" + format_term(*e.value);
    }
    return out + "}";
  }
  std::string out = "tern{";
  bool first = true;
  for (const auto& [pos, v] : term.as<TernaryTerm>().support) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(pos) + (v > 0 ? ":+" : ":-");
  }
  return out + "}";
}

std::string format_term_list(const std::vector<OrderTerm>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ';';
    out += format_term(terms[i]);
  }
  return out;
}

}  // namespace satlab::orders
