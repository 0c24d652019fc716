#include "satlab/hf/hfset.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "satlab/error.hpp"

namespace satlab::hf {

namespace {

constexpr std::uint64_t kMaxChildCode = std::uint64_t{1} << 24;

}  // namespace

HFSet::HFSet() {
  static const auto empty = std::make_shared<const Node>();
  node_ = empty;
}

HFSet HFSet::of(std::vector<HFSet> children) {
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  Node node;
  for (const auto& c : children) {
    node.rank = std::max(node.rank, c.rank() + 1);
    if (!node.code) continue;
    const auto bit = c.has_code() ? c.code().to_u64() : std::nullopt;
    if (!bit || *bit >= kMaxChildCode) {
      node.code.reset();
    } else {
      node.code->set_bit(*bit);
    }
  }
  node.children = std::move(children);
  return HFSet(std::make_shared<const Node>(std::move(node)));
}

const Natural& HFSet::code() const {
  if (!node_->code) throw Error(ErrorCode::TooLarge, "Ackermann code of a rank " + std::to_string(rank()) +
                                                         " set is too large to materialize");
  return *node_->code;
}

std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.has_code() && b.has_code()) return a.code() <=> b.code();
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  // Codes compare at the largest member in which they differ.
  auto i = a.children().rbegin();
  auto j = b.children().rbegin();
  for (; i != a.children().rend() && j != b.children().rend(); ++i, ++j) {
    if (const auto c = *i <=> *j; c != 0) return c;
  }
  if (i != a.children().rend()) return std::strong_ordering::greater;
  if (j != b.children().rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool HFSet::contains(const HFSet& y) const {
  return std::binary_search(children().begin(), children().end(), y);
}

Natural encode(const HFSet& x) { return x.code(); }

namespace {

HFSet decode_memo(const Natural& code, std::map<std::size_t, HFSet>& memo) {
  std::vector<HFSet> children;
  for (std::size_t bit : code.set_bits()) {
    auto it = memo.find(bit);
    if (it == memo.end()) it = memo.emplace(bit, decode_memo(Natural(bit), memo)).first;
    children.push_back(it->second);
  }
  return HFSet::of(std::move(children));
}

}  // namespace

HFSet decode(const Natural& code) {
  std::map<std::size_t, HFSet> memo;
  return decode_memo(code, memo);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  HFSet parse() {
    HFSet x = set();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return x;
  }

 private:
  HFSet set() {
    skip();
    if (peek() == '#') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a code after '#'");
      return decode(Natural::parse(text_.substr(start, pos_ - start)));
    }
    if (peek() != '{') fail("expected '{' or '#'");
    ++pos_;
    std::vector<HFSet> children;
    skip();
    if (peek() == '}') {
      ++pos_;
      return HFSet();
    }
    while (true) {
      children.push_back(set());
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == '}') {
        ++pos_;
        break;
      }
      fail("expected ',' or '}'");
    }
    return HFSet::of(std::move(children));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                                           "' (grammar: S := {} | {S,...} | #code)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const HFSet& x, std::size_t max_rank, std::string& out) {
  if (x.rank() > max_rank && x.has_code()) {
    out += "#" + x.code().to_string();
    return;
  }
  out += '{';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    format_into(x.children()[i], max_rank, out);
  }
  out += '}';
}

}  // namespace

HFSet parse_hf(std::string_view text) { return Parser(text).parse(); }

std::string format_hf(const HFSet& x, std::size_t max_rank) {
  std::string out;
  format_into(x, max_rank, out);
  return out;
}

}  // namespace satlab::hf
