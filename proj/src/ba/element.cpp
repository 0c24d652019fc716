#include "satlab/ba/element.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "satlab/error.hpp"

namespace satlab::ba {

namespace {

using Table = BAElem::Words;
using Support = BAElem::Support;

Table make_table(std::size_t vars) { return Table(std::max<std::size_t>(1, (std::uint64_t{1} << vars) / 64), 0); }

std::uint64_t last_word_mask(std::size_t vars) {
  return vars >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << vars)) - 1;
}

bool get(const Table& t, std::uint64_t i) { return (t[i >> 6] >> (i & 63)) & 1u; }
void set(Table& t, std::uint64_t i) { t[i >> 6] |= std::uint64_t{1} << (i & 63); }

// Re-indexes a table over `from` to a table over the superset `to`.
Table expand(const Table& t, const Support& from, const Support& to) {
  if (from == to) return t;
  boost::container::small_vector<std::size_t, BAElem::kMaxSupport> pos;
  for (auto g : from) pos.push_back(std::lower_bound(to.begin(), to.end(), g) - to.begin());
  const std::uint64_t rows = std::uint64_t{1} << to.size();
  if (rows <= 64) {
    // Insert each missing generator in turn by doubling blocks of rows.
    std::uint64_t word = t[0];
    std::size_t vars = pos.size();
    std::size_t next = 0;
    for (std::size_t p = 0; p < to.size(); ++p) {
      if (next < pos.size() && pos[next] == p) {
        ++next;
        continue;
      }
      const std::uint64_t block = std::uint64_t{1} << p;
      const std::uint64_t mask = (std::uint64_t{1} << block) - 1;
      std::uint64_t out = 0;
      for (std::uint64_t j = 0; j < ((std::uint64_t{1} << vars) >> p); ++j) {
        const std::uint64_t chunk = (word >> (j * block)) & mask;
        out |= (chunk << (2 * j * block)) | (chunk << (2 * j * block + block));
      }
      word = out;
      ++vars;
    }
    return Table(1, word);
  }
  Table out = make_table(to.size());
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) s |= ((r >> pos[i]) & 1u) << i;
    if (get(t, s)) set(out, r);
  }
  return out;
}

Support merged(const Support& a, const Support& b) {
  if (a == b || b.empty()) return a;
  if (a.empty()) return b;
  Support out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() > BAElem::kMaxSupport) {
    throw Error(ErrorCode::TooLarge, "support of " + std::to_string(out.size()) + " generators exceeds the limit of " +
                                         std::to_string(BAElem::kMaxSupport));
  }
  return out;
}

}  // namespace

BAElem BAElem::one() {
  BAElem x;
  x.table_[0] = 1;
  return x;
}

BAElem BAElem::var(std::uint32_t k) {
  BAElem x;
  x.support_ = {k};
  x.table_[0] = 0b10;
  return x;
}

BAElem BAElem::from_table(const std::vector<std::uint32_t>& support, const std::vector<bool>& rows) {
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw Error(ErrorCode::InvalidArgument, "support must be sorted and duplicate-free");
  }
  if (support.size() > kMaxSupport) throw Error(ErrorCode::TooLarge, "support too large");
  if (rows.size() != (std::uint64_t{1} << support.size())) {
    throw Error(ErrorCode::InvalidArgument, "truth table needs 2^|support| rows");
  }
  BAElem x;
  x.support_.assign(support.begin(), support.end());
  x.table_ = make_table(x.support_.size());
  for (std::uint64_t r = 0; r < rows.size(); ++r) {
    if (rows[r]) set(x.table_, r);
  }
  x.canonicalize();
  return x;
}

void BAElem::canonicalize() {
  // Rows with bit i clear, for single-word tables.
  static constexpr std::uint64_t kClear[6] = {0x5555555555555555, 0x3333333333333333, 0x0F0F0F0F0F0F0F0F,
                                              0x00FF00FF00FF00FF, 0x0000FFFF0000FFFF, 0x00000000FFFFFFFF};
  for (std::size_t i = support_.size(); i-- > 0;) {
    if (support_.size() <= 6) {
      const std::uint64_t w = table_[0];
      const std::uint64_t rows_mask = last_word_mask(support_.size());
      if ((((w >> (std::uint64_t{1} << i)) ^ w) & kClear[i] & rows_mask) != 0) continue;
      const std::uint64_t low = (std::uint64_t{1} << i) - 1;
      std::uint64_t out = 0;
      for (std::uint64_t r = 0; r < row_count() / 2; ++r) {
        out |= ((w >> ((r & low) | ((r & ~low) << 1))) & 1u) << r;
      }
      table_[0] = out;
      support_.erase(support_.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    const std::uint64_t rows = row_count();
    bool depends = false;
    for (std::uint64_t r = 0; r < rows && !depends; ++r) {
      if (!((r >> i) & 1u)) depends = get(table_, r) != get(table_, r | (std::uint64_t{1} << i));
    }
    if (depends) continue;
    Table t = make_table(support_.size() - 1);
    const std::uint64_t low = (std::uint64_t{1} << i) - 1;
    for (std::uint64_t r = 0; r < rows / 2; ++r) {
      const std::uint64_t src = (r & low) | ((r & ~low) << 1);
      if (get(table_, src)) set(t, r);
    }
    table_ = std::move(t);
    support_.erase(support_.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

bool BAElem::is_zero() const { return support_.empty() && table_[0] == 0; }
bool BAElem::is_one() const { return support_.empty() && table_[0] == 1; }

bool BAElem::eval(const std::vector<std::uint32_t>& true_gens) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (std::find(true_gens.begin(), true_gens.end(), support_[i]) != true_gens.end()) r |= std::uint64_t{1} << i;
  }
  return row(r);
}

BAElem BAElem::cofactor(std::uint32_t k, bool value) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), k);
  if (it == support_.end() || *it != k) return *this;
  const std::size_t i = it - support_.begin();
  BAElem out;
  out.support_ = support_;
  out.support_.erase(out.support_.begin() + static_cast<std::ptrdiff_t>(i));
  out.table_ = make_table(out.support_.size());
  const std::uint64_t low = (std::uint64_t{1} << i) - 1;
  for (std::uint64_t r = 0; r < out.row_count(); ++r) {
    const std::uint64_t src = (r & low) | ((r & ~low) << 1) | (value ? std::uint64_t{1} << i : 0);
    if (get(table_, src)) set(out.table_, r);
  }
  out.canonicalize();
  return out;
}

namespace {


}  // namespace

BAElem BAElem::combine(const BAElem& x, const BAElem& y, int op) {
  BAElem out;
  if (x.support_ == y.support_) {
    out.support_ = x.support_;
    out.table_ = x.table_;
    for (std::size_t w = 0; w < out.table_.size(); ++w) {
      out.table_[w] = op == 0 ? (out.table_[w] & y.table_[w]) : (out.table_[w] | y.table_[w]);
    }
  } else {
    out.support_ = merged(x.support_, y.support_);
    const Table tx = expand(x.table_, x.support_, out.support_);
    const Table ty = expand(y.table_, y.support_, out.support_);
    out.table_ = tx;
    for (std::size_t w = 0; w < out.table_.size(); ++w) {
      out.table_[w] = op == 0 ? (tx[w] & ty[w]) : (tx[w] | ty[w]);
    }
  }
  out.canonicalize();
  return out;
}

BAElem operator&(const BAElem& x, const BAElem& y) {
  if (x.is_zero() || y.is_one()) return x;
  if (y.is_zero() || x.is_one()) return y;
  return BAElem::combine(x, y, 0);
}

BAElem operator|(const BAElem& x, const BAElem& y) {
  if (x.is_one() || y.is_zero()) return x;
  if (y.is_one() || x.is_zero()) return y;
  return BAElem::combine(x, y, 1);
}

BAElem operator~(const BAElem& x) {
  BAElem out = x;
  const std::uint64_t mask = last_word_mask(x.support_.size());
  for (auto& w : out.table_) w = ~w & mask;
  return out;
}

bool leq(const BAElem& x, const BAElem& y) {
  if (x.is_zero() || y.is_one()) return true;
  if (x.support_ == y.support_) {
    for (std::size_t w = 0; w < x.table_.size(); ++w) {
      if (x.table_[w] & ~y.table_[w]) return false;
    }
    return true;
  }
  const auto support = merged(x.support_, y.support_);
  const Table tx = expand(x.table_, x.support_, support);
  const Table ty = expand(y.table_, y.support_, support);
  for (std::size_t w = 0; w < tx.size(); ++w) {
    if (tx[w] & ~ty[w]) return false;
  }
  return true;
}

bool less(const BAElem& x, const BAElem& y) { return x != y && leq(x, y); }
bool disjoint(const BAElem& x, const BAElem& y) { return (x & y).is_zero(); }

std::uint32_t fresh_index(const std::vector<BAElem>& elems) {
  std::uint32_t k = 0;
  for (const auto& e : elems) k = std::max(k, e.fresh_index());
  return k;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BAElem parse() {
    BAElem x = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return x;
  }

 private:
  BAElem expr() {
    BAElem x = term();
    while (accept('|')) x = x | term();
    return x;
  }
  BAElem term() {
    BAElem x = factor();
    while (accept('&')) x = x & factor();
    return x;
  }
  BAElem factor() {
    skip();
    if (accept('~')) return ~factor();
    if (accept('(')) {
      BAElem x = expr();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (accept('0')) return BAElem::zero();
    if (accept('1')) return BAElem::one();
    if (accept('v')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 9) fail("expected a generator index after 'v'");
      return BAElem::var(static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("expected '~', '(', 0, 1 or a generator");
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                                           "' (grammar: E := T ('|' T)*, T := F ('&' F)*, F := ~F | (E) | 0 | 1 | v<k>)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Implicant over the support: `care` bits fixed to `value`.
struct Implicant {
  std::uint64_t care;
  std::uint64_t value;
  friend auto operator<=>(const Implicant&, const Implicant&) = default;
};

constexpr std::size_t kPrimeLimit = 12;

std::vector<Implicant> prime_cover(const BAElem& x) {
  const std::size_t n = x.support().size();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::set<Implicant> current;
  for (std::uint64_t r = 0; r < x.row_count(); ++r) {
    if (x.row(r)) current.insert({all, r});
  }
  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::set<Implicant> next;
    std::set<Implicant> used;
    for (const auto& imp : current) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(imp.care & bit) || (imp.value & bit)) continue;
        const Implicant other{imp.care, imp.value | bit};
        if (current.count(other)) {
          next.insert({imp.care & ~bit, imp.value});
          used.insert(imp);
          used.insert(other);
        }
      }
    }
    for (const auto& imp : current) {
      if (!used.count(imp)) primes.push_back(imp);
    }
    current = std::move(next);
  }
  std::set<std::uint64_t> uncovered;
  for (std::uint64_t r = 0; r < x.row_count(); ++r) {
    if (x.row(r)) uncovered.insert(r);
  }
  auto covers = [](const Implicant& imp, std::uint64_t r) { return (r & imp.care) == imp.value; };
  std::vector<Implicant> chosen;
  while (!uncovered.empty()) {
    const Implicant* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& p : primes) {
      std::size_t c = 0;
      for (auto r : uncovered) c += covers(p, r);
      const bool better = c > best_count ||
                          (c == best_count && c > 0 &&
                           std::make_tuple(__builtin_popcountll(p.care), p) <
                               std::make_tuple(__builtin_popcountll(best->care), *best));
      if (better) {
        best = &p;
        best_count = c;
      }
    }
    chosen.push_back(*best);
    for (auto it = uncovered.begin(); it != uncovered.end();) {
      it = covers(*best, *it) ? uncovered.erase(it) : std::next(it);
    }
  }
  return chosen;
}

std::string literal(std::uint32_t g, bool positive) { return (positive ? "v" : "~v") + std::to_string(g); }

std::string format_primes(const BAElem& x) {
  const auto& s = x.support();
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> products;
  for (const auto& imp : prime_cover(x)) {
    std::vector<std::pair<std::uint32_t, bool>> lits;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((imp.care >> i) & 1u) lits.emplace_back(s[i], !((imp.value >> i) & 1u));
    }
    products.push_back(std::move(lits));
  }
  std::sort(products.begin(), products.end());
  std::string out;
  for (const auto& lits : products) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i > 0) out += " & ";
      out += literal(lits[i].first, !lits[i].second);
    }
  }
  return out;
}

// Shannon expansion on the largest generator, for wide supports.
std::string format_shannon(const BAElem& x) {
  if (x.is_zero()) return "0";
  if (x.is_one()) return "1";
  if (x.support().size() <= kPrimeLimit) return "(" + format_primes(x) + ")";
  const std::uint32_t g = x.support().back();
  const BAElem hi = x.cofactor(g, true);
  const BAElem lo = x.cofactor(g, false);
  std::string out;
  if (!hi.is_zero()) out += hi.is_one() ? literal(g, true) : literal(g, true) + " & " + format_shannon(hi);
  if (!lo.is_zero()) {
    if (!out.empty()) out += " | ";
    out += lo.is_one() ? literal(g, false) : literal(g, false) + " & " + format_shannon(lo);
  }
  return "(" + out + ")";
}

}  // namespace

BAElem parse_term(std::string_view text) { return Parser(text).parse(); }

std::string format_term(const BAElem& x) {
  if (x.is_zero()) return "0";
  if (x.is_one()) return "1";
  if (x.support().size() <= kPrimeLimit) return format_primes(x);
  return format_shannon(x);
}

}  // namespace satlab::ba
