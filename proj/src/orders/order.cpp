#include "satlab/orders/order.hpp"

#include <algorithm>

#include "satlab/error.hpp"
#include "satlab/orders/grammar.hpp"

namespace satlab::orders {

bool operator==(const SideTerm& a, const SideTerm& b) { return a.side == b.side && a.inner == b.inner; }
std::strong_ordering operator<=>(const SideTerm& a, const SideTerm& b) {
  if (a.side != b.side) return a.side <=> b.side;
  return a.inner <=> b.inner;
}
bool operator==(const PairTerm& a, const PairTerm& b) { return a.outer == b.outer && a.inner == b.inner; }
std::strong_ordering operator<=>(const PairTerm& a, const PairTerm& b) {
  if (auto c = a.outer <=> b.outer; c != 0) return c;
  return a.inner <=> b.inner;
}
bool operator==(const ReversedTerm& a, const ReversedTerm& b) { return a.inner == b.inner; }
std::strong_ordering operator<=>(const ReversedTerm& a, const ReversedTerm& b) { return a.inner <=> b.inner; }
bool operator==(const PowerEntry& a, const PowerEntry& b) {
  return a.position == b.position && a.value == b.value;
}
std::strong_ordering operator<=>(const PowerEntry& a, const PowerEntry& b) {
  if (auto c = a.position <=> b.position; c != 0) return c;
  return a.value <=> b.value;
}
bool operator==(const PowerTerm& a, const PowerTerm& b) { return a.support == b.support; }
std::strong_ordering operator<=>(const PowerTerm& a, const PowerTerm& b) {
  return std::lexicographical_compare_three_way(a.support.begin(), a.support.end(), b.support.begin(),
                                                b.support.end());
}
std::strong_ordering operator<=>(const TernaryTerm& a, const TernaryTerm& b) {
  return std::lexicographical_compare_three_way(a.support.begin(), a.support.end(), b.support.begin(),
                                                b.support.end());
}
std::strong_ordering operator<=>(const OrderTerm& a, const OrderTerm& b) { return a.node_ <=> b.node_; }

bool operator==(const ReverseOrder& a, const ReverseOrder& b) { return a.inner == b.inner; }
bool operator==(const SumOrder& a, const SumOrder& b) { return a.left == b.left && a.right == b.right; }
bool operator==(const ProductOrder& a, const ProductOrder& b) {
  return a.outer == b.outer && a.inner == b.inner;
}
bool operator==(const LexPowerOrder& a, const LexPowerOrder& b) {
  return a.base == b.base && a.exponent == b.exponent && a.default_value == b.default_value;
}

OrderTerm OrderTerm::power(std::vector<PowerEntry> support) {
  std::sort(support.begin(), support.end(),
            [](const PowerEntry& a, const PowerEntry& b) { return a.position < b.position; });
  for (std::size_t i = 1; i < support.size(); ++i) {
    if (support[i - 1].position == support[i].position) {
      throw Error(ErrorCode::InvalidTerm, "duplicate position " + support[i].position.to_string());
    }
  }
  return PowerTerm{std::move(support)};
}

OrderDesc OrderDesc::finite(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "finite order must have at least one element");
  return OrderDesc(FiniteOrder{n});
}
OrderDesc OrderDesc::reverse(OrderDesc inner) { return OrderDesc(ReverseOrder{std::move(inner)}); }
OrderDesc OrderDesc::sum(OrderDesc left, OrderDesc right) {
  return OrderDesc(SumOrder{std::move(left), std::move(right)});
}
OrderDesc OrderDesc::product(OrderDesc outer, OrderDesc inner) {
  return OrderDesc(ProductOrder{std::move(outer), std::move(inner)});
}
OrderDesc OrderDesc::lexpow(OrderDesc base, Ordinal exponent, OrderTerm default_value) {
  if (!is_valid(base, default_value)) {
    throw Error(ErrorCode::InvalidTerm, "lexpow default " + format_term(default_value) +
                                            " is not an element of " + format_desc(base));
  }
  return OrderDesc(LexPowerOrder{std::move(base), std::move(exponent), std::move(default_value)});
}
OrderDesc OrderDesc::ternary() { return OrderDesc(TernaryOrder{}); }

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool check_term(const OrderDesc& desc, const OrderTerm& t, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  return std::visit(
      Overloaded{
          [&](const FiniteOrder& d) {
            if (!t.is<IndexTerm>()) return fail("expected an index");
            if (t.as<IndexTerm>().index >= d.size) return fail("index out of range");
            return true;
          },
          [&](const ReverseOrder& d) {
            if (!t.is<ReversedTerm>()) return fail("expected rev(...)");
            return check_term(*d.inner, *t.as<ReversedTerm>().inner, why);
          },
          [&](const SumOrder& d) {
            if (!t.is<SideTerm>()) return fail("expected l(...) or r(...)");
            const auto& s = t.as<SideTerm>();
            return check_term(s.side == Side::Left ? *d.left : *d.right, *s.inner, why);
          },
          [&](const ProductOrder& d) {
            if (!t.is<PairTerm>()) return fail("expected a pair");
            const auto& p = t.as<PairTerm>();
            return check_term(*d.outer, *p.outer, why) && check_term(*d.inner, *p.inner, why);
          },
          [&](const LexPowerOrder& d) {
            if (!t.is<PowerTerm>()) return fail("expected a support map");
            const auto& p = t.as<PowerTerm>();
            for (std::size_t i = 0; i < p.support.size(); ++i) {
              const auto& e = p.support[i];
              if (i > 0 && !(p.support[i - 1].position < e.position)) return fail("support not sorted");
              if (!(e.position < d.exponent)) return fail("position not below the exponent");
              if (*e.value == *d.default_value) return fail("support entry equals the default");
              if (!check_term(*d.base, *e.value, why)) return false;
            }
            return true;
          },
          [&](const TernaryOrder&) {
            if (!t.is<TernaryTerm>()) return fail("expected tern{...}");
            for (const auto& [pos, v] : t.as<TernaryTerm>().support) {
              (void)pos;
              if (v != 1 && v != -1) return fail("ternary support values must be +1 or -1");
            }
            return true;
          },
      },
      desc.node());
}

}  // namespace

void validate(const OrderDesc& desc, const OrderTerm& t) {
  std::string why;
  if (!check_term(desc, t, &why)) {
    throw Error(ErrorCode::InvalidTerm, "invalid term for " + format_desc(desc) + ": " + why);
  }
}

bool is_valid(const OrderDesc& desc, const OrderTerm& t) { return check_term(desc, t, nullptr); }

const OrderTerm& power_value(const LexPowerOrder& power, const PowerTerm& t, const Ordinal& position) {
  auto it = std::lower_bound(t.support.begin(), t.support.end(), position,
                             [](const PowerEntry& e, const Ordinal& p) { return e.position < p; });
  if (it != t.support.end() && it->position == position) return *it->value;
  return *power.default_value;
}

OrderTerm make_power_term(const LexPowerOrder& power, std::vector<PowerEntry> entries) {
  std::erase_if(entries, [&](const PowerEntry& e) { return *e.value == *power.default_value; });
  return OrderTerm::power(std::move(entries));
}

std::strong_ordering cmp_unchecked(const OrderDesc& desc, const OrderTerm& x, const OrderTerm& y) {
  return std::visit(
      Overloaded{
          [&](const FiniteOrder&) { return x.as<IndexTerm>().index <=> y.as<IndexTerm>().index; },
          [&](const ReverseOrder& d) {
            return cmp_unchecked(*d.inner, *y.as<ReversedTerm>().inner, *x.as<ReversedTerm>().inner);
          },
          [&](const SumOrder& d) {
            const auto& a = x.as<SideTerm>();
            const auto& b = y.as<SideTerm>();
            if (a.side != b.side) return a.side <=> b.side;
            return cmp_unchecked(a.side == Side::Left ? *d.left : *d.right, *a.inner, *b.inner);
          },
          [&](const ProductOrder& d) {
            const auto& a = x.as<PairTerm>();
            const auto& b = y.as<PairTerm>();
            if (auto c = cmp_unchecked(*d.outer, *a.outer, *b.outer); c != 0) return c;
            return cmp_unchecked(*d.inner, *a.inner, *b.inner);
          },
          [&](const LexPowerOrder& d) {
            const auto& a = x.as<PowerTerm>().support;
            const auto& b = y.as<PowerTerm>().support;
            // Walk the union of supports in position order; the first position
            // with different values decides.
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < a.size() || j < b.size()) {
              const Ordinal* pos;
              const OrderTerm* va = &*d.default_value;
              const OrderTerm* vb = &*d.default_value;
              if (j == b.size() || (i < a.size() && a[i].position < b[j].position)) {
                pos = &a[i].position;
                va = &*a[i].value;
                ++i;
              } else if (i == a.size() || b[j].position < a[i].position) {
                pos = &b[j].position;
                vb = &*b[j].value;
                ++j;
              } else {
                pos = &a[i].position;
                va = &*a[i].value;
                vb = &*b[j].value;
                ++i;
                ++j;
              }
              (void)pos;
              if (!(*va == *vb)) return cmp_unchecked(*d.base, *va, *vb);
            }
            return std::strong_ordering::equal;
          },
          [&](const TernaryOrder&) {
            const auto& a = x.as<TernaryTerm>().support;
            const auto& b = y.as<TernaryTerm>().support;
            auto ia = a.begin();
            auto ib = b.begin();
            while (ia != a.end() || ib != b.end()) {
              int va = 0;
              int vb = 0;
              if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
                va = ia->second;
                ++ia;
              } else if (ia == a.end() || ib->first < ia->first) {
                vb = ib->second;
                ++ib;
              } else {
                va = ia->second;
                vb = ib->second;
                ++ia;
                ++ib;
              }
              if (va != vb) return va <=> vb;
            }
            return std::strong_ordering::equal;
          },
      },
      desc.node());
}

std::strong_ordering cmp(const OrderDesc& desc, const OrderTerm& x, const OrderTerm& y) {
  validate(desc, x);
  validate(desc, y);
  return cmp_unchecked(desc, x, y);
}

namespace {

constexpr std::uint64_t kSizeCap = std::uint64_t{1} << 62;

std::optional<std::uint64_t> capped_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSizeCap / a) return std::nullopt;
  return a * b;
}

}  // namespace

std::optional<std::uint64_t> finite_size(const OrderDesc& desc) {
  return std::visit(
      Overloaded{
          [](const FiniteOrder& d) -> std::optional<std::uint64_t> { return d.size; },
          [](const ReverseOrder& d) { return finite_size(*d.inner); },
          [](const SumOrder& d) -> std::optional<std::uint64_t> {
            auto a = finite_size(*d.left);
            auto b = finite_size(*d.right);
            if (!a || !b || *a + *b > kSizeCap) return std::nullopt;
            return *a + *b;
          },
          [](const ProductOrder& d) -> std::optional<std::uint64_t> {
            auto a = finite_size(*d.outer);
            auto b = finite_size(*d.inner);
            if (!a || !b) return std::nullopt;
            return capped_mul(*a, *b);
          },
          [](const LexPowerOrder& d) -> std::optional<std::uint64_t> {
            auto b = finite_size(*d.base);
            if (b && *b == 1) return 1;
            if (d.exponent.is_zero()) return 1;
            auto k = d.exponent.finite_value();
            if (!b || !k) return std::nullopt;
            std::uint64_t total = 1;
            for (std::uint64_t i = 0; i < *k; ++i) {
              auto next = capped_mul(total, *b);
              if (!next) return std::nullopt;
              total = *next;
            }
            return total;
          },
          [](const TernaryOrder&) -> std::optional<std::uint64_t> { return std::nullopt; },
      },
      desc.node());
}

bool is_finite(const OrderDesc& desc) { return finite_size(desc).has_value(); }

namespace {

// Appends canonical terms of `desc` at level `d` to `out`, stopping once
// `out` holds more than `cap` terms. For finite orders every level is the
// whole order.
void collect_level(const OrderDesc& desc, std::uint64_t d, std::uint64_t cap, std::vector<OrderTerm>& out) {
  auto full = [&] { return out.size() > cap; };
  std::visit(
      Overloaded{
          [&](const FiniteOrder& o) {
            for (std::uint64_t i = 0; i < o.size && !full(); ++i) out.push_back(OrderTerm::index(i));
          },
          [&](const ReverseOrder& o) {
            std::vector<OrderTerm> inner;
            collect_level(*o.inner, d, cap, inner);
            for (auto& t : inner) {
              if (full()) break;
              out.push_back(OrderTerm::reversed(std::move(t)));
            }
          },
          [&](const SumOrder& o) {
            std::vector<OrderTerm> l;
            std::vector<OrderTerm> r;
            collect_level(*o.left, d, cap, l);
            collect_level(*o.right, d, cap, r);
            for (auto& t : l) {
              if (full()) break;
              out.push_back(OrderTerm::left(std::move(t)));
            }
            for (auto& t : r) {
              if (full()) break;
              out.push_back(OrderTerm::right(std::move(t)));
            }
          },
          [&](const ProductOrder& o) {
            std::vector<OrderTerm> a;
            std::vector<OrderTerm> b;
            collect_level(*o.outer, d, cap, a);
            collect_level(*o.inner, d, cap, b);
            for (const auto& x : a) {
              for (const auto& y : b) {
                if (full()) return;
                out.push_back(OrderTerm::pair(x, y));
              }
            }
          },
          [&](const LexPowerOrder& o) {
            std::vector<Ordinal> positions;
            if (auto k = o.exponent.finite_value()) {
              for (std::uint64_t i = 0; i < *k; ++i) positions.push_back(Ordinal::finite(i));
            } else {
              positions = ordinals_below(o.exponent, d);
            }
            std::vector<OrderTerm> values;
            collect_level(*o.base, d, cap, values);
            if (std::find(values.begin(), values.end(), *o.default_value) == values.end()) {
              values.push_back(*o.default_value);
            }
            // Odometer over positions -> values.
            std::vector<std::size_t> digit(positions.size(), 0);
            while (!full()) {
              std::vector<PowerEntry> entries;
              for (std::size_t i = 0; i < positions.size(); ++i) {
                if (!(values[digit[i]] == *o.default_value)) entries.push_back({positions[i], values[digit[i]]});
              }
              out.push_back(OrderTerm::power(std::move(entries)));
              std::size_t k = positions.size();
              bool done = true;
              while (k > 0) {
                --k;
                if (++digit[k] < values.size()) {
                  done = false;
                  break;
                }
                digit[k] = 0;
              }
              if (done) break;
            }
          },
          [&](const TernaryOrder&) {
            std::vector<int> digit(d, 0);
            while (!full()) {
              std::map<std::uint64_t, int> support;
              for (std::uint64_t i = 0; i < d; ++i) {
                if (digit[i] != 0) support.emplace(i, digit[i]);
              }
              out.push_back(OrderTerm::ternary(std::move(support)));
              std::size_t k = d;
              bool done = true;
              while (k > 0) {
                --k;
                if (digit[k] == 0) digit[k] = 1;
                else if (digit[k] == 1) digit[k] = -1;
                else {
                  digit[k] = 0;
                  continue;
                }
                done = false;
                break;
              }
              if (done) break;
            }
          },
      },
      desc.node());
}

}  // namespace

std::vector<OrderTerm> elements(const OrderDesc& desc, std::uint64_t limit) {
  auto n = finite_size(desc);
  if (!n) throw Error(ErrorCode::InvalidArgument, "cannot list the elements of infinite order " + format_desc(desc));
  if (*n > limit) {
    throw Error(ErrorCode::TooLarge, format_desc(desc) + " has " + std::to_string(*n) + " elements, limit " +
                                         std::to_string(limit));
  }
  std::vector<OrderTerm> out;
  collect_level(desc, 0, *n, out);
  std::sort(out.begin(), out.end(), OrderLess{&desc});
  return out;
}

Enumeration enumerate(const OrderDesc& desc, std::uint64_t bound) {
  Enumeration result;
  if (auto n = finite_size(desc); n && *n <= bound) {
    collect_level(desc, 0, *n, result.terms);
    result.complete = true;
    return result;
  }
  constexpr std::uint64_t kMaxLevel = 64;
  for (std::uint64_t d = 0; d <= kMaxLevel; ++d) {
    std::vector<OrderTerm> level;
    collect_level(desc, d, bound, level);
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (level.size() >= bound || d == kMaxLevel) {
      if (level.size() > bound) level.erase(level.begin() + static_cast<std::ptrdiff_t>(bound), level.end());
      result.terms = std::move(level);
      return result;
    }
  }
  return result;
}

std::optional<OrderTerm> least(const OrderDesc& desc) {
  return std::visit(
      Overloaded{
          [](const FiniteOrder&) -> std::optional<OrderTerm> { return OrderTerm::index(0); },
          [](const ReverseOrder& d) -> std::optional<OrderTerm> {
            auto g = greatest(*d.inner);
            if (!g) return std::nullopt;
            return OrderTerm::reversed(*g);
          },
          [](const SumOrder& d) -> std::optional<OrderTerm> {
            auto l = least(*d.left);
            if (!l) return std::nullopt;
            return OrderTerm::left(*l);
          },
          [](const ProductOrder& d) -> std::optional<OrderTerm> {
            auto a = least(*d.outer);
            auto b = least(*d.inner);
            if (!a || !b) return std::nullopt;
            return OrderTerm::pair(*a, *b);
          },
          [](const LexPowerOrder& d) -> std::optional<OrderTerm> {
            auto b = least(*d.base);
            if (!b) return std::nullopt;
            if (*b == *d.default_value) return OrderTerm::power({});
            auto k = d.exponent.finite_value();
            if (!k) return std::nullopt;
            std::vector<PowerEntry> entries;
            for (std::uint64_t i = 0; i < *k; ++i) entries.push_back({Ordinal::finite(i), *b});
            return OrderTerm::power(std::move(entries));
          },
          [](const TernaryOrder&) -> std::optional<OrderTerm> { return std::nullopt; },
      },
      desc.node());
}

std::optional<OrderTerm> greatest(const OrderDesc& desc) {
  return std::visit(
      Overloaded{
          [](const FiniteOrder& d) -> std::optional<OrderTerm> { return OrderTerm::index(d.size - 1); },
          [](const ReverseOrder& d) -> std::optional<OrderTerm> {
            auto l = least(*d.inner);
            if (!l) return std::nullopt;
            return OrderTerm::reversed(*l);
          },
          [](const SumOrder& d) -> std::optional<OrderTerm> {
            auto r = greatest(*d.right);
            if (!r) return std::nullopt;
            return OrderTerm::right(*r);
          },
          [](const ProductOrder& d) -> std::optional<OrderTerm> {
            auto a = greatest(*d.outer);
            auto b = greatest(*d.inner);
            if (!a || !b) return std::nullopt;
            return OrderTerm::pair(*a, *b);
          },
          [](const LexPowerOrder& d) -> std::optional<OrderTerm> {
            auto b = greatest(*d.base);
            if (!b) return std::nullopt;
            if (*b == *d.default_value) return OrderTerm::power({});
            auto k = d.exponent.finite_value();
            if (!k) return std::nullopt;
            std::vector<PowerEntry> entries;
            for (std::uint64_t i = 0; i < *k; ++i) entries.push_back({Ordinal::finite(i), *b});
            return OrderTerm::power(std::move(entries));
          },
          [](const TernaryOrder&) -> std::optional<OrderTerm> { return std::nullopt; },
      },
      desc.node());
}

}  // namespace satlab::orders
