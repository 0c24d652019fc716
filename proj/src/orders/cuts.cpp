#include "satlab/orders/cuts.hpp"

#include <algorithm>
#include <functional>

#include "satlab/error.hpp"
#include "satlab/orders/grammar.hpp"

namespace satlab::orders {

Cut::Cut(const OrderDesc& desc, std::vector<OrderTerm> lower, std::vector<OrderTerm> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  for (const auto& t : lower_) validate(desc, t);
  for (const auto& t : upper_) validate(desc, t);
  for (const auto& x : lower_) {
    for (const auto& y : upper_) {
      if (cmp_unchecked(desc, x, y) >= 0) {
        throw Error(ErrorCode::MalformedCut,
                    "cut lower element " + format_term(x) + " is not below upper element " + format_term(y));
      }
    }
  }
}

namespace {

[[noreturn]] void no_room(const OrderDesc& desc, const OrderTerm* below, const OrderTerm* above) {
  throw Error(ErrorCode::EmptyOrderBetween, "no element of " + format_desc(desc) + " strictly between " +
                                                (below ? format_term(*below) : std::string("-inf")) + " and " +
                                                (above ? format_term(*above) : std::string("+inf")));
}

std::optional<OrderTerm> attempt(const std::function<OrderTerm()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyOrderBetween) throw;
    return std::nullopt;
  }
}

OrderTerm between_ternary(const OrderTerm* below, const OrderTerm* above) {
  if (below == nullptr && above == nullptr) return OrderTerm::ternary();
  std::uint64_t fresh = 0;
  for (const OrderTerm* t : {below, above}) {
    if (t == nullptr) continue;
    const auto& s = t->as<TernaryTerm>().support;
    if (!s.empty()) fresh = std::max(fresh, s.rbegin()->first + 1);
  }
  // Appending at a position past both supports keeps the first difference
  // from the other bound where it was.
  if (below != nullptr) {
    auto s = below->as<TernaryTerm>().support;
    s.emplace(fresh, 1);
    return OrderTerm::ternary(std::move(s));
  }
  auto s = above->as<TernaryTerm>().support;
  s.emplace(fresh, -1);
  return OrderTerm::ternary(std::move(s));
}

std::vector<PowerEntry> entries_before(const PowerTerm& t, const Ordinal& position) {
  std::vector<PowerEntry> out;
  for (const auto& e : t.support) {
    if (!(e.position < position)) break;
    out.push_back(e);
  }
  return out;
}

OrderTerm between_power(const OrderDesc& desc, const OrderTerm* below, const OrderTerm* above) {
  const auto& power = desc.as<LexPowerOrder>();
  const OrderDesc& base = *power.base;
  const OrderTerm& d0 = *power.default_value;
  if (below == nullptr && above == nullptr) return OrderTerm::power({});

  std::optional<Ordinal> top_key;
  for (const OrderTerm* t : {below, above}) {
    if (t == nullptr) continue;
    const auto& s = t->as<PowerTerm>().support;
    if (!s.empty() && (!top_key || *top_key < s.back().position)) top_key = s.back().position;
  }
  const Ordinal fresh = top_key ? top_key->successor() : Ordinal();

  // Preferred construction: modify one bound at a fresh position.
  if (fresh < power.exponent) {
    if (below != nullptr) {
      if (auto b = attempt([&] { return realize_between(base, &d0, nullptr); })) {
        auto entries = below->as<PowerTerm>().support;
        entries.push_back({fresh, *b});
        return OrderTerm::power(std::move(entries));
      }
    } else if (auto b = attempt([&] { return realize_between(base, nullptr, &d0); })) {
      auto entries = above->as<PowerTerm>().support;
      entries.push_back({fresh, *b});
      return OrderTerm::power(std::move(entries));
    }
  }

  // Positions where raising (or lowering) `t` can happen: the least position
  // not in its support is always among these.
  auto candidate_positions = [&](const PowerTerm& t, const std::optional<Ordinal>& after) {
    std::vector<Ordinal> out;
    if (power.exponent.is_successor()) out.push_back(power.exponent.predecessor());
    if (!power.exponent.is_zero()) out.push_back(Ordinal());
    for (const auto& e : t.support) {
      out.push_back(e.position);
      if (e.position.successor() < power.exponent) out.push_back(e.position.successor());
    }
    if (after && after->successor() < power.exponent) out.push_back(after->successor());
    std::erase_if(out, [&](const Ordinal& o) { return after && !(*after < o); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::reverse(out.begin(), out.end());
    return out;
  };
  auto shift = [&](const OrderTerm& t, const std::optional<Ordinal>& after, bool up) -> std::optional<OrderTerm> {
    const auto& pt = t.as<PowerTerm>();
    for (const auto& r : candidate_positions(pt, after)) {
      const OrderTerm& v = power_value(power, pt, r);
      auto b = up ? attempt([&] { return realize_between(base, &v, nullptr); })
                  : attempt([&] { return realize_between(base, nullptr, &v); });
      if (!b) continue;
      auto entries = entries_before(pt, r);
      entries.push_back({r, *b});
      return make_power_term(power, std::move(entries));
    }
    return std::nullopt;
  };

  if (below != nullptr && above != nullptr) {
    const auto& x = below->as<PowerTerm>();
    const auto& y = above->as<PowerTerm>();
    std::optional<Ordinal> q;
    {
      std::vector<Ordinal> keys;
      for (const auto& e : x.support) keys.push_back(e.position);
      for (const auto& e : y.support) keys.push_back(e.position);
      std::sort(keys.begin(), keys.end());
      for (const auto& k : keys) {
        if (!(power_value(power, x, k) == power_value(power, y, k))) {
          q = k;
          break;
        }
      }
    }
    if (!q) no_room(desc, below, above);
    const OrderTerm& xq = power_value(power, x, *q);
    const OrderTerm& yq = power_value(power, y, *q);
    if (auto c = attempt([&] { return realize_between(base, &xq, &yq); })) {
      auto entries = entries_before(x, *q);
      entries.push_back({*q, *c});
      return make_power_term(power, std::move(entries));
    }
    if (auto z = shift(*below, q, true)) return *z;
    if (auto z = shift(*above, q, false)) return *z;
    no_room(desc, below, above);
  }
  if (below != nullptr) {
    if (auto z = shift(*below, std::nullopt, true)) return *z;
  } else if (auto z = shift(*above, std::nullopt, false)) {
    return *z;
  }
  no_room(desc, below, above);
}

}  // namespace

OrderTerm realize_between(const OrderDesc& desc, const OrderTerm* below, const OrderTerm* above) {
  if (desc.is<FiniteOrder>()) {
    const std::uint64_t n = desc.as<FiniteOrder>().size;
    const std::uint64_t start = below ? below->as<IndexTerm>().index + 1 : 0;
    const std::uint64_t stop = above ? above->as<IndexTerm>().index : n;
    if (start >= stop) no_room(desc, below, above);
    return OrderTerm::index(start);
  }
  if (desc.is<ReverseOrder>()) {
    const OrderDesc& inner = *desc.as<ReverseOrder>().inner;
    const OrderTerm* lo = above ? &*above->as<ReversedTerm>().inner : nullptr;
    const OrderTerm* hi = below ? &*below->as<ReversedTerm>().inner : nullptr;
    return OrderTerm::reversed(realize_between(inner, lo, hi));
  }
  if (desc.is<SumOrder>()) {
    const auto& s = desc.as<SumOrder>();
    const SideTerm* lo = below ? &below->as<SideTerm>() : nullptr;
    const SideTerm* hi = above ? &above->as<SideTerm>() : nullptr;
    const bool left_ok = !(lo && lo->side == Side::Right);
    const bool right_ok = !(hi && hi->side == Side::Left);
    if (left_ok) {
      const OrderTerm* l = lo ? &*lo->inner : nullptr;
      const OrderTerm* h = (hi && hi->side == Side::Left) ? &*hi->inner : nullptr;
      if (auto z = attempt([&] { return realize_between(*s.left, l, h); })) return OrderTerm::left(*z);
    }
    if (right_ok) {
      const OrderTerm* l = (lo && lo->side == Side::Right) ? &*lo->inner : nullptr;
      const OrderTerm* h = hi ? &*hi->inner : nullptr;
      if (auto z = attempt([&] { return realize_between(*s.right, l, h); })) return OrderTerm::right(*z);
    }
    no_room(desc, below, above);
  }
  if (desc.is<ProductOrder>()) {
    const auto& p = desc.as<ProductOrder>();
    const PairTerm* lo = below ? &below->as<PairTerm>() : nullptr;
    const PairTerm* hi = above ? &above->as<PairTerm>() : nullptr;
    if (lo && hi && lo->outer == hi->outer) {
      return OrderTerm::pair(*lo->outer, realize_between(*p.inner, &*lo->inner, &*hi->inner));
    }
    const OrderTerm* lo_outer = lo ? &*lo->outer : nullptr;
    const OrderTerm* hi_outer = hi ? &*hi->outer : nullptr;
    if (auto k = attempt([&] { return realize_between(*p.outer, lo_outer, hi_outer); })) {
      if (auto l = attempt([&] { return realize_between(*p.inner, nullptr, nullptr); })) {
        return OrderTerm::pair(*k, *l);
      }
    }
    if (lo) {
      if (auto l = attempt([&] { return realize_between(*p.inner, &*lo->inner, nullptr); })) {
        return OrderTerm::pair(*lo->outer, *l);
      }
    }
    if (hi) {
      if (auto l = attempt([&] { return realize_between(*p.inner, nullptr, &*hi->inner); })) {
        return OrderTerm::pair(*hi->outer, *l);
      }
    }
    no_room(desc, below, above);
  }
  if (desc.is<LexPowerOrder>()) return between_power(desc, below, above);
  return between_ternary(below, above);
}

OrderTerm realize_cut(const OrderDesc& desc, const Cut& cut) {
  const OrderLess less{&desc};
  const OrderTerm* below = nullptr;
  const OrderTerm* above = nullptr;
  if (!cut.lower().empty()) below = &*std::max_element(cut.lower().begin(), cut.lower().end(), less);
  if (!cut.upper().empty()) above = &*std::min_element(cut.upper().begin(), cut.upper().end(), less);
  OrderTerm z = realize_between(desc, below, above);
  if ((below && cmp_unchecked(desc, *below, z) >= 0) || (above && cmp_unchecked(desc, z, *above) >= 0)) {
    throw std::logic_error("realize_cut produced " + format_term(z) + " outside its cut");
  }
  return z;
}

PatchReport patches_check(const OrderDesc& desc, const std::vector<OrderTerm>& b,
                          const std::vector<OrderTerm>& a, bool strict_gaps) {
  for (const auto& t : b) validate(desc, t);
  for (const auto& t : a) {
    validate(desc, t);
    if (std::find(b.begin(), b.end(), t) == b.end()) {
      throw Error(ErrorCode::NotSubset, format_term(t) + " belongs to A but not to B");
    }
  }
  const OrderLess less{&desc};
  std::vector<OrderTerm> sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end(), less);
  sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
  std::vector<OrderTerm> sorted_b = b;
  std::sort(sorted_b.begin(), sorted_b.end(), less);

  PatchReport report;
  const std::size_t m = sorted_a.size();
  for (std::size_t j = 0; j <= m; ++j) {
    if (strict_gaps && (j == 0 || j == m)) continue;
    Gap gap;
    if (j > 0) gap.below = sorted_a[j - 1];
    if (j < m) gap.above = sorted_a[j];
    for (const auto& candidate : sorted_b) {
      if (gap.below && cmp_unchecked(desc, *gap.below, candidate) >= 0) continue;
      if (gap.above && cmp_unchecked(desc, candidate, *gap.above) >= 0) continue;
      gap.witness = candidate;
      break;
    }
    if (!gap.witness && report.patched) {
      report.patched = false;
      std::vector<OrderTerm> lower;
      std::vector<OrderTerm> upper;
      if (gap.below) lower.push_back(*gap.below);
      if (gap.above) upper.push_back(*gap.above);
      report.counterexample.emplace(desc, std::move(lower), std::move(upper));
    }
    report.gaps.push_back(std::move(gap));
  }
  return report;
}

OrderTerm least_upper_bound(const OrderDesc& desc, const std::vector<OrderTerm>& s) {
  for (const auto& candidate : elements(desc)) {
    bool bound = true;
    for (const auto& t : s) bound = bound && cmp_unchecked(desc, t, candidate) <= 0;
    if (bound) return candidate;
  }
  throw Error(ErrorCode::EmptyOrderBetween, "set has no upper bound in " + format_desc(desc));
}

namespace {

std::optional<OrderTerm> maximum(const OrderDesc& desc, const std::vector<OrderTerm>& s) {
  if (s.empty()) return std::nullopt;
  return *std::max_element(s.begin(), s.end(), OrderLess{&desc});
}

}  // namespace

OrderTerm lub_product(const OrderDesc& outer, const OrderDesc& inner, const std::vector<OrderTerm>& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "least upper bound of the empty set");
  if (!is_finite(outer) || !is_finite(inner)) {
    throw Error(ErrorCode::InvalidArgument, "lub_product needs finite factors");
  }
  const OrderDesc product = OrderDesc::product(outer, inner);
  std::vector<OrderTerm> projection;
  for (const auto& t : s) {
    validate(product, t);
    projection.push_back(*t.as<PairTerm>().outer);
  }
  auto top = maximum(outer, projection);
  if (!top) {
    // A projection without maximum has its supremum above every fibre. This
    // cannot happen for a finite S but is the remaining case of the split.
    auto bottom = least(inner);
    return OrderTerm::pair(least_upper_bound(outer, projection), *bottom);
  }
  std::vector<OrderTerm> fibre;
  for (const auto& t : s) {
    const auto& p = t.as<PairTerm>();
    if (*p.outer == *top) fibre.push_back(*p.inner);
  }
  return OrderTerm::pair(*top, least_upper_bound(inner, fibre));
}

OrderTerm glb_product(const OrderDesc& outer, const OrderDesc& inner, const std::vector<OrderTerm>& s) {
  std::vector<OrderTerm> mirrored;
  for (const auto& t : s) {
    validate(OrderDesc::product(outer, inner), t);
    const auto& p = t.as<PairTerm>();
    mirrored.push_back(OrderTerm::pair(OrderTerm::reversed(*p.outer), OrderTerm::reversed(*p.inner)));
  }
  OrderTerm lub = lub_product(OrderDesc::reverse(outer), OrderDesc::reverse(inner), mirrored);
  const auto& p = lub.as<PairTerm>();
  return OrderTerm::pair(*p.outer->as<ReversedTerm>().inner, *p.inner->as<ReversedTerm>().inner);
}

}  // namespace satlab::orders
