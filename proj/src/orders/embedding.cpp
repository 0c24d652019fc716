#include "satlab/orders/embedding.hpp"

#include <algorithm>
#include <stdexcept>

#include "satlab/error.hpp"
#include "satlab/orders/cuts.hpp"
#include "satlab/orders/grammar.hpp"

namespace satlab::orders {

bool OrderEmbedding::verify() const {
  for (const auto& [x, y] : pairs) {
    if (!is_valid(domain, x) || !is_valid(codomain, y)) return false;
  }
  // Both sides strictly increasing along the sequence suffices by transitivity.
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (cmp_unchecked(domain, pairs[i - 1].first, pairs[i].first) >= 0) return false;
    if (cmp_unchecked(codomain, pairs[i - 1].second, pairs[i].second) >= 0) return false;
  }
  return true;
}

std::optional<OrderTerm> OrderEmbedding::image(const OrderTerm& x) const {
  for (const auto& [k, v] : pairs) {
    if (k == x) return v;
  }
  return std::nullopt;
}

std::optional<OrderEmbedding> embed_search(const OrderDesc& x, const OrderDesc& y, std::uint64_t size_bound) {
  if (!is_finite(x)) throw Error(ErrorCode::InvalidArgument, "embed_search needs a finite domain");
  const auto xs = elements(x);
  // Into a chain the least embedding sends the i-th element of X to the i-th
  // element of Y.
  std::vector<OrderTerm> ys;
  bool complete = false;
  if (is_finite(y)) {
    if (*finite_size(y) <= size_bound) {
      ys = elements(y, std::max<std::uint64_t>(size_bound, 1));
      complete = true;
    }
  }
  if (!complete) {
    auto e = enumerate(y, size_bound);
    ys = std::move(e.terms);
    complete = e.complete;
    std::sort(ys.begin(), ys.end(), OrderLess{&y});
  }
  if (ys.size() < xs.size()) {
    if (complete) return std::nullopt;
    throw Error(ErrorCode::BoundTooSmall, "enumeration of " + format_desc(y) + " stopped at " +
                                              std::to_string(ys.size()) + " elements, " +
                                              std::to_string(xs.size()) + " needed");
  }
  OrderEmbedding out{x, y, {}};
  for (std::size_t i = 0; i < xs.size(); ++i) out.pairs.emplace_back(xs[i], ys[i]);
  return out;
}

OrderDesc finite_power(const OrderDesc& l, std::uint64_t k) {
  auto bottom = least(l);
  if (!bottom) throw Error(ErrorCode::InvalidArgument, format_desc(l) + " has no least element");
  return OrderDesc::lexpow(l, Ordinal::finite(k), *bottom);
}

std::uint64_t ldim(const OrderDesc& x, const OrderDesc& l) {
  if (!is_finite(x) || !is_finite(l)) throw Error(ErrorCode::InvalidArgument, "ldim needs finite orders");
  const std::uint64_t base = *finite_size(l);
  if (base < 2) throw Error(ErrorCode::BaseTooSmall, "ldim needs a base with at least 2 elements");
  const std::uint64_t n = *finite_size(x);
  std::uint64_t size = 1;
  for (std::uint64_t k = 0;; ++k) {
    if (size >= n) {
      if (embed_search(x, finite_power(l, k), size)) return k;
    }
    size = size > (std::uint64_t{1} << 62) / base ? (std::uint64_t{1} << 62) : size * base;
  }
}

namespace {

const LexPowerOrder& finite_power_of(const OrderDesc& d, std::uint64_t& exponent) {
  if (!d.is<LexPowerOrder>()) throw Error(ErrorCode::InvalidArgument, "codomain must be a lexicographic power");
  const auto& p = d.as<LexPowerOrder>();
  auto e = p.exponent.finite_value();
  if (!e) throw Error(ErrorCode::InvalidArgument, "codomain exponent must be finite");
  exponent = *e;
  return p;
}

}  // namespace

OrderEmbedding merge_union_embedding(const OrderDesc& ambient, const std::vector<OrderTerm>& a,
                                     const std::vector<OrderTerm>& b, const OrderEmbedding& ia,
                                     const OrderEmbedding& ib) {
  for (const auto& t : a) validate(ambient, t);
  for (const auto& t : b) {
    validate(ambient, t);
    if (std::find(a.begin(), a.end(), t) != a.end()) {
      throw Error(ErrorCode::InvalidArgument, format_term(t) + " lies in both A and B");
    }
  }
  if (!(ia.domain == ambient) || !(ib.domain == ambient)) {
    throw Error(ErrorCode::InvalidArgument, "both embeddings must have the ambient order as domain");
  }
  std::uint64_t ea = 0;
  std::uint64_t eb = 0;
  const auto& pa = finite_power_of(ia.codomain, ea);
  const auto& pb = finite_power_of(ib.codomain, eb);
  if (!(*pa.base == *pb.base)) throw Error(ErrorCode::InvalidArgument, "embeddings use different bases");
  if (!ia.verify() || !ib.verify()) throw Error(ErrorCode::InvalidArgument, "input embedding is not increasing");
  for (const auto& t : a) {
    if (!ia.image(t)) throw Error(ErrorCode::InvalidArgument, "iA does not map " + format_term(t));
  }
  for (const auto& t : b) {
    if (!ib.image(t)) throw Error(ErrorCode::InvalidArgument, "iB does not map " + format_term(t));
  }

  const OrderDesc& base = *pa.base;
  const OrderTerm& d0 = *pa.default_value;
  const OrderDesc prefix = OrderDesc::lexpow(base, Ordinal::finite(ea + 1), d0);
  const OrderDesc out_desc = OrderDesc::lexpow(base, Ordinal::finite(ea + 1 + eb), d0);
  const auto prefix_elems = elements(prefix);

  const OrderLess less{&ambient};
  std::vector<OrderTerm> sa = a;
  std::vector<OrderTerm> sb = b;
  std::sort(sa.begin(), sa.end(), less);
  std::sort(sb.begin(), sb.end(), less);

  auto lift = [&](const OrderTerm& t) {  // L^a term viewed in L^(a+1) or L^(a+1+b)
    return OrderTerm::power(t.as<PowerTerm>().support);
  };

  OrderEmbedding out{ambient, out_desc, {}};
  for (const auto& t : sa) out.pairs.emplace_back(t, lift(*ia.image(t)));

  // B splits into runs with no A-element between them; each run is
  // represented by its least element.
  std::optional<OrderTerm> selector_image;
  std::optional<std::size_t> run_owner;  // index into sa of the A-element above the run
  for (const auto& t : sb) {
    auto above = std::upper_bound(sa.begin(), sa.end(), t, less);
    const std::size_t slot = static_cast<std::size_t>(above - sa.begin());
    if (!selector_image || run_owner != slot) {
      std::optional<OrderTerm> lo;
      std::optional<OrderTerm> hi;
      if (slot > 0) lo = lift(*ia.image(sa[slot - 1]));
      if (slot < sa.size()) hi = lift(*ia.image(sa[slot]));
      selector_image.reset();
      for (const auto& c : prefix_elems) {
        if (lo && cmp_unchecked(prefix, *lo, c) >= 0) continue;
        if (hi && cmp_unchecked(prefix, c, *hi) >= 0) break;
        selector_image = c;
        break;
      }
      if (!selector_image) {
        throw Error(ErrorCode::NoSeparatingPoint, "no point of " + format_desc(prefix) + " between " +
                                                      (lo ? format_term(*lo) : std::string("-inf")) + " and " +
                                                      (hi ? format_term(*hi) : std::string("+inf")));
      }
      run_owner = slot;
    }
    std::vector<PowerEntry> entries = selector_image->as<PowerTerm>().support;
    const OrderTerm image = *ib.image(t);
    const auto& tail = image.as<PowerTerm>();
    for (std::uint64_t j = 0; j < eb; ++j) {
      const OrderTerm& v = power_value(pb, tail, Ordinal::finite(j));
      entries.push_back({Ordinal::finite(ea + 1 + j), v});
    }
    out.pairs.emplace_back(t, make_power_term(out_desc.as<LexPowerOrder>(), std::move(entries)));
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [&](const auto& p, const auto& q) { return less(p.first, q.first); });
  if (!out.verify()) throw std::logic_error("merge_union_embedding produced a non-increasing map");
  return out;
}

OrderEmbedding grow_binary(const OrderDesc& desc, const OrderTerm& a0, const OrderTerm& a1, std::uint64_t depth) {
  if (cmp(desc, a0, a1) >= 0) {
    throw Error(ErrorCode::MalformedInterval, format_term(a0) + " is not below " + format_term(a1));
  }
  if (depth > kMaxGrowDepth) {
    throw Error(ErrorCode::TooLarge, "depth above " + std::to_string(kMaxGrowDepth));
  }
  std::vector<OrderTerm> images{realize_between(desc, &a0, &a1)};
  for (std::uint64_t d = 0; d < depth; ++d) {
    std::vector<OrderTerm> next;
    next.reserve(images.size() * 2);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const OrderTerm& upper = i + 1 < images.size() ? images[i + 1] : a1;
      next.push_back(images[i]);
      next.push_back(realize_between(desc, &images[i], &upper));
    }
    images = std::move(next);
  }
  const OrderDesc domain = OrderDesc::lexpow(OrderDesc::finite(2), Ordinal::finite(depth), OrderTerm::index(0));
  OrderEmbedding out{domain, desc, {}};
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<PowerEntry> entries;
    for (std::uint64_t p = 0; p < depth; ++p) {
      if ((i >> (depth - 1 - p)) & 1u) entries.push_back({Ordinal::finite(p), OrderTerm::index(1)});
    }
    out.pairs.emplace_back(OrderTerm::power(std::move(entries)), images[i]);
  }
  return out;
}

}  // namespace satlab::orders
