#include "satlab/graphs/bit.hpp"

#include <algorithm>
#include <functional>

#include "satlab/error.hpp"

namespace satlab::graphs {

namespace {

constexpr std::size_t kMaxPosition = std::size_t{1} << 24;

bool bit_at(const Natural& n, const Natural& position) {
  const auto p = position.to_u64();
  return p && *p < n.bit_length() && n.bit(*p);
}

std::size_t as_position(const Natural& n) {
  const auto p = n.to_u64();
  if (!p || *p >= kMaxPosition) {
    throw Error(ErrorCode::TooLarge, "vertex " + n.to_string() + " is too large to be used as a bit position");
  }
  return *p;
}

std::vector<Natural> sorted_unique(std::vector<Natural> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Least v >= low with every bit of `req` set and every bit of `forb` clear.
// The two masks are disjoint.
Natural least_matching(const Natural& low, const Natural& req, const Natural& forb) {
  std::size_t top = std::max({low.bit_length(), req.bit_length(), forb.bit_length()});
  std::optional<std::size_t> violation;
  for (std::size_t i = top; i-- > 0;) {
    const bool l = low.bit_length() > i && low.bit(i);
    const bool r = req.bit_length() > i && req.bit(i);
    const bool f = forb.bit_length() > i && forb.bit(i);
    if ((r && !l) || (f && l)) {
      violation = i;
      break;
    }
  }
  if (!violation) return low;
  // Raise `low` at the least admissible clear bit at or above the highest
  // violation and fill the bits below it with the required ones.
  for (std::size_t p = *violation;; ++p) {
    const bool l = low.bit_length() > p && low.bit(p);
    const bool f = forb.bit_length() > p && forb.bit(p);
    if (l || f) continue;
    return ((low >> (p + 1)) << (p + 1)) | Natural::power_of_two(p) | req.low_bits(p);
  }
}

}  // namespace

bool bit_edge(const Natural& m, const Natural& n) {
  if (m == n) throw Error(ErrorCode::LoopQuery, "bit_edge(" + m.to_string() + ", " + n.to_string() + ") is a loop");
  const Natural& lo = m < n ? m : n;
  const Natural& hi = m < n ? n : m;
  return bit_at(hi, lo);
}

std::vector<Natural> out_set(const Natural& n) {
  std::vector<Natural> out;
  for (std::size_t b : n.set_bits()) out.emplace_back(b);
  return out;
}

Natural realize_out_set(const std::vector<Natural>& a) {
  Natural n;
  for (const auto& x : sorted_unique(a)) n.set_bit(as_position(x));
  return n;
}

bool is_witness(const std::vector<Natural>& a, const std::vector<Natural>& b, const Natural& v) {
  for (const auto& x : a) {
    if (x == v || !bit_edge(x, v)) return false;
  }
  for (const auto& x : b) {
    if (x == v || bit_edge(x, v)) return false;
  }
  return true;
}

Natural saturation_witness(const std::vector<Natural>& a_in, const std::vector<Natural>& b_in) {
  const auto a = sorted_unique(a_in);
  const auto b = sorted_unique(b_in);
  for (const auto& x : a) {
    if (std::binary_search(b.begin(), b.end(), x)) {
      throw Error(ErrorCode::InvalidArgument, "A and B share " + x.to_string());
    }
  }
  std::vector<Natural> all;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));

  // Candidates in the open interval between consecutive elements e_k, e_(k+1).
  // Elements below v constrain the bits of v; elements above v are
  // constrained at bit v.
  Natural req;
  Natural forb;
  for (std::size_t k = 0; k <= all.size(); ++k) {
    if (k > 0) {
      const auto& e = all[k - 1];
      const std::size_t p = as_position(e);
      (std::binary_search(a.begin(), a.end(), e) ? req : forb).set_bit(p);
    }
    const Natural low = k > 0 ? all[k - 1] + Natural(1) : Natural(0);
    const Natural* high = k < all.size() ? &all[k] : nullptr;
    auto fits_above = [&](const Natural& v) {
      for (std::size_t j = k; j < all.size(); ++j) {
        const bool in_a = std::binary_search(a.begin(), a.end(), all[j]);
        if (bit_at(all[j], v) != in_a) return false;
      }
      return true;
    };
    auto fits_below = [&](const Natural& v) { return (v & req) == req && (v & forb).is_zero(); };

    const Natural* first_a_above = nullptr;
    for (std::size_t j = k; j < all.size() && first_a_above == nullptr; ++j) {
      if (std::binary_search(a.begin(), a.end(), all[j])) first_a_above = &all[j];
    }
    if (first_a_above != nullptr) {
      // v must be one of the set bits of that element.
      for (std::size_t bit : first_a_above->set_bits()) {
        const Natural v(bit);
        if (v < low) continue;
        if (high && !(v < *high)) break;
        if (fits_below(v) && fits_above(v)) return v;
      }
      continue;
    }
    // Only B above: skip the finitely many v that are set bits of some b.
    Natural from = low;
    while (true) {
      Natural v = least_matching(from, req, forb);
      if (high && !(v < *high)) break;
      if (fits_above(v)) return v;
      from = v + Natural(1);
    }
  }
  throw std::logic_error("saturation_witness: the last interval always has a witness");
}

Natural fast_witness(const std::vector<Natural>& a, const std::vector<Natural>& b) {
  Natural v = realize_out_set(a);
  std::size_t top = 0;
  bool any = false;
  for (const auto* side : {&a, &b}) {
    for (const auto& x : *side) {
      top = std::max(top, as_position(x));
      any = true;
    }
  }
  v.set_bit(any ? top + 1 : 0);
  return v;
}

SaturationReport check_saturation(const FiniteGraph& g, std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw Error(ErrorCode::InvalidArgument, "s and t must be at least 1");
  const std::size_t n = g.size();
  SaturationReport report;

  // Subsets of `pool` of each size below `limit`, by size then lexicographically.
  auto for_each_subset = [](const std::vector<Vertex>& pool, std::size_t limit,
                            const std::function<bool(const std::vector<Vertex>&)>& visit) {
    for (std::size_t size = 0; size < limit && size <= pool.size(); ++size) {
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        std::vector<Vertex> subset;
        for (std::size_t i : idx) subset.push_back(pool[i]);
        if (!visit(subset)) return false;
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return true;
  };

  std::vector<Vertex> everything(n);
  for (Vertex v = 0; v < n; ++v) everything[v] = v;
  for_each_subset(everything, s, [&](const std::vector<Vertex>& a) {
    std::vector<Vertex> rest;
    std::set_difference(everything.begin(), everything.end(), a.begin(), a.end(), std::back_inserter(rest));
    return for_each_subset(rest, t, [&](const std::vector<Vertex>& b) {
      ++report.pairs_checked;
      for (Vertex v = 0; v < n; ++v) {
        if (std::binary_search(a.begin(), a.end(), v) || std::binary_search(b.begin(), b.end(), v)) continue;
        bool ok = true;
        for (Vertex x : a) ok = ok && g.has_edge(v, x);
        for (Vertex x : b) ok = ok && !g.has_edge(v, x);
        if (ok) return true;
      }
      report.saturated = false;
      report.counterexample = std::make_pair(a, b);
      return false;
    });
  });
  return report;
}

}  // namespace satlab::graphs
