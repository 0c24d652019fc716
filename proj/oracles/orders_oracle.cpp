#include "orders_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace satlab::oracles {

using orders::OrderDesc;
using orders::OrderTerm;

std::vector<OrderTerm> ranked_elements(const OrderDesc& desc) {
  std::vector<OrderTerm> out;
  if (desc.is<orders::FiniteOrder>()) {
    for (std::uint64_t i = 0; i < desc.as<orders::FiniteOrder>().size; ++i) out.push_back(OrderTerm::index(i));
  } else if (desc.is<orders::ReverseOrder>()) {
    auto inner = ranked_elements(*desc.as<orders::ReverseOrder>().inner);
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) out.push_back(OrderTerm::reversed(*it));
  } else if (desc.is<orders::SumOrder>()) {
    for (const auto& t : ranked_elements(*desc.as<orders::SumOrder>().left)) out.push_back(OrderTerm::left(t));
    for (const auto& t : ranked_elements(*desc.as<orders::SumOrder>().right)) out.push_back(OrderTerm::right(t));
  } else if (desc.is<orders::ProductOrder>()) {
    const auto inner = ranked_elements(*desc.as<orders::ProductOrder>().inner);
    for (const auto& a : ranked_elements(*desc.as<orders::ProductOrder>().outer)) {
      for (const auto& b : inner) out.push_back(OrderTerm::pair(a, b));
    }
  } else if (desc.is<orders::LexPowerOrder>()) {
    const auto& p = desc.as<orders::LexPowerOrder>();
    auto k = p.exponent.finite_value();
    if (!k) throw std::invalid_argument("oracle: infinite exponent");
    const auto base = ranked_elements(*p.base);
    std::vector<std::size_t> digits(*k, 0);
    while (true) {
      std::vector<orders::PowerEntry> entries;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!(base[digits[i]] == *p.default_value)) entries.push_back({orders::Ordinal::finite(i), base[digits[i]]});
      }
      out.push_back(OrderTerm::power(std::move(entries)));
      std::size_t i = digits.size();
      while (i > 0 && digits[i - 1] + 1 == base.size()) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  } else {
    throw std::invalid_argument("oracle: infinite order");
  }
  return out;
}

long rank_of(const std::vector<OrderTerm>& ranked, const OrderTerm& t) {
  auto it = std::find(ranked.begin(), ranked.end(), t);
  return it == ranked.end() ? -1 : static_cast<long>(it - ranked.begin());
}

int ternary_compare(const orders::TernaryTerm& x, const orders::TernaryTerm& y) {
  std::uint64_t len = 0;
  for (const auto& [k, v] : x.support) len = std::max(len, k + 1);
  for (const auto& [k, v] : y.support) len = std::max(len, k + 1);
  std::vector<int> dx(len, 0);
  std::vector<int> dy(len, 0);
  for (const auto& [k, v] : x.support) dx[k] = v;
  for (const auto& [k, v] : y.support) dy[k] = v;
  if (dx < dy) return -1;
  if (dy < dx) return 1;
  return 0;
}

std::optional<OrderTerm> brute_lub(const std::vector<OrderTerm>& ranked, const std::vector<OrderTerm>& s) {
  long top = -1;
  for (const auto& t : s) top = std::max(top, rank_of(ranked, t));
  std::optional<long> best;
  for (long u = 0; u < static_cast<long>(ranked.size()); ++u) {
    if (u >= top && (!best || u < *best)) best = u;
  }
  if (!best) return std::nullopt;
  return ranked[static_cast<std::size_t>(*best)];
}

std::optional<std::vector<std::size_t>> brute_embedding(std::size_t n, std::size_t m) {
  if (n > m) return std::nullopt;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  // prev_permutation walks the selections in increasing lexicographic order
  // of the chosen index tuples; every such tuple is an increasing map, so the
  // search stops at the first one that passes the check.
  do {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) chosen.push_back(i);
    }
    if (std::is_sorted(chosen.begin(), chosen.end())) return chosen;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

std::uint64_t brute_ldim(std::size_t n, std::size_t base) {
  std::uint64_t size = 1;
  for (std::uint64_t k = 0;; ++k) {
    if (brute_embedding(n, size)) return k;
    size *= base;
  }
}

bool brute_patches(const std::vector<long>& b_ranks, const std::vector<long>& a_ranks, bool strict_gaps) {
  const std::size_t m = a_ranks.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<long> lower;
    std::vector<long> upper;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? lower : upper).push_back(a_ranks[i]);
    bool split = true;
    for (long x : lower) {
      for (long y : upper) split = split && x < y;
    }
    if (!split) continue;
    if (strict_gaps && (lower.empty() || upper.empty())) continue;
    bool filled = false;
    for (long b : b_ranks) {
      bool ok = true;
      for (long x : lower) ok = ok && x < b;
      for (long y : upper) ok = ok && b < y;
      filled = filled || ok;
    }
    if (!filled) return false;
  }
  return true;
}

}  // namespace satlab::oracles
