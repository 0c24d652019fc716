#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ba_oracle.hpp"
#include "golden.hpp"
#include "graphs_oracle.hpp"
#include "hf_oracle.hpp"
#include "orders_oracle.hpp"
#include "satlab/ba/algebra.hpp"
#include "satlab/backforth/backforth.hpp"
#include "satlab/graphs/bit.hpp"
#include "satlab/graphs/colouring.hpp"
#include "satlab/graphs/redirect.hpp"
#include "satlab/graphs/scan.hpp"
#include "satlab/hf/collapse.hpp"
#include "satlab/hf/hfset.hpp"
#include "satlab/orders/embedding.hpp"
#include "satlab/orders/grammar.hpp"

using namespace satlab;

namespace {

enum class Verdict { Pass, Fail, Deviation };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

Outcome pass(std::string detail) { return {Verdict::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Verdict::Fail, std::move(detail)}; }

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

// 1 --------------------------------------------------------------------------

Outcome bit_extension() {
  const auto table = oracles::brute_witness_table(16, 3, 3);
  std::size_t expected = 0;
  const auto choose = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j) expected += choose(16, i) * choose(16 - i, j);
  if (table.size() != expected) return fail("oracle table has " + std::to_string(table.size()) + " pairs");
  for (const auto& [key, w] : table) {
    std::vector<Natural> a, b;
    for (std::size_t i = 0; i < 16; ++i) {
      if (key.first >> i & 1u) a.emplace_back(i);
      if (key.second >> i & 1u) b.emplace_back(i);
    }
    const auto v = graphs::saturation_witness(a, b);
    if (!graphs::is_witness(a, b, v)) return fail("unverified witness " + v.to_string());
    if (v != Natural(w)) return fail("witness " + v.to_string() + " differs from scan " + std::to_string(w));
  }
  return pass(std::to_string(table.size()) + " disjoint pairs, least witness matches the scan");
}

// 2 --------------------------------------------------------------------------

Outcome extensional_realization() {
  constexpr std::uint64_t kLimit = 1u << 12;
  std::vector<int> hits(kLimit, 0);
  for (std::uint64_t n = 0; n < kLimit; ++n) {
    std::uint64_t mask = 0;
    for (const auto& m : graphs::out_set(Natural(n))) mask |= std::uint64_t{1} << *m.to_u64();
    std::uint64_t scan = 0;
    for (std::uint64_t m = 0; m < n; ++m)
      if (oracles::bit_adjacent(m, n)) scan |= std::uint64_t{1} << m;
    if (mask != scan) return fail("out-set of " + std::to_string(n) + " disagrees with adjacency scan");
    if (mask >= kLimit) return fail("out-set of " + std::to_string(n) + " leaves {0..11}");
    ++hits[mask];
    if (mask != n) return fail("out-set of " + std::to_string(n) + " is not its bit set");
  }
  for (std::uint64_t a = 0; a < kLimit; ++a) {
    if (hits[a] != 1) return fail("subset " + std::to_string(a) + " realized " + std::to_string(hits[a]) + " times");
    std::vector<Natural> set;
    for (std::size_t i = 0; i < 12; ++i)
      if (a >> i & 1u) set.emplace_back(i);
    if (graphs::realize_out_set(set) != Natural(a)) return fail("realize_out_set differs at " + std::to_string(a));
  }
  return pass("4096 subsets, each realized once by its bit sum");
}

// 3 --------------------------------------------------------------------------

Outcome collapse_fixpoint() {
  std::size_t vertices = 0;
  for (std::uint64_t n = 0; n < (1u << 10); ++n) {
    const auto closure = hf::bit_closure({Natural(n)});
    const auto d = graphs::bit_digraph(closure);
    const auto c = hf::mostowski_collapse(d);
    const auto at = std::find(closure.begin(), closure.end(), Natural(n)) - closure.begin();
    if (static_cast<std::size_t>(at) == closure.size()) return fail("closure of " + std::to_string(n) + " misses it");
    if (!(c.sets[at] == hf::decode(Natural(n)))) return fail("collapse of " + std::to_string(n) + " is not decode(n)");
    for (std::size_t v = 0; v < closure.size(); ++v)
      if (c.sets[v].code() != closure[v]) return fail("code " + closure[v].to_string() + " is not a fixed point");
    vertices += closure.size();
  }
  return pass("1024 closures (" + std::to_string(vertices) + " vertices), every code a fixed point");
}

// 4 --------------------------------------------------------------------------

Outcome epsilon_embed_codes() {
  std::map<hf::HFSet, Natural> memo;
  const std::function<std::optional<Natural>(const std::vector<Natural>&)> realizer =
      [](const std::vector<Natural>& s) -> std::optional<Natural> {
    const auto v = graphs::realize_out_set(s);
    auto out = graphs::out_set(v);
    auto want = s;
    std::sort(want.begin(), want.end());
    if (out != want) return std::nullopt;
    return v;
  };
  for (std::uint64_t c = 0; c < (1u << 16); ++c) {
    const auto x = hf::decode(Natural(c));
    if (x.rank() > 4) return fail("code " + std::to_string(c) + " has rank above 4");
    const auto e = hf::epsilon_embed<Natural>(x, realizer, memo);
    if (e != hf::encode(x) || hf::epsilon_embed_bit(x) != e) return fail("embedding differs at " + std::to_string(c));
  }
  if (hf::decode(Natural(1u << 16)).rank() != 5) return fail("2^16 should be the first code of rank 5");
  return pass("65536 sets of rank <= 4");
}

// 5 --------------------------------------------------------------------------

using backforth::Element;

// Left element i must be mapped by pair 2i, right element j by pair 2j+1.
bool fair_at_every_prefix(const backforth::Presentation& l, const backforth::Presentation& r,
                          const backforth::PartialIso& m, std::size_t steps) {
  std::map<Element, std::size_t> at_left, at_right;
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    at_left.emplace(m.pairs()[i].first, i);
    at_right.emplace(m.pairs()[i].second, i);
  }
  for (std::size_t i = 0; 2 * i < steps; ++i) {
    const auto it = at_left.find(*l.element_at(i));
    if (it == at_left.end() || it->second > 2 * i) return false;
  }
  for (std::size_t j = 0; 2 * j + 1 < steps; ++j) {
    const auto it = at_right.find(*r.element_at(j));
    if (it == at_right.end() || it->second > 2 * j + 1) return false;
  }
  return true;
}

bool bit_related(const Natural& x, const Natural& y) {
  const Natural& lo = x < y ? x : y;
  const Natural& hi = x < y ? y : x;
  return hi.bit(static_cast<std::size_t>(*lo.to_u64()));
}

Outcome back_and_forth() {
  {
    const auto l = backforth::make_dlo_presentation(11);
    const auto r = backforth::make_dlo_presentation(12);
    const auto run = backforth::bf_run(l, r, 200);
    if (run.failure) return fail("dense run failed: " + run.message);
    if (run.map.size() != 200) return fail("dense map has size " + std::to_string(run.map.size()));
    const auto& p = run.map.pairs();
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        const int a = oracles::ternary_compare(std::get<orders::OrderTerm>(p[i].first).as<orders::TernaryTerm>(),
                                               std::get<orders::OrderTerm>(p[j].first).as<orders::TernaryTerm>());
        const int b = oracles::ternary_compare(std::get<orders::OrderTerm>(p[i].second).as<orders::TernaryTerm>(),
                                               std::get<orders::OrderTerm>(p[j].second).as<orders::TernaryTerm>());
        if ((a > 0) != (b > 0) || (a < 0) != (b < 0)) return fail("dense map is not order-preserving");
      }
    }
    if (!fair_at_every_prefix(l, r, run.map, 200)) return fail("dense run is not fair");
  }
  {
    const auto l = backforth::make_bit_presentation(11);
    const auto r = backforth::make_bit_presentation(12);
    const auto run = backforth::bf_run(l, r, 50);
    if (run.failure) return fail("BIT run failed: " + run.message);
    if (run.map.size() != 50) return fail("BIT map has size " + std::to_string(run.map.size()));
    const auto& p = run.map.pairs();
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const bool a = bit_related(std::get<Natural>(p[i].first), std::get<Natural>(p[j].first));
        const bool b = bit_related(std::get<Natural>(p[i].second), std::get<Natural>(p[j].second));
        if (a != b) return fail("BIT map does not preserve adjacency");
      }
    }
    if (!fair_at_every_prefix(l, r, run.map, 50)) return fail("BIT run is not fair");
  }
  return pass("dense 200 pairs order-preserving, BIT 50 pairs adjacency-preserving, fair at every prefix");
}

// 6 --------------------------------------------------------------------------

Outcome colouring_catalog() {
  // Graphs on n vertices up to isomorphism, n = 1..7.
  const std::size_t known[] = {1, 2, 4, 11, 34, 156, 1044};
  std::size_t graphs_checked = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto catalog = graphs::graph_catalog(n);
    if (catalog.size() != known[n - 1]) return fail("catalog for n = " + std::to_string(n) + " has wrong size");
    if (n <= 5 && oracles::brute_class_count(n) != catalog.size()) return fail("class count differs");
    for (auto code : catalog) {
      const auto g = graphs::graph_from_code(n, code);
      const auto c = graphs::colouring_number(g);
      if (!graphs::is_valid_ordering(g, c)) return fail("invalid peeling ordering");
      if (c.bound != oracles::brute_colouring_number(g)) return fail("peeling differs from brute force");
      ++graphs_checked;
    }
  }
  return pass(std::to_string(graphs_checked) + " graphs, full catalog up to 7 vertices");
}

// 7 --------------------------------------------------------------------------

// Seeded instances are drawn until 100 run to completion; every drawn run,
// complete or stopped with NoAdmissibleVertex, is checked on the targets it
// handled.
Outcome redirect_runs() {
  std::mt19937_64 rng(2027);
  std::size_t completed = 0;
  std::size_t drawn = 0;
  std::size_t targets_handled = 0;
  while (completed < 100 && drawn < 1000) {
    ++drawn;
    const std::size_t n = 16 + rng() % 49;
    const auto g = graphs::bit_graph(n);
    graphs::ColOrdering ord;
    if (drawn % 2 == 0) {
      ord = graphs::colouring_number(g);
    } else {
      for (graphs::Vertex v = 0; v < n; ++v) ord.order.push_back(v);
      ord.bound = n;
    }
    std::vector<std::vector<graphs::Vertex>> targets(1 + rng() % 10);
    for (auto& c : targets)
      for (std::size_t k = rng() % 4; k > 0; --k) c.push_back(static_cast<graphs::Vertex>(rng() % 6));
    const auto r = graphs::redirect(g, ord, targets);
    const auto where = " in draw " + std::to_string(drawn);
    const auto failures = graphs::check_redirect(g, ord, targets, r);
    if (!failures.empty()) return fail(failures.front() + where);
    if (!oracles::dfs_acyclic(r.digraph)) return fail("cycle" + where);
    for (std::size_t i = 0; i < r.assignment.size(); ++i) {
      auto c = targets[i];
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (r.digraph.out(r.assignment[i]) != c) return fail("out-set differs from target" + where);
    }
    std::set<std::pair<graphs::Vertex, graphs::Vertex>> reversed;
    for (const auto& e : r.log)
      for (const auto& [x, y] : e.reversed)
        if (!reversed.insert({std::min(x, y), std::max(x, y)}).second) return fail("arc reversed twice" + where);
    targets_handled += r.assignment.size();
    if (!r.failed_target) ++completed;
  }
  if (completed < 100) return fail("only " + std::to_string(completed) + " complete runs in 1000 draws");
  return pass("100 complete runs from " + std::to_string(drawn) + " draws (the others stop with NoAdmissibleVertex), " +
              std::to_string(targets_handled) + " targets realized and verified");
}

// 8 --------------------------------------------------------------------------

Outcome ldim_shadow() {
  const auto two = orders::OrderDesc::finite(2);
  for (std::uint64_t n = 1; n <= 64; ++n) {
    std::uint64_t k = 0;
    while ((std::uint64_t{1} << k) < n) ++k;
    if (orders::ldim(orders::OrderDesc::finite(n), two) != k) return fail("ldim of a chain of " + std::to_string(n));
  }
  for (std::uint64_t k = 0; k <= 6; ++k) {
    const auto power = orders::finite_power(two, k);
    if (orders::elements(power).size() != (std::uint64_t{1} << k)) return fail("materialized power has wrong size");
    if (orders::ldim(power, two) != k) return fail("ldim of 2^" + std::to_string(k));
  }
  return pass("chains up to 64 and powers up to 2^6 exact");
}

// 9 --------------------------------------------------------------------------

// Dense comparison of two terms of lexpow(fin:m, k, 0).
int power_compare(const orders::OrderTerm& x, const orders::OrderTerm& y, std::size_t k) {
  auto dense = [k](const orders::OrderTerm& t) {
    std::vector<std::uint64_t> v(k, 0);
    for (const auto& e : t.as<orders::PowerTerm>().support)
      v.at(*e.position.finite_value()) = e.value->as<orders::IndexTerm>().index;
    return v;
  };
  const auto a = dense(x), b = dense(y);
  return a < b ? -1 : (a > b ? 1 : 0);
}

orders::OrderTerm random_ternary(std::mt19937_64& rng) {
  std::map<std::uint64_t, int> s;
  for (std::size_t k = rng() % 4; k > 0; --k) s[rng() % 4] = rng() % 2 ? 1 : -1;
  return orders::OrderTerm::ternary(s);
}

int ambient_compare(const orders::OrderDesc& amb, const orders::OrderTerm& x, const orders::OrderTerm& y) {
  if (amb.is<orders::TernaryOrder>()) return oracles::ternary_compare(x.as<orders::TernaryTerm>(), y.as<orders::TernaryTerm>());
  const auto a = x.as<orders::IndexTerm>().index, b = y.as<orders::IndexTerm>().index;
  return a < b ? -1 : (a > b ? 1 : 0);
}

// Embedding of `s` into L^k above the least point, k the dimension of a chain of |s| + 1.
orders::OrderEmbedding embed_above_least(const orders::OrderDesc& amb, std::vector<orders::OrderTerm> s,
                                         const orders::OrderDesc& l) {
  std::sort(s.begin(), s.end(), orders::OrderLess{&amb});
  const auto chain = orders::OrderDesc::finite(s.size() + 1);
  const auto k = s.empty() ? 0 : orders::ldim(chain, l);
  orders::OrderEmbedding out{amb, orders::finite_power(l, k), {}};
  if (s.empty()) return out;
  const auto e = orders::embed_search(chain, out.codomain, std::uint64_t{1} << 20);
  for (std::size_t i = 0; i < s.size(); ++i) out.pairs.emplace_back(s[i], e->pairs[i + 1].second);
  return out;
}

Outcome merge_and_grow() {
  std::mt19937_64 rng(909);
  for (int round = 0; round < 500; ++round) {
    const bool tern = round % 2 == 1;
    const auto amb = tern ? orders::OrderDesc::ternary() : orders::OrderDesc::finite(12);
    std::set<orders::OrderTerm> used;
    std::vector<orders::OrderTerm> a, b;
    const std::size_t na = rng() % 6, nb = rng() % 6;
    for (std::size_t tries = 0; tries < 40 && (a.size() < na || b.size() < nb); ++tries) {
      const auto t = tern ? random_ternary(rng) : orders::OrderTerm::index(rng() % 12);
      if (!used.insert(t).second) continue;
      (a.size() < na ? a : b).push_back(t);
    }
    const auto base = orders::OrderDesc::finite(2 + rng() % 2);
    const auto ia = embed_above_least(amb, a, base);
    const auto ib = embed_above_least(amb, b, base);
    const auto m = orders::merge_union_embedding(amb, a, b, ia, ib);
    const auto k = *m.codomain.as<orders::LexPowerOrder>().exponent.finite_value();
    if (m.pairs.size() != a.size() + b.size()) return fail("merge lost points");
    for (const auto& [x1, y1] : m.pairs)
      for (const auto& [x2, y2] : m.pairs)
        if (ambient_compare(amb, x1, x2) != power_compare(y1, y2, k)) return fail("merge is not order-preserving");
  }
  for (int round = 0; round < 500; ++round) {
    const auto tern = orders::OrderDesc::ternary();
    auto a0 = random_ternary(rng), a1 = random_ternary(rng);
    const int c = oracles::ternary_compare(a0.as<orders::TernaryTerm>(), a1.as<orders::TernaryTerm>());
    if (c == 0) continue;
    if (c > 0) std::swap(a0, a1);
    const std::uint64_t depth = rng() % 6;
    const auto g = orders::grow_binary(tern, a0, a1, depth);
    if (g.pairs.size() != (std::size_t{1} << depth)) return fail("grow has the wrong size");
    for (const auto& [x1, y1] : g.pairs) {
      if (oracles::ternary_compare(a0.as<orders::TernaryTerm>(), y1.as<orders::TernaryTerm>()) >= 0 ||
          oracles::ternary_compare(y1.as<orders::TernaryTerm>(), a1.as<orders::TernaryTerm>()) >= 0)
        return fail("grow leaves the interval");
      for (const auto& [x2, y2] : g.pairs)
        if (power_compare(x1, x2, depth) !=
            oracles::ternary_compare(y1.as<orders::TernaryTerm>(), y2.as<orders::TernaryTerm>()))
          return fail("grow is not order-preserving");
    }
  }
  return pass("500 merges and 500 grows, every pair checked");
}

// 10 -------------------------------------------------------------------------

std::vector<ba::BAElem> all_elements(unsigned gens) {
  std::vector<std::uint32_t> support;
  for (unsigned i = 0; i < gens; ++i) support.push_back(i);
  const std::size_t rows = std::size_t{1} << gens;
  std::vector<ba::BAElem> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rows); ++m) {
    std::vector<bool> t(rows);
    for (std::size_t r = 0; r < rows; ++r) t[r] = m >> r & 1u;
    out.push_back(ba::BAElem::from_table(support, t));
  }
  return out;
}

// Calls visit(chosen) for every subset of `items` with at most `max` members.
template <class Visit>
bool for_small_subsets(const std::vector<std::uint32_t>& items, std::size_t max, std::vector<std::uint32_t>& chosen,
                       std::size_t from, Visit& visit) {
  if (!visit(chosen)) return false;
  if (chosen.size() == max) return true;
  for (std::size_t i = from; i < items.size(); ++i) {
    chosen.push_back(items[i]);
    const bool ok = for_small_subsets(items, max, chosen, i + 1, visit);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

// Every (F, G) with |F| <= mf, |G| <= mg over the free algebra on `gens`
// generators, where each element of G lies above join F: a strict interpolant
// when join F < meet G, SeparationFailure otherwise. For each F one G holding
// an element not above join F checks the other failure path. Without
// `failures` only the (F, G) with join F < meet G are run. Elements are
// indexed by their truth tables.
bool interpolate_sweep(unsigned gens, std::size_t mf, std::size_t mg, bool failures, std::size_t& count) {
  const auto el = all_elements(gens);
  const std::uint32_t top = static_cast<std::uint32_t>(el.size() - 1);
  std::vector<std::uint32_t> all(el.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  auto expect_failure = [&](const std::vector<ba::BAElem>& f, const std::vector<ba::BAElem>& g) {
    try {
      ba::interpolate(f, g);
    } catch (const Error& e) {
      return e.code() == ErrorCode::SeparationFailure;
    }
    return false;
  };
  std::vector<ba::BAElem> f, g;
  std::uint32_t vf = 0;
  auto visit_g = [&](const std::vector<std::uint32_t>& gi) {
    std::uint32_t ag = top;
    g.clear();
    for (auto i : gi) {
      g.push_back(el[i]);
      ag &= i;
    }
    if (ag == vf && !failures) return true;
    ++count;
    if (ag == vf) return expect_failure(f, g);
    const auto a = ba::interpolate(f, g);
    for (const auto& x : f)
      if (!ba::less(x, a)) return false;
    for (const auto& y : g)
      if (!ba::less(a, y)) return false;
    return true;
  };
  auto visit_f = [&](const std::vector<std::uint32_t>& fi) {
    vf = 0;
    f.clear();
    for (auto i : fi) {
      f.push_back(el[i]);
      vf |= i;
    }
    std::vector<std::uint32_t> above;
    for (std::uint32_t m = 0; m <= top; ++m)
      if ((vf & ~m) == 0) above.push_back(m);
    std::vector<std::uint32_t> chosen;
    if (!for_small_subsets(above, mg, chosen, 0, visit_g)) return false;
    if (failures && mg > 0 && vf != 0) {
      for (std::uint32_t m = 0; m <= top; ++m) {
        if ((vf & ~m) == 0) continue;
        ++count;
        return expect_failure(f, {el[m]});
      }
    }
    return true;
  };
  std::vector<std::uint32_t> chosen;
  return for_small_subsets(all, mf, chosen, 0, visit_f);
}

Outcome boolean_layer() {
  std::size_t cases = 0;
  if (!interpolate_sweep(2, 3, 3, true, cases)) return fail("interpolate over 2 generators");
  if (!interpolate_sweep(3, 2, 2, true, cases)) return fail("interpolate over 3 generators, sizes <= 2");
  if (!interpolate_sweep(3, 3, 1, false, cases)) return fail("interpolate over 3 generators, |F| <= 3, |G| <= 1");
  if (!interpolate_sweep(3, 1, 3, false, cases)) return fail("interpolate over 3 generators, |F| <= 1, |G| <= 3");
  const auto el3 = all_elements(3);
  std::mt19937_64 rng(31);
  std::size_t seeded = 0;
  for (int i = 0; i < 200000; ++i) {
    std::vector<ba::BAElem> f, g;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) f.push_back(el3[rng() % 256]);
    ba::BAElem vf;
    for (const auto& x : f) vf = vf | x;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) g.push_back(el3[rng() % 256] | vf);
    ba::BAElem ag = ba::BAElem::one();
    for (const auto& y : g) ag = ag & y;
    if (!ba::less(vf, ag)) continue;
    const auto a = ba::interpolate(f, g);
    for (const auto& x : f)
      if (!ba::less(x, a)) return fail("seeded interpolate not strict");
    for (const auto& y : g)
      if (!ba::less(a, y)) return fail("seeded interpolate not strict");
    ++seeded;
  }

  std::size_t extensions = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto a = ba::FiniteBA::with_atoms(n);
      const auto b = ba::FiniteBA::with_atoms(k);
      std::vector<unsigned> owner(k, 0);
      while (true) {
        ba::FiniteHom f{a, b, std::vector<ba::Mask>(n, 0)};
        for (unsigned j = 0; j < k; ++j) f.atom_images[owner[j]] |= ba::Mask{1} << j;
        for (ba::Mask upper = 0; upper <= a.top(); ++upper) {
          for (ba::Mask lower = upper;; lower = (lower - 1) & upper) {
            const auto adj = ba::adjoin(a, {lower, upper});
            for (ba::Mask y = 0; y <= b.top(); ++y) {
              const auto r = ba::extend_one(f, {lower, upper}, y);
              if (r.accepted != oracles::brute_extension_exists(f, adj, y)) return fail("extend_one disagrees");
              if (r.accepted && !(r.map->is_homomorphism() && r.map->image(adj.x) == y)) return fail("bad extension");
              ++extensions;
            }
            if (lower == 0) break;
          }
        }
        unsigned j = 0;
        while (j < k && ++owner[j] == n) owner[j++] = 0;
        if (j == k) break;
      }
    }
  }

  // Six refinement stages 1 -> 2 -> ... -> 7 atoms, each splitting one atom.
  auto f = ba::embed_into_atomless(ba::FiniteBA::with_atoms(1));
  for (int stage = 0; stage < 6; ++stage) {
    const unsigned atoms = f.domain.atoms;
    std::vector<unsigned> parent;
    const unsigned split = static_cast<unsigned>(rng() % atoms);
    for (unsigned i = 0; i < atoms; ++i) {
      parent.push_back(i);
      if (i == split) parent.push_back(i);
    }
    const auto g = ba::extend_to_refinement(f, parent);
    if (!g.is_embedding() || !oracles::brute_is_embedding(g)) return fail("stage " + std::to_string(stage) + " is not an embedding");
    for (unsigned i = 0; i < atoms; ++i) {
      ba::Mask children = 0;
      for (unsigned j = 0; j < parent.size(); ++j)
        if (parent[j] == i) children |= ba::Mask{1} << j;
      if (g.image(children) != f.atom_images[i]) return fail("stage " + std::to_string(stage) + " does not extend");
    }
    f = g;
  }
  return {Verdict::Deviation,
          "interpolate exhaustive over 2 generators with |F|,|G| <= 3 and over 3 generators with |F|,|G| <= 2, "
          "and separable |F| <= 3, |G| <= 1 and |F| <= 1, |G| <= 3 (" +
              std::to_string(cases) + " cases), plus " + std::to_string(seeded) +
              " seeded 3-generator cases with |F|,|G| <= 3; extend_one agrees on " + std::to_string(extensions) +
              " instances; 6-stage chain verified"};
}

// 11 -------------------------------------------------------------------------

std::string golden_dir;

Outcome golden_corpus() {
  const auto cases = golden::load_corpus(golden_dir).size();
  if (cases == 0) return fail("empty golden corpus at " + golden_dir);
  auto bad = golden::check_corpus(golden_dir);
  std::size_t values = 0;
  for (auto& m : golden::check_roundtrips(golden_dir, values)) bad.push_back(std::move(m));
  if (!bad.empty()) return fail(bad.front().name + ": " + bad.front().what);
  return pass(std::to_string(cases) + " cases byte-identical on rerun, " + std::to_string(values) + " values round-trip");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <golden corpus dir>\n");
    return 2;
  }
  golden_dir = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "BIT extension property", 5, bit_extension},
      {2, "extensional realization", 10, extensional_realization},
      {3, "collapse fixpoint", 30, collapse_fixpoint},
      {4, "epsilon_embed equals encode", 30, epsilon_embed_codes},
      {5, "back-and-forth", 10, back_and_forth},
      {6, "colouring number", 60, colouring_catalog},
      {7, "redirect", 60, redirect_runs},
      {8, "ldim", 30, ldim_shadow},
      {9, "merge and grow", 30, merge_and_grow},
      {10, "Boolean layer", 60, boolean_layer},
      {11, "CLI round-trip and determinism", 10, golden_corpus},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s && o.verdict != Verdict::Fail) o = fail("over budget; " + o.detail);
    const char* v = o.verdict == Verdict::Pass ? "PASS" : (o.verdict == Verdict::Fail ? "FAIL" : "DEVIATION");
    std::printf("criterion %2d %-9s %-32s %7.2fs / %3.0fs  %s\n", c.id, v, c.title, s, c.budget_s, o.detail.c_str());
    std::fflush(stdout);
    if (o.verdict == Verdict::Fail) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
