#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "graphs_oracle.hpp"
#include "satlab/error.hpp"
#include "satlab/graphs/bit.hpp"
#include "satlab/graphs/colouring.hpp"
#include "satlab/graphs/redirect.hpp"
#include "satlab/graphs/scan.hpp"

using namespace satlab;
using namespace satlab::graphs;

namespace {

std::vector<Natural> nats(std::initializer_list<std::uint64_t> xs) { return {xs.begin(), xs.end()}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::vector<Natural> mask_to_nats(std::uint32_t mask) {
  std::vector<Natural> out;
  for (unsigned i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) out.emplace_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("bit_edge") {
  CHECK(bit_edge(0, 1));
  CHECK_FALSE(bit_edge(0, 2));
  CHECK(bit_edge(2, 5));
  CHECK(code_of([] { bit_edge(3, 3); }) == ErrorCode::LoopQuery);
  for (std::uint64_t m = 0; m < 1024; m += 3) {
    for (std::uint64_t n = 0; n < 1024; ++n) {
      if (m == n) continue;
      REQUIRE(bit_edge(m, n) == bit_edge(n, m));
      REQUIRE(bit_edge(m, n) == oracles::bit_adjacent(m, n));
    }
  }
  CHECK(bit_edge(Natural(100), Natural::power_of_two(100)));
  CHECK_FALSE(bit_edge(Natural(99), Natural::power_of_two(100)));
}

TEST_CASE("saturation_witness examples") {
  CHECK(saturation_witness(nats({0, 1}), nats({2})) == Natural(3));
  CHECK(saturation_witness({}, {}) == Natural(0));
  CHECK(saturation_witness(nats({2}), nats({0, 1})) == Natural(4));
  CHECK(code_of([] { saturation_witness(nats({1}), nats({1})); }) == ErrorCode::InvalidArgument);
  const auto fast = fast_witness(nats({0, 1}), nats({2}));
  CHECK(fast == Natural(11));
  CHECK(is_witness(nats({0, 1}), nats({2}), fast));
}

TEST_CASE("saturation_witness is the least witness") {
  const auto table = oracles::brute_witness_table(10, 3, 3);
  for (const auto& [key, v] : table) {
    const auto a = mask_to_nats(key.first);
    const auto b = mask_to_nats(key.second);
    const auto w = saturation_witness(a, b);
    REQUIRE(w == Natural(v));
    REQUIRE(is_witness(a, b, fast_witness(a, b)));
  }
}

TEST_CASE("saturation_witness with large vertices") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    std::vector<Natural> a;
    std::vector<Natural> b;
    for (int i = 0; i < 3; ++i) {
      Natural big = Natural::power_of_two(64 + rng() % 40);
      for (int k = 0; k < 6; ++k) big.set_bit(rng() % 100);
      ((rng() & 1u) ? a : b).push_back(big);
      ((rng() & 1u) ? a : b).push_back(Natural(rng() % 40));
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::erase_if(b, [&](const Natural& x) { return std::binary_search(a.begin(), a.end(), x); });
    try {
      const auto w = saturation_witness(a, b);
      REQUIRE(is_witness(a, b, w));
      if (auto small = w.to_u64(); small && *small < 5000) {
        for (std::uint64_t v = 0; v < *small; ++v) REQUIRE_FALSE(is_witness(a, b, Natural(v)));
      }
    } catch (const Error& e) {
      // Witnesses above a huge A-element need that element as a bit position.
      REQUIRE(e.code() == ErrorCode::TooLarge);
    }
  }
}

TEST_CASE("extensional realization in the BIT digraph") {
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    const auto a = mask_to_nats(mask);
    const auto n = realize_out_set(a);
    REQUIRE(n == Natural(mask));
    REQUIRE(out_set(n) == a);
  }
}

TEST_CASE("check_saturation") {
  CHECK(check_saturation(FiniteGraph::complete(4), 2, 1).saturated);
  const auto r = check_saturation(FiniteGraph(3), 2, 1);
  CHECK_FALSE(r.saturated);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->first == std::vector<Vertex>{0});
  CHECK(r.counterexample->second.empty());
  const auto bit16 = check_saturation(bit_graph(16), 3, 2);
  const auto ref = oracles::brute_saturation_failure(bit_graph(16), 3, 2);
  CHECK(bit16.saturated == !ref.has_value());
  if (ref) CHECK(*bit16.counterexample == *ref);
  std::mt19937_64 rng(17);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng() % 3) edges.emplace_back(i, j);
      }
    }
    const auto g = FiniteGraph::from_edges(n, edges);
    for (std::size_t s = 1; s <= 3; ++s) {
      for (std::size_t t = 1; t <= 3; ++t) {
        const auto mine = check_saturation(g, s, t);
        const auto brute = oracles::brute_saturation_failure(g, s, t);
        REQUIRE(mine.saturated == !brute.has_value());
        if (brute) REQUIRE(*mine.counterexample == *brute);
      }
    }
  }
}

TEST_CASE("graph containers and formats") {
  CHECK(code_of([] { FiniteGraph::from_edges(3, {{1, 1}}); }) == ErrorCode::MalformedGraph);
  CHECK(code_of([] { FiniteGraph::from_edges(3, {{1, 3}}); }) == ErrorCode::MalformedGraph);
  CHECK(code_of([] { FiniteDigraph::from_arcs(2, {{0, 1}, {1, 0}}); }) == ErrorCode::MalformedDigraph);
  CHECK(code_of([] { parse_graph("x\n"); }) == ErrorCode::ParseError);
  const auto g = FiniteGraph::petersen();
  CHECK(g.edge_count() == 15);
  CHECK(parse_graph(format_graph(g)) == g);
  const auto d = parse_digraph("3\n1 > 0\n2 1\n");
  CHECK(d.has_arc(1, 0));
  CHECK(d.has_arc(2, 1));
  CHECK(parse_digraph(format_digraph(d)) == d);
}

TEST_CASE("colouring number examples") {
  CHECK(colouring_number(FiniteGraph::complete(4)).bound == 4);
  CHECK(colouring_number(FiniteGraph::cycle(5)).bound == 3);
  CHECK(colouring_number(FiniteGraph(5)).bound == 1);
  CHECK(colouring_number(FiniteGraph(0)).bound == 0);
  const auto p = FiniteGraph::petersen();
  const auto ordering = colouring_number(p);
  CHECK(is_valid_ordering(p, ordering));
  const auto d = orient_down(p, ordering);
  CHECK(is_acyclic(d));
  std::size_t max_out = 0;
  for (Vertex v = 0; v < d.size(); ++v) max_out = std::max(max_out, d.out(v).size());
  CHECK(max_out == 3);
}

TEST_CASE("colouring number equals the brute-force minimum") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t code : graph_catalog(n)) {
      const auto g = graph_from_code(n, code);
      const auto c = colouring_number(g);
      REQUIRE(is_valid_ordering(g, c));
      REQUIRE(c.bound == oracles::brute_colouring_number(g));
    }
  }
}

TEST_CASE("orient_down and acyclicity") {
  const auto k3 = FiniteGraph::complete(3);
  const auto d = orient_down(k3, {{0, 1, 2}, 3});
  CHECK(d.arcs() == std::vector<Edge>{{1, 0}, {2, 0}, {2, 1}});
  CHECK(orient_down(FiniteGraph(4), {{3, 2, 1, 0}, 1}).arc_count() == 0);
  CHECK(code_of([&] { orient_down(k3, {{0, 1}, 3}); }) == ErrorCode::IncompleteOrdering);
  CHECK(code_of([&] { orient_down(k3, {{0, 1, 1}, 3}); }) == ErrorCode::IncompleteOrdering);
  CHECK(is_acyclic(FiniteDigraph::from_arcs(2, {{1, 0}})));
  CHECK_FALSE(is_acyclic(FiniteDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})));
  std::mt19937_64 rng(2);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng() & 1u) edges.emplace_back(i, j);
      }
    }
    const auto g = FiniteGraph::from_edges(n, edges);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto back = back_degrees(g, order);
    const ColOrdering ordering{order, *std::max_element(back.begin(), back.end()) + 1};
    const auto od = orient_down(g, ordering);
    REQUIRE(oracles::dfs_acyclic(od));
    REQUIRE(is_acyclic(od));
    for (Vertex v = 0; v < n; ++v) REQUIRE(od.out(v).size() < ordering.bound);
    // Random digraphs: Kahn agrees with DFS.
    std::vector<Edge> arcs;
    for (const auto& [u, v] : edges) arcs.emplace_back((rng() & 1u) ? Edge{u, v} : Edge{v, u});
    const auto rd = FiniteDigraph::from_arcs(n, arcs);
    REQUIRE(is_acyclic(rd) == oracles::dfs_acyclic(rd));
  }
}

TEST_CASE("redirect examples") {
  const auto g = bit_graph(64);
  const auto ordering = ColOrdering{[] {
                                      std::vector<Vertex> o(64);
                                      std::iota(o.begin(), o.end(), 0);
                                      return o;
                                    }(),
                                    64};
  const auto none = redirect(g, ordering, {});
  CHECK(none.digraph == orient_down(g, ordering));
  CHECK(none.log.empty());
  const auto one = redirect(g, ordering, {{0, 1}});
  REQUIRE_FALSE(one.failed_target.has_value());
  REQUIRE(one.assignment.size() == 1);
  CHECK(one.digraph.out(one.assignment[0]) == std::vector<Vertex>{0, 1});
  CHECK(is_acyclic(one.digraph));
  CHECK(check_redirect(g, ordering, {{0, 1}}, one).empty());
  const auto edgeless = redirect(FiniteGraph(4), {{0, 1, 2, 3}, 1}, {{0}});
  CHECK(edgeless.failed_target == std::size_t{0});
  CHECK(edgeless.log.empty());
}

TEST_CASE("redirect postconditions on seeded BIT segments") {
  std::mt19937_64 rng(99);
  std::size_t completed = 0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 16 + rng() % 49;
    const auto g = bit_graph(n);
    ColOrdering ordering;
    for (Vertex v = 0; v < n; ++v) ordering.order.push_back(v);
    ordering.bound = n;
    std::vector<std::vector<Vertex>> targets;
    const std::size_t count = rng() % 11;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Vertex> c;
      for (std::size_t k = rng() % 3; k > 0; --k) c.push_back(static_cast<Vertex>(rng() % 6));
      targets.push_back(c);
    }
    for (bool alt : {false, true}) {
      const auto r = redirect(g, ordering, targets, {alt});
      REQUIRE(oracles::dfs_acyclic(r.digraph));
      REQUIRE(r.invariant_violations.empty());
      for (std::size_t i = 0; i < r.assignment.size(); ++i) {
        auto c = targets[i];
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        REQUIRE(r.digraph.out(r.assignment[i]) == c);
      }
      std::set<std::pair<Vertex, Vertex>> reversed;
      for (const auto& e : r.log) {
        for (const auto& [x, c] : e.reversed) REQUIRE(reversed.insert({std::min(x, c), std::max(x, c)}).second);
      }
      if (!alt && !r.failed_target) ++completed;
    }
  }
  CHECK(completed > 20);
}

TEST_CASE("graph catalog and complement scan") {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n <= 7; ++n) CHECK(graph_catalog(n).size() == counts[n]);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(oracles::brute_class_count(n) == counts[n]);
  const auto one = complement_scan(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].id == 1);
  CHECK(one[0].col == 1);
  CHECK(one[0].col_complement == 1);
  const auto two = complement_scan(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].col == 2);
  CHECK(two[0].col_complement == 1);
  CHECK(two[1].col == 1);
  CHECK(two[1].col_complement == 2);
  const auto four = complement_scan(4);
  CHECK(four.size() == 11);
  for (const auto& row : four) {
    const auto g = graph_from_code(4, row.code);
    CHECK(row.col == oracles::brute_colouring_number(g));
    CHECK(row.col_complement == oracles::brute_colouring_number(g.complement()));
  }
  CHECK(complement_scan(8, 5, 10).size() == 10);
  CHECK(complement_scan(8, 5, 10)[3].code == complement_scan(8, 5, 10)[3].code);
  CHECK(code_of([] { complement_scan(9); }) == ErrorCode::TooLarge);
}
