#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "graphs_oracle.hpp"
#include "hf_oracle.hpp"
#include "satlab/error.hpp"
#include "satlab/graphs/bit.hpp"
#include "satlab/hf/collapse.hpp"

using namespace satlab;
using namespace satlab::hf;
using graphs::FiniteDigraph;
using graphs::Vertex;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("encode examples") {
  CHECK(encode(parse_hf("{}")) == Natural(0));
  CHECK(encode(parse_hf("{{},{{}}}")) == Natural(3));
  CHECK(encode(parse_hf("{{{{}}}}")) == Natural(4));
  CHECK(encode(parse_hf("{{{}}, {}, {}}")) == Natural(3));
}

TEST_CASE("decode examples") {
  CHECK(format_hf(decode(0)) == "{}");
  CHECK(format_hf(decode(2)) == "{{{}}}");
  CHECK(format_hf(decode(5)) == "{{},{{{}}}}");
}

TEST_CASE("encode and decode are inverse") {
  for (std::uint64_t c = 0; c < (1u << 16); ++c) {
    const auto x = decode(c);
    REQUIRE(encode(x) == Natural(c));
    if (c < 4096) {
      const auto text = format_hf(x);
      REQUIRE(oracles::brace_code(text) == c);
      REQUIRE(text == oracles::brace_text(c));
      REQUIRE(parse_hf(text) == x);
    }
  }
  // Every set of rank <= 4 has code below 2^16, and there are 2^16 of them.
  std::vector<HFSet> level{HFSet()};
  for (int r = 0; r < 4; ++r) {
    std::vector<HFSet> next;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << level.size()); ++mask) {
      std::vector<HFSet> members;
      for (std::size_t i = 0; i < level.size(); ++i) {
        if ((mask >> i) & 1u) members.push_back(level[i]);
      }
      next.push_back(HFSet::of(members));
    }
    level = std::move(next);
  }
  CHECK(level.size() == 65536);
  for (const auto& x : level) REQUIRE(decode(encode(x)) == x);
}

TEST_CASE("brace grammar") {
  CHECK(code_of([] { parse_hf("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_hf("{} {}"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_hf("#"); }) == ErrorCode::ParseError);
  CHECK(parse_hf("{#3, #0}") == decode(9));
  const auto deep = decode(Natural::power_of_two(65536));  // {2^16}: rank 6
  CHECK(deep.rank() == 6);
  CHECK(format_hf(deep).front() == '{');
  CHECK(parse_hf(format_hf(deep)) == deep);
  const auto x = decode(100);
  CHECK(format_hf(x, 4) == "{{{{}}},{{},{{{}}}},{{{}},{{{}}}}}");
  CHECK(format_hf(x, 3) == "#100");
  CHECK(parse_hf(format_hf(x, 3)) == x);
  // Rank 7 has no materialized code, so it prints in full.
  const auto deeper = HFSet::of({deep});
  CHECK_FALSE(deeper.has_code());
  CHECK(deeper.rank() == 7);
  CHECK(code_of([&] { encode(deeper); }) == ErrorCode::TooLarge);
  CHECK(parse_hf(format_hf(deeper)) == deeper);
  CHECK(deeper > deep);
  CHECK(deeper.contains(deep));
}

TEST_CASE("mostowski_collapse examples") {
  const auto single = mostowski_collapse(FiniteDigraph(1));
  CHECK(single.sets[0] == HFSet());
  const std::vector<Natural> v013{0, 1, 3};
  const auto bit = mostowski_collapse(graphs::bit_digraph(v013));
  CHECK(format_hf(bit.sets[0]) == "{}");
  CHECK(format_hf(bit.sets[1]) == "{{}}");
  CHECK(format_hf(bit.sets[2]) == "{{},{{}}}");
  for (std::size_t i = 0; i < 3; ++i) CHECK(bit.sets[i].code() == v013[i]);
  CHECK(bit.injective);
  CHECK_FALSE(mostowski_collapse(FiniteDigraph(2)).injective);
  CHECK(code_of([] { mostowski_collapse(FiniteDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})); }) ==
        ErrorCode::CyclicInput);
}

TEST_CASE("collapse is the identity on BIT closures") {
  for (std::uint64_t n = 0; n < 1024; n += 7) {
    const auto vertices = bit_closure({Natural(n)});
    const auto c = mostowski_collapse(graphs::bit_digraph(vertices));
    REQUIRE(c.injective);
    for (std::size_t i = 0; i < vertices.size(); ++i) REQUIRE(c.sets[i] == decode(vertices[i]));
  }
}

TEST_CASE("collapse agrees with naive recursion") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<graphs::Edge> arcs;
    for (Vertex u = 1; u < n; ++u) {
      for (Vertex v = 0; v < u; ++v) {
        if (rng() % 3 == 0) arcs.emplace_back(u, v);
      }
    }
    const auto d = FiniteDigraph::from_arcs(n, arcs);
    const auto c = mostowski_collapse(d);
    const auto ref = oracles::naive_collapse_codes(d);
    for (Vertex v = 0; v < n; ++v) REQUIRE(c.sets[v].code() == ref[v]);
  }
}

TEST_CASE("epsilon_embed") {
  CHECK(epsilon_embed_bit(HFSet()) == Natural(0));
  CHECK(epsilon_embed_bit(parse_hf("{{},{{}}}")) == Natural(3));
  for (std::uint64_t c = 0; c < (1u << 16); c += 13) REQUIRE(epsilon_embed_bit(decode(c)) == Natural(c));

  // A relabelled copy of a BIT closure with the table realizer.
  std::mt19937_64 rng(8);
  const auto vertices = bit_closure({Natural(1000), Natural(77)});
  const auto d = graphs::bit_digraph(vertices);
  std::vector<Vertex> perm(d.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto e = oracles::relabel(d, perm);
  const auto collapse = mostowski_collapse(e);
  const std::function<std::optional<Vertex>(const std::vector<Vertex>&)> table =
      [&](const std::vector<Vertex>& s) { return table_realize(e, s); };
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::map<HFSet, Vertex> memo;
    const auto x = decode(vertices[i]);
    const Vertex v = epsilon_embed<Vertex>(x, table, memo);
    REQUIRE(collapse.sets[v] == x);
    for (const auto& [y, image] : memo) {
      for (const auto& [z, image2] : memo) {
        REQUIRE(y.contains(z) == e.has_arc(image, image2));
      }
    }
  }
  std::map<HFSet, Vertex> memo;
  CHECK(code_of([&] { epsilon_embed<Vertex>(decode(Natural(1) << 20), table, memo); }) == ErrorCode::RealizerFailure);
}

TEST_CASE("iso_extensional examples") {
  const auto d013 = graphs::bit_digraph({Natural(0), Natural(1), Natural(3)});
  const auto d012 = graphs::bit_digraph({Natural(0), Natural(1), Natural(2)});
  CHECK(iso_extensional(d013, d013).isomorphic);
  CHECK_FALSE(iso_extensional(d013, d012).isomorphic);
  const auto copy = oracles::relabel(d013, {2, 0, 1});
  const auto r = iso_extensional(d013, copy);
  REQUIRE(r.isomorphic);
  for (const auto& [u, v] : d013.arcs()) CHECK(copy.has_arc(r.mapping[u], r.mapping[v]));
  CHECK(code_of([&] { iso_extensional(FiniteDigraph(2), d013); }) == ErrorCode::NotExtensional);
}

TEST_CASE("iso_extensional agrees with brute-force isomorphism") {
  const auto types = oracles::extensional_digraphs(7);
  std::vector<std::size_t> per_size(8, 0);
  for (const auto& d : types) ++per_size[d.size()];
  CHECK(per_size == std::vector<std::size_t>{1, 1, 1, 2, 9, 88, 1802, 75598});

  std::mt19937_64 rng(6);
  std::set<std::vector<HFSet>> images;
  for (const auto& d : types) {
    std::vector<Vertex> perm(d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto e = oracles::relabel(d, perm);
    const auto r = iso_extensional(d, e);
    REQUIRE(r.isomorphic);
    for (Vertex v = 0; v < d.size(); ++v) REQUIRE(d.out(v).size() == e.out(r.mapping[v]).size());
    if (d.size() <= 6) REQUIRE(oracles::brute_digraph_iso(d, e).has_value());
    auto image = mostowski_collapse(d).sets;
    std::sort(image.begin(), image.end());
    images.insert(std::move(image));
  }
  // Distinct types have distinct collapse images, so iso_extensional is false
  // on every pair of them.
  CHECK(images.size() == types.size());

  for (const auto& a : types) {
    for (const auto& b : types) {
      if (a.size() != b.size() || a.size() > 5) continue;
      REQUIRE(iso_extensional(a, b).isomorphic == oracles::brute_digraph_iso(a, b).has_value());
    }
  }
  const std::size_t first6 = 1 + 1 + 1 + 2 + 9 + 88;
  for (int round = 0; round < 200; ++round) {
    const auto& a = types[first6 + rng() % per_size[6]];
    const auto& b = types[first6 + rng() % per_size[6]];
    REQUIRE(iso_extensional(a, b).isomorphic == oracles::brute_digraph_iso(a, b).has_value());
  }
}
