#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "ba_oracle.hpp"
#include "satlab/ba/algebra.hpp"
#include "satlab/error.hpp"

using namespace satlab;
using namespace satlab::ba;

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

BAElem t(std::string_view s) { return parse_term(s); }

// All elements over v0..v(gens-1).
std::vector<BAElem> all_elements(unsigned gens) {
  std::vector<std::uint32_t> support(gens);
  for (unsigned i = 0; i < gens; ++i) support[i] = i;
  std::vector<BAElem> out;
  const std::size_t rows = std::size_t{1} << gens;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << rows); ++f) {
    std::vector<bool> table(rows);
    for (std::size_t r = 0; r < rows; ++r) table[r] = (f >> r) & 1u;
    out.push_back(BAElem::from_table(support, table));
  }
  return out;
}

std::vector<std::vector<BAElem>> subsets_up_to(const std::vector<BAElem>& pool, std::size_t k) {
  std::vector<std::vector<BAElem>> out{{}};
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<BAElem> s;
      for (auto i : idx) s.push_back(pool[i]);
      out.push_back(std::move(s));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

bool separable(const std::vector<BAElem>& f, const std::vector<BAElem>& g) {
  BAElem vf;
  for (const auto& x : f) vf = vf | x;
  BAElem ag = BAElem::one();
  for (const auto& y : g) ag = ag & y;
  for (const auto& x : f) {
    for (const auto& y : g) {
      if (!less(x, y)) return false;
    }
  }
  return less(vf, ag);
}

void check_interpolant(const std::vector<BAElem>& f, const std::vector<BAElem>& g) {
  if (separable(f, g)) {
    const BAElem a = interpolate(f, g);
    for (const auto& x : f) REQUIRE(less(x, a));
    for (const auto& y : g) REQUIRE(less(a, y));
  } else {
    REQUIRE(code_of([&] { interpolate(f, g); }) == ErrorCode::SeparationFailure);
  }
}

}  // namespace

TEST_CASE("ba_ops examples") {
  CHECK((t("v0") & ~t("v0")).is_zero());
  CHECK((t("v0") | t("v1")).support() == BAElem::Support{0, 1});
  CHECK(((t("v0") | t("v1")) & ~t("v0")) == t("v1 & ~v0"));
  CHECK(leq(t("v0 & v1"), t("v0")));
  CHECK_FALSE(leq(t("v0"), t("v0 & v1")));
  CHECK((t("v3 | ~v3")).is_one());
  CHECK(t("(v0 & v5) | (v0 & ~v5)").support() == BAElem::Support{0});
  CHECK(format_term(t("v1 & ~v0")) == "~v0 & v1");
  CHECK(format_term(t("v0 | v2 & v1 & ~v0")) == "v0 | v1 & v2");
  CHECK(format_term(BAElem::zero()) == "0");
  CHECK(format_term(BAElem::one()) == "1");
  CHECK(code_of([] { parse_term("v0 &"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_term("(v0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_term("x1"); }) == ErrorCode::ParseError);
}

TEST_CASE("canonical form against truth tables") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 10000; ++round) {
    const unsigned gens = 1 + static_cast<unsigned>(rng() % 5);
    const auto a = oracles::random_expr(rng, gens, 4);
    const auto b = oracles::random_expr(rng, gens, 4);
    const BAElem x = parse_term(a.text);
    const BAElem y = parse_term(b.text);
    REQUIRE(oracles::table_of(x, gens) == a.table);
    REQUIRE((x == y) == (a.table == b.table));
    // Minimal support: each generator in it changes the value somewhere.
    for (auto g : x.support()) REQUIRE(x.cofactor(g, false) != x.cofactor(g, true));
    REQUIRE(parse_term(format_term(x)) == x);
  }
  // Wide supports print through the Shannon fallback and still round-trip.
  BAElem wide;
  for (std::uint32_t i = 0; i < 16; i += 2) wide = wide | (BAElem::var(i) & ~BAElem::var(i + 1));
  CHECK(wide.support().size() == 16);
  CHECK(parse_term(format_term(wide)) == wide);
}

TEST_CASE("interpolate examples") {
  CHECK(interpolate({t("v0")}, {t("v0 | v1")}) == t("v0 | (v2 & v1 & ~v0)"));
  CHECK(interpolate({}, {BAElem::one()}) == t("v0"));
  CHECK(interpolate({BAElem::zero()}, {BAElem::one()}) == t("v0"));
  CHECK(interpolate({}, {}) == t("v0"));
  CHECK(interpolate({t("v4")}, {}) == t("v4 | v5"));
  CHECK(code_of([] { interpolate({t("v0")}, {t("v0")}); }) == ErrorCode::SeparationFailure);
  CHECK(code_of([] { interpolate({t("v0"), t("v1")}, {t("v0 | v1")}); }) == ErrorCode::SeparationFailure);
  CHECK(code_of([] { interpolate({t("v0")}, {t("v1")}); }) == ErrorCode::SeparationFailure);
}

TEST_CASE("interpolate is strict") {
  const auto two = all_elements(2);
  const auto small = subsets_up_to(two, 3);
  for (const auto& f : small) {
    for (const auto& g : small) check_interpolant(f, g);
  }
  const auto three = all_elements(3);
  std::vector<std::vector<BAElem>> singles{{}};
  for (const auto& x : three) singles.push_back({x});
  for (const auto& f : singles) {
    for (const auto& g : singles) check_interpolant(f, g);
  }
  std::mt19937_64 rng(5);
  const auto four = all_elements(4);
  for (int round = 0; round < 20000; ++round) {
    const auto& pool = round % 2 == 0 ? three : four;
    const std::size_t limit = round % 2 == 0 ? 3 : 4;
    std::vector<BAElem> f, g;
    const BAElem pivot = pool[rng() % pool.size()];
    for (std::size_t i = rng() % (limit + 1); i > 0; --i) f.push_back(pool[rng() % pool.size()] & pivot);
    for (std::size_t i = rng() % (limit + 1); i > 0; --i) g.push_back(pool[rng() % pool.size()] | pivot);
    check_interpolant(f, g);
  }
}

TEST_CASE("extend_one examples") {
  const auto trivial = embed_into_atomless(FiniteBA::with_atoms(1));
  const auto r = extend_one(trivial, {0, 1}, t("v0"));
  CHECK(r.accepted);
  CHECK(r.injective);
  CHECK(r.map->is_embedding());
  CHECK(r.adjunction.extended.atoms == 2);

  // A generated by p: atoms p, ~p. x >= p and x splits ~p.
  const auto f = embed_into_atomless(FiniteBA::with_atoms(2));
  const Mask p = 0b01;
  const auto rejected = extend_one(f, {p, 0b11}, t("v1"));
  CHECK_FALSE(rejected.accepted);
  REQUIRE(rejected.witness);
  CHECK(rejected.witness->first == p);
  CHECK(rejected.witness->second == 0b11);
  const auto upper = extend_one(f, {0, p}, t("v1"));
  CHECK_FALSE(upper.accepted);
  CHECK(upper.witness == std::make_pair(Mask{0}, p));
  const auto ok = extend_one(f, {p, 0b11}, t("v0 | v1"));
  CHECK(ok.accepted);
  CHECK(ok.injective);
  // Accepted but not injective: y = f(p) collapses the split atom.
  const auto flat = extend_one(f, {p, 0b11}, t("v0"));
  CHECK(flat.accepted);
  CHECK_FALSE(flat.injective);
  CHECK(flat.map->is_homomorphism());
}

TEST_CASE("extend_one agrees with brute-force homomorphism search") {
  std::size_t accepted = 0;
  std::size_t total = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto a = FiniteBA::with_atoms(n);
      const auto b = FiniteBA::with_atoms(k);
      // Every homomorphism A -> B: each atom of B lies under one atom of A.
      std::vector<unsigned> owner(k, 0);
      while (true) {
        FiniteHom f{a, b, std::vector<Mask>(n, 0)};
        for (unsigned j = 0; j < k; ++j) f.atom_images[owner[j]] |= Mask{1} << j;
        REQUIRE(f.is_homomorphism());
        for (Mask upper = 0; upper <= a.top(); ++upper) {
          for (Mask lower = upper;; lower = (lower - 1) & upper) {
            const auto adj = adjoin(a, {lower, upper});
            for (Mask y = 0; y <= b.top(); ++y) {
              const auto r = extend_one(f, {lower, upper}, y);
              REQUIRE(r.accepted == oracles::brute_extension_exists(f, adj, y));
              if (r.accepted) {
                REQUIRE(r.map->is_homomorphism());
                REQUIRE(r.map->image(adj.x) == y);
                REQUIRE(r.injective == r.map->is_embedding());
                ++accepted;
              } else {
                const auto [lo, hi] = *r.witness;
                REQUIRE((lo & ~lower) == 0);
                REQUIRE((upper & ~hi) == 0);
                REQUIRE_FALSE(((f.image(lo) & ~y) == 0 && (y & ~f.image(hi)) == 0));
              }
              ++total;
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
  CHECK(accepted > 0);
  CHECK(accepted < total);
}

TEST_CASE("find_extension_value") {
  const auto trivial = embed_into_atomless(FiniteBA::with_atoms(1));
  CHECK(find_extension_value(trivial, {0, 1}) == t("v0"));
  CHECK(find_extension_value(trivial, {1, 1}).is_one());

  // 4-element algebra, then split atom 0.
  const auto f = embed_into_atomless(FiniteBA::with_atoms(2));
  const XBounds x{0, 0b01};
  const auto y = find_extension_value(f, x);
  const auto r = extend_one(f, x, y);
  REQUIRE(r.accepted);
  REQUIRE(r.injective);
  CHECK(r.adjunction.extended.atoms == 3);
  CHECK(oracles::brute_is_embedding(*r.map));
  for (unsigned i = 0; i < 2; ++i) CHECK(r.map->image(r.adjunction.old_atoms[i]) == f.atom_images[i]);

  // Ten seeded adjunctions.
  std::mt19937_64 rng(20);
  BAEmbedding cur = embed_into_atomless(FiniteBA::with_atoms(1));
  for (int stage = 0; stage < 10; ++stage) {
    // Split between one and (8 - atoms) atoms; the rest lie inside or outside x.
    const unsigned n = cur.domain.atoms;
    Mask split = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (rng() % 2 && n + std::popcount(split) < 8) split |= Mask{1} << i;
    }
    if (split == 0 && n < 8) split = Mask{1} << (rng() % n);
    const Mask lower = rng() & cur.domain.top() & ~split;
    const Mask upper = lower | split;
    const auto v = find_extension_value(cur, {lower, upper});
    const auto step = extend_one(cur, {lower, upper}, v);
    REQUIRE(step.accepted);
    REQUIRE(step.injective);
    REQUIRE(oracles::brute_is_embedding(*step.map));
    for (unsigned i = 0; i < cur.domain.atoms; ++i) {
      REQUIRE(step.map->image(step.adjunction.old_atoms[i]) == cur.atom_images[i]);
    }
    cur = *step.map;
  }
  CHECK(cur.domain.atoms > 1);
}

TEST_CASE("ideal_below") {
  const auto f = embed_into_atomless(FiniteBA::with_atoms(3));
  auto scan = [&](const BAElem& b) {
    std::vector<Mask> members;
    for (Mask a = 0; a <= f.domain.top(); ++a) {
      if (less(f.image(a), b)) members.push_back(a);
    }
    return members;
  };
  auto maximal = [](const std::vector<Mask>& members) {
    std::vector<Mask> out;
    for (Mask a : members) {
      bool top = true;
      for (Mask c : members) top = top && !(c != a && (a & ~c) == 0);
      if (top) out.push_back(a);
    }
    return out.empty() ? std::vector<Mask>{0} : out;
  };
  const auto one = ideal_below(f, BAElem::one());
  CHECK_FALSE(one.principal);
  CHECK(one.generators == std::vector<Mask>{0b011, 0b101, 0b110});
  CHECK(one.generators == maximal(scan(BAElem::one())));
  const auto at = ideal_below(f, f.image(0b011));
  CHECK(at.generators == std::vector<Mask>{0b001, 0b010});
  const auto zero = ideal_below(f, BAElem::zero());
  CHECK(zero.principal);
  CHECK(zero.generators == std::vector<Mask>{0});
  CHECK(ideal_below(f, f.image(0b001)).generators == std::vector<Mask>{0});
  for (const auto& b : all_elements(3)) {
    const auto r = ideal_below(f, b);
    REQUIRE(r.generators == maximal(scan(b)));
    REQUIRE(r.principal == (r.generators.size() == 1));
  }
  CHECK(ideal_below(f, t("v0 | v2")).generators == std::vector<Mask>{0b011});
}

TEST_CASE("embed_into_atomless examples") {
  const auto two = embed_into_atomless(FiniteBA::with_atoms(1));
  CHECK(two.image(0).is_zero());
  CHECK(two.image(1).is_one());
  const auto four = embed_into_atomless(FiniteBA::with_atoms(2));
  CHECK(four.atom_images == std::vector<BAElem>{t("v0"), t("~v0")});
  const auto eight = embed_into_atomless(FiniteBA::with_atoms(3));
  CHECK(eight.atom_images == std::vector<BAElem>{t("v0 & v1"), t("v0 & ~v1"), t("~v0")});
  for (unsigned n = 1; n <= 8; ++n) CHECK(oracles::brute_is_embedding(embed_into_atomless(FiniteBA::with_atoms(n))));
  CHECK(code_of([] { FiniteBA::with_atoms(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("chain embeddings") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    const unsigned base = 1 + static_cast<unsigned>(rng() % 3);
    BAEmbedding f = embed_into_atomless(FiniteBA::with_atoms(base));
    const unsigned stages = 1 + static_cast<unsigned>(rng() % 6);
    for (unsigned s = 0; s < stages; ++s) {
      const unsigned n = f.domain.atoms;
      if (n >= 16) break;
      const unsigned target = n + 1 + static_cast<unsigned>(rng() % std::min(16 - n, 4u));
      std::vector<unsigned> parent(n);
      for (unsigned i = 0; i < n; ++i) parent[i] = i;
      for (unsigned j = n; j < target; ++j) parent.push_back(static_cast<unsigned>(rng() % n));
      std::shuffle(parent.begin(), parent.end(), rng);
      const auto g = extend_to_refinement(f, parent);
      REQUIRE(g.is_embedding());
      if (g.domain.atoms <= 8) REQUIRE(oracles::brute_is_embedding(g));
      for (unsigned i = 0; i < n; ++i) {
        Mask children = 0;
        for (unsigned j = 0; j < parent.size(); ++j) {
          if (parent[j] == i) children |= Mask{1} << j;
        }
        REQUIRE(g.image(children) == f.atom_images[i]);
      }
      f = g;
    }
  }
}

TEST_CASE("masks") {
  CHECK(format_mask(0b101) == "{0,2}");
  CHECK(parse_mask(" { 0 , 2 } ") == 0b101);
  CHECK(parse_mask("{}") == 0);
  CHECK(code_of([] { parse_mask("{0,"); }) == ErrorCode::ParseError);
}
