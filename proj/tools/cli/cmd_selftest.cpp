#include <random>

#include "ba_oracle.hpp"
#include "common.hpp"
#include "graphs_oracle.hpp"
#include "hf_oracle.hpp"
#include "orders_oracle.hpp"
#include "satlab/ba/algebra.hpp"
#include "satlab/backforth/backforth.hpp"
#include "satlab/graphs/bit.hpp"
#include "satlab/graphs/colouring.hpp"
#include "satlab/graphs/scan.hpp"
#include "satlab/hf/collapse.hpp"
#include "satlab/hf/hfset.hpp"
#include "satlab/orders/embedding.hpp"
#include "satlab/orders/grammar.hpp"

namespace satlab::cli {
namespace {

struct Suite {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

void orders_suite(Suite& s) {
  using namespace satlab::orders;
  for (const char* text : {"fin:4", "rev(sum(fin:2,fin:3))", "prod(fin:3,rev(fin:2))", "lexpow(fin:3,3,1)"}) {
    const auto d = parse_desc(text);
    const auto ranked = oracles::ranked_elements(d);
    s.expect(elements(d) == ranked, std::string("elements of ") + text);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      s.expect(parse_term(d, format_term(ranked[i])) == ranked[i], "term round trip");
      for (std::size_t j = 0; j < ranked.size(); ++j)
        s.expect((cmp(d, ranked[i], ranked[j]) < 0) == (i < j), std::string("cmp in ") + text);
    }
  }
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (std::uint64_t base = 2; base <= 3; ++base)
      s.expect(ldim(OrderDesc::finite(n), OrderDesc::finite(base)) == oracles::brute_ldim(n, base),
               "ldim of fin:" + std::to_string(n));
}

void graphs_suite(Suite& s) {
  using namespace satlab::graphs;
  for (const auto& [key, w] : oracles::brute_witness_table(8, 2, 2)) {
    std::vector<Natural> a, b;
    for (std::size_t i = 0; i < 8; ++i) {
      if (key.first >> i & 1u) a.emplace_back(i);
      if (key.second >> i & 1u) b.emplace_back(i);
    }
    s.expect(saturation_witness(a, b) == Natural(w), "least witness");
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto code : graph_catalog(n)) {
      const auto g = graph_from_code(n, code);
      const auto c = colouring_number(g);
      s.expect(c.bound == oracles::brute_colouring_number(g), "colouring number");
      s.expect(oracles::dfs_acyclic(orient_down(g, c)), "orientation acyclic");
    }
  }
}

void hf_suite(Suite& s) {
  using namespace satlab::hf;
  for (std::uint64_t c = 0; c < (1u << 12); ++c) {
    const auto text = oracles::brace_text(c);
    s.expect(encode(parse_hf(text)) == Natural(c) && oracles::brace_code(format_hf(decode(c))) == c, "code " + std::to_string(c));
  }
  for (const auto& d : oracles::extensional_digraphs(4)) {
    const auto m = mostowski_collapse(d);
    const auto ref = oracles::naive_collapse_codes(d);
    bool same = m.injective;
    for (graphs::Vertex v = 0; v < d.size(); ++v) same = same && m.sets[v].code() == ref[v];
    s.expect(same, "collapse of an extensional digraph");
  }
}

void backforth_suite(Suite& s) {
  using namespace satlab::backforth;
  const auto l = make_dlo_presentation(1);
  const auto r = make_dlo_presentation(2);
  const auto run = bf_run(l, r, 40);
  s.expect(!run.failure && run.map.size() == 40 && is_partial_iso(l, r, run.map), "dlo run");
  const auto bl = make_bit_presentation(1);
  const auto br = make_bit_presentation(2);
  const auto brun = bf_run(bl, br, 20);
  s.expect(!brun.failure && brun.map.size() == 20 && is_partial_iso(bl, br, brun.map), "bit run");
  // Homogeneous finite graphs: complete, edgeless and the 5-cycle.
  std::vector<graphs::FiniteGraph> homogeneous = {graphs::FiniteGraph::cycle(5)};
  for (std::size_t n = 1; n <= 6; ++n) {
    homogeneous.push_back(graphs::FiniteGraph::complete(n));
    homogeneous.push_back(graphs::FiniteGraph(n));
  }
  for (std::size_t i = 0; i < homogeneous.size(); ++i) {
    const auto& g = homogeneous[i];
    const auto gl = make_graph_presentation(g, i);
    const auto gr = make_graph_presentation(g, i + 100);
    const auto c = bf_run(gl, gr, 2 * g.size());
    s.expect(!c.failure && c.map.size() == g.size() && is_partial_iso(gl, gr, c.map), "homogeneous graph run");
  }
}

void ba_suite(Suite& s) {
  using namespace satlab::ba;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto e = oracles::random_expr(rng, 4, 4);
    const auto x = parse_term(e.text);
    s.expect(oracles::table_of(x, 4) == e.table, "expression " + e.text);
    s.expect(parse_term(format_term(x)) == x, "term round trip");
  }
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto a = FiniteBA::with_atoms(n);
      const auto b = FiniteBA::with_atoms(k);
      std::vector<unsigned> owner(k, 0);
      while (true) {
        FiniteHom f{a, b, std::vector<Mask>(n, 0)};
        for (unsigned j = 0; j < k; ++j) f.atom_images[owner[j]] |= Mask{1} << j;
        for (Mask upper = 0; upper <= a.top(); ++upper) {
          for (Mask lower = upper;; lower = (lower - 1) & upper) {
            const auto adj = adjoin(a, {lower, upper});
            for (Mask y = 0; y <= b.top(); ++y)
              s.expect(extend_one(f, {lower, upper}, y).accepted == oracles::brute_extension_exists(f, adj, y),
                       "extend_one");
            if (lower == 0) break;
          }
        }
        unsigned j = 0;
        while (j < k && ++owner[j] == n) owner[j++] = 0;
        if (j == k) break;
      }
    }
  }
  for (unsigned n = 1; n <= 8; ++n) s.expect(oracles::brute_is_embedding(embed_into_atomless(FiniteBA::with_atoms(n))), "embed");
}

}  // namespace

void add_selftest_command(CLI::App& app, Handler& chosen) {
  auto* c = app.add_subcommand("selftest", "run the oracle suites of every module");
  c->callback([&chosen] {
    chosen = [] {
      std::vector<std::pair<std::string, void (*)(Suite&)>> suites = {
          {"orders", orders_suite}, {"graphs", graphs_suite}, {"hf", hf_suite},
          {"backforth", backforth_suite}, {"ba", ba_suite}};
      Output o;
      json rows = json::array();
      std::size_t failed = 0;
      for (const auto& [name, run] : suites) {
        Suite s;
        s.name = name;
        try {
          run(s);
        } catch (const std::exception& e) {
          s.expect(false, std::string("exception: ") + e.what());
        }
        rows.push_back({{"name", name}, {"checks", s.checks}, {"failures", s.failures}});
        o.text += name + ": " + (s.failures == 0 ? "ok" : "FAILED") + " (" + std::to_string(s.checks) + " checks)";
        if (s.failures > 0) o.text += " first failure: " + s.first_failure;
        o.text += "\n";
        if (s.failures > 0) ++failed;
      }
      o.payload = {{"suites", rows}};
      o.verification = {{"passed", failed == 0}, {"checks", json::array()}};
      if (failed > 0) {
        o.failure = "SelftestFailure";
        o.message = std::to_string(failed) + " suite(s) failed";
      }
      return o;
    };
  });
}

}  // namespace satlab::cli
