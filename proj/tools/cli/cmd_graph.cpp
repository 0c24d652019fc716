#include <memory>

#include "common.hpp"
#include "graphs_oracle.hpp"
#include "satlab/graphs/bit.hpp"
#include "satlab/graphs/colouring.hpp"
#include "satlab/graphs/redirect.hpp"
#include "satlab/graphs/scan.hpp"

namespace satlab::cli {
namespace {

using namespace satlab::graphs;

constexpr std::size_t kBruteColLimit = 7;

struct Source {
  std::string file;
  std::optional<std::size_t> bit;
};

void add_source(CLI::App* c, Source& s) {
  c->add_option("graph", s.file, "edge-list file: `n` then one `u v` per line");
  c->add_option("--bit", s.bit, "use the BIT graph on 0..N-1 instead");
}

std::vector<std::string> nat_strings(const std::vector<Natural>& v) {
  std::vector<std::string> out;
  for (const auto& n : v) out.push_back(n.to_string());
  return out;
}

json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const auto& [u, v] : es) out.push_back({u, v});
  return out;
}

bool is_down_orientation(const FiniteGraph& g, const ColOrdering& ord, const FiniteDigraph& d) {
  if (!(d.underlying() == g)) return false;
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < ord.order.size(); ++i) pos[ord.order[i]] = i;
  for (const auto& [u, v] : d.arcs())
    if (pos[u] < pos[v]) return false;
  return true;
}

}  // namespace

void add_graph_commands(CLI::App& app, Handler& chosen) {
  auto* graph = app.add_subcommand("graph", "BIT graph, colouring number, orientations");
  graph->require_subcommand(1);

  {
    struct Args { std::string a, b; bool fast = false; };
    auto a = std::make_shared<Args>();
    auto* c = graph->add_subcommand("witness", "vertex adjacent to all of A and none of B");
    c->add_option("--a", a->a, "naturals separated by ','");
    c->add_option("--b", a->b, "naturals separated by ','");
    c->add_flag("--fast", a->fast, "closed-form witness instead of the least one");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto sa = parse_naturals(a->a);
        const auto sb = parse_naturals(a->b);
        const auto w = a->fast ? fast_witness(sa, sb) : saturation_witness(sa, sb);
        Verifier v;
        v.check("is a witness", is_witness(sa, sb, w));
        Output o;
        o.payload = {{"a", nat_strings(sa)}, {"b", nat_strings(sb)}, {"witness", w.to_string()},
                     {"least", !a->fast}};
        o.verification = v.to_json();
        o.text = w.to_string() + "\n";
        return o;
      };
    });
  }

  {
    struct Args { Source src; std::size_t s = 4, t = 4; };
    auto a = std::make_shared<Args>();
    auto* c = graph->add_subcommand("sat", "check the (s,t) extension property");
    add_source(c, a->src);
    c->add_option("--s", a->s, "|A| < s")->capture_default_str();
    c->add_option("--t", a->t, "|B| < t")->capture_default_str();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto g = load_graph(a->src.file, a->src.bit);
        const auto r = check_saturation(g, a->s, a->t);
        Verifier v;
        Output o;
        o.payload = {{"n", g.size()}, {"s", a->s}, {"t", a->t}, {"saturated", r.saturated},
                     {"pairs_checked", r.pairs_checked}, {"counterexample", nullptr}};
        o.text = r.saturated ? "true\n" : "false\n";
        if (r.counterexample) {
          const auto& [ca, cb] = *r.counterexample;
          bool none = true;
          for (Vertex x = 0; x < g.size(); ++x) {
            bool ok = true;
            for (auto y : ca) ok = ok && x != y && g.has_edge(x, y);
            for (auto y : cb) ok = ok && x != y && !g.has_edge(x, y);
            none = none && !ok;
          }
          v.check("counterexample has no witness", none);
          o.payload["counterexample"] = {{"a", ca}, {"b", cb}};
          o.text += "counterexample: A=" + format_vertices(ca) + " B=" + format_vertices(cb) + "\n";
        } else {
          v.check("saturated without counterexample", r.saturated);
        }
        o.verification = v.to_json();
        return o;
      };
    });
  }

  {
    auto src = std::make_shared<Source>();
    auto* c = graph->add_subcommand("col", "colouring number by peeling");
    add_source(c, *src);
    c->callback([src, &chosen] {
      chosen = [src] {
        const auto g = load_graph(src->file, src->bit);
        const auto r = colouring_number(g);
        Verifier v;
        v.check("ordering is valid", is_valid_ordering(g, r));
        if (g.size() > 0) v.check("bound - 1 is not achieved by it", !is_valid_ordering(g, {r.order, r.bound - 1}));
        if (g.size() <= kBruteColLimit) v.check("equals brute-force minimum", oracles::brute_colouring_number(g) == r.bound);
        Output o;
        o.payload = {{"n", g.size()}, {"col", r.bound}, {"order", r.order}};
        o.verification = v.to_json();
        o.text = std::to_string(r.bound) + "\norder: " + format_vertices(r.order) + "\n";
        return o;
      };
    });
  }

  {
    struct Args { Source src; std::string order; };
    auto a = std::make_shared<Args>();
    auto* c = graph->add_subcommand("orient", "orient every edge towards the earlier vertex");
    add_source(c, a->src);
    c->add_option("--order", a->order, "vertex ordering (default: the peeling order)");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto g = load_graph(a->src.file, a->src.bit);
        ColOrdering ord;
        if (a->order.empty()) {
          ord = colouring_number(g);
        } else {
          ord.order = parse_vertices(a->order);
          const auto bd = back_degrees(g, ord.order);
          for (auto x : bd) ord.bound = std::max(ord.bound, x + 1);
        }
        const auto d = orient_down(g, ord);
        Verifier v;
        v.check("acyclic", is_acyclic(d) && oracles::dfs_acyclic(d));
        v.check("arcs point to earlier vertices", is_down_orientation(g, ord, d));
        std::size_t maxout = 0;
        for (Vertex x = 0; x < d.size(); ++x) maxout = std::max(maxout, d.out(x).size());
        v.check("out-degree < bound", g.size() == 0 || maxout < ord.bound);
        Output o;
        o.payload = {{"n", g.size()}, {"order", ord.order}, {"bound", ord.bound}, {"max_out_degree", maxout},
                     {"arcs", edges_json(d.arcs())}};
        o.verification = v.to_json();
        o.text = format_digraph(d);
        return o;
      };
    });
  }

  {
    struct Args { Source src; std::vector<std::string> targets; bool alt = false; };
    auto a = std::make_shared<Args>();
    auto* c = graph->add_subcommand("redirect", "redirect arcs so that out(x_i) = C_i");
    add_source(c, a->src);
    c->add_option("--target", a->targets, "target set C_i as vertices separated by ','; '-' is empty")->required();
    c->add_flag("--alt-cond3", a->alt, "alternative reading of condition 3");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto g = load_graph(a->src.file, a->src.bit);
        std::vector<std::vector<Vertex>> targets;
        for (const auto& t : a->targets) targets.push_back(parse_vertices(t));
        const auto ord = colouring_number(g);
        const auto r = redirect(g, ord, targets, RedirectOptions{a->alt});
        Verifier v;
        const auto failures = check_redirect(g, ord, targets, r);
        for (const auto& f : failures) v.check(f, false);
        v.check("postconditions", true);
        v.check("acyclic (dfs)", oracles::dfs_acyclic(r.digraph));
        Output o;
        json log = json::array();
        std::string text;
        for (std::size_t i = 0; i < r.assignment.size(); ++i)
          text += "x" + std::to_string(i) + ": " + std::to_string(r.assignment[i]) + "\n";
        for (const auto& e : r.log) {
          log.push_back({{"step", e.step}, {"vertex", e.vertex}, {"reversed", edges_json(e.reversed)}});
          text += "reverse " + std::to_string(e.step) + ":";
          for (const auto& [x, y] : e.reversed) text += " " + std::to_string(x) + ">" + std::to_string(y);
          text += "\n";
        }
        for (const auto& cv : r.invariant_violations) text += "invariant violation: " + cv + "\n";
        text += format_digraph(r.digraph);
        o.payload = {{"n", g.size()}, {"alt_cond3", a->alt}, {"assignment", r.assignment}, {"log", log},
                     {"invariant_violations", r.invariant_violations}, {"arcs", edges_json(r.digraph.arcs())}};
        o.verification = v.to_json();
        o.text = text;
        if (r.failed_target) {
          o.failure = std::string(error_code_name(ErrorCode::NoAdmissibleVertex));
          o.message = "no admissible vertex for target " + std::to_string(*r.failed_target);
          o.payload["failed_target"] = *r.failed_target;
        }
        return o;
      };
    });
  }

  {
    struct Args { std::size_t n = 4; std::uint64_t seed = 1; std::size_t samples = 64; };
    auto a = std::make_shared<Args>();
    auto* c = graph->add_subcommand("scan", "colouring numbers of graphs and their complements");
    c->add_option("n", a->n, "number of vertices (at most 8)")->required();
    c->add_option("--seed", a->seed)->capture_default_str();
    c->add_option("--samples", a->samples, "random graphs for n = 7, 8")->capture_default_str();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto rows = complement_scan(a->n, a->seed, a->samples);
        Verifier v;
        bool ok = true;
        json jr = json::array();
        std::string text = "id col col_complement code\n";
        for (const auto& r : rows) {
          const auto g = graph_from_code(a->n, r.code);
          ok = ok && colouring_number(g).bound == r.col && colouring_number(g.complement()).bound == r.col_complement;
          jr.push_back({{"id", r.id}, {"col", r.col}, {"col_complement", r.col_complement}, {"code", r.code}});
          text += std::to_string(r.id) + " " + std::to_string(r.col) + " " + std::to_string(r.col_complement) + " " +
                  std::to_string(r.code) + "\n";
        }
        v.check("rows recomputed", ok);
        Output o;
        o.payload = {{"n", a->n}, {"exhaustive", a->n <= kExhaustiveScanLimit}, {"rows", jr}};
        o.verification = v.to_json();
        o.text = text;
        return o;
      };
    });
  }
}

}  // namespace satlab::cli
