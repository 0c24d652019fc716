#include <algorithm>
#include <memory>

#include "common.hpp"
#include "satlab/orders/cuts.hpp"
#include "satlab/orders/embedding.hpp"
#include "satlab/orders/grammar.hpp"

namespace satlab::cli {
namespace {

using namespace satlab::orders;

const char* ordering_name(std::strong_ordering c) { return c < 0 ? "LT" : (c > 0 ? "GT" : "EQ"); }

std::vector<std::string> term_strings(const std::vector<OrderTerm>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(format_term(t));
  return out;
}

json pairs_json(const OrderEmbedding& e) {
  json out = json::array();
  for (const auto& [x, y] : e.pairs) out.push_back({format_term(x), format_term(y)});
  return out;
}

std::string pairs_text(const OrderEmbedding& e) {
  std::string out;
  for (const auto& [x, y] : e.pairs) out += format_term(x) + " -> " + format_term(y) + "\n";
  return out;
}

bool all_between(const OrderDesc& d, const std::vector<OrderTerm>& lower, const OrderTerm& z,
                 const std::vector<OrderTerm>& upper) {
  for (const auto& a : lower)
    if (cmp(d, a, z) >= 0) return false;
  for (const auto& b : upper)
    if (cmp(d, z, b) >= 0) return false;
  return true;
}

// Embedding of the set `s` into L^k with `ambient` as domain, k = ldim of a
// chain of |s| + 1. The least point of L^k is left unused so that B always
// finds a selector below min A.
OrderEmbedding embed_set(const OrderDesc& ambient, std::vector<OrderTerm> s, const OrderDesc& l, std::uint64_t& k) {
  std::sort(s.begin(), s.end(), OrderLess{&ambient});
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const auto chain = OrderDesc::finite(s.size() + 1);
  k = s.empty() ? 0 : ldim(chain, l);
  const auto power = finite_power(l, k);
  OrderEmbedding out{ambient, power, {}};
  if (s.empty()) return out;
  const auto e = embed_search(chain, power, std::uint64_t{1} << 20);
  if (!e) throw Error(ErrorCode::BoundTooSmall, "no embedding of the chain into the power");
  for (std::size_t i = 0; i < s.size(); ++i) out.pairs.emplace_back(s[i], e->pairs[i + 1].second);
  return out;
}

}  // namespace

void add_order_commands(CLI::App& app, Handler& chosen) {
  auto* order = app.add_subcommand("order", "linear orders: descriptors and terms");
  order->require_subcommand(1);

  {
    struct Args { std::string desc, x, y; };
    auto a = std::make_shared<Args>();
    auto* c = order->add_subcommand("cmp", "compare two terms");
    c->add_option("desc", a->desc, "descriptor, e.g. lexpow(fin:3,w^2,1)")->required();
    c->add_option("x", a->x)->required();
    c->add_option("y", a->y)->required();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto d = parse_desc(a->desc);
        const auto x = parse_term(d, a->x);
        const auto y = parse_term(d, a->y);
        const auto r = cmp(d, x, y);
        Verifier v;
        v.check("antisymmetric", cmp(d, y, x) == (0 <=> r));
        Output o;
        o.payload = {{"desc", format_desc(d)}, {"x", format_term(x)}, {"y", format_term(y)}, {"result", ordering_name(r)}};
        o.verification = v.to_json();
        o.text = std::string(ordering_name(r)) + "\n";
        return o;
      };
    });
  }

  {
    struct Args { std::string desc, lower, upper; };
    auto a = std::make_shared<Args>();
    auto* c = order->add_subcommand("cut", "realize a finite cut");
    c->add_option("desc", a->desc)->required();
    c->add_option("--lower", a->lower, "terms separated by ';'");
    c->add_option("--upper", a->upper, "terms separated by ';'");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto d = parse_desc(a->desc);
        Cut cut(d, parse_term_list(d, a->lower), parse_term_list(d, a->upper));
        const auto z = realize_cut(d, cut);
        Verifier v;
        v.check("valid term", is_valid(d, z));
        v.check("lower < z < upper", all_between(d, cut.lower(), z, cut.upper()));
        Output o;
        o.payload = {{"desc", format_desc(d)}, {"lower", term_strings(cut.lower())},
                     {"upper", term_strings(cut.upper())}, {"z", format_term(z)}};
        o.verification = v.to_json();
        o.text = format_term(z) + "\n";
        return o;
      };
    });
  }

  {
    struct Args { std::string x, l; };
    auto a = std::make_shared<Args>();
    auto* c = order->add_subcommand("ldim", "least k with X embedding into L^k");
    c->add_option("X", a->x, "finite descriptor")->required();
    c->add_option("L", a->l, "finite base descriptor")->required();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto x = parse_desc(a->x);
        const auto l = parse_desc(a->l);
        const auto k = ldim(x, l);
        Verifier v;
        const auto e = embed_search(x, finite_power(l, k), std::uint64_t{1} << 20);
        v.check("embeds into L^k", e && e->verify());
        if (k > 0) v.check("no embedding into L^(k-1)", !embed_search(x, finite_power(l, k - 1), std::uint64_t{1} << 20));
        Output o;
        o.payload = {{"x", format_desc(x)}, {"l", format_desc(l)}, {"k", k}};
        o.verification = v.to_json();
        o.text = std::to_string(k) + "\n";
        return o;
      };
    });
  }

  {
    struct Args { std::string ambient, a, b, base = "fin:2"; };
    auto a = std::make_shared<Args>();
    auto* c = order->add_subcommand("merge", "embed A u B into L^(a+1+b)");
    c->add_option("ambient", a->ambient)->required();
    c->add_option("--a", a->a, "terms of A separated by ';'");
    c->add_option("--b", a->b, "terms of B separated by ';'");
    c->add_option("--base", a->base, "finite base L")->capture_default_str();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto amb = parse_desc(a->ambient);
        const auto l = parse_desc(a->base);
        const auto sa = parse_term_list(amb, a->a);
        const auto sb = parse_term_list(amb, a->b);
        std::uint64_t ka = 0, kb = 0;
        const auto ia = embed_set(amb, sa, l, ka);
        const auto ib = embed_set(amb, sb, l, kb);
        const auto m = merge_union_embedding(amb, sa, sb, ia, ib);
        Verifier v;
        v.check("input embeddings verify", ia.verify() && ib.verify());
        v.check("merged embedding verifies", m.verify());
        bool covers = true;
        for (const auto& t : sa) covers = covers && m.image(t).has_value();
        for (const auto& t : sb) covers = covers && m.image(t).has_value();
        v.check("defined on A u B", covers);
        Output o;
        o.payload = {{"ambient", format_desc(amb)}, {"codomain", format_desc(m.codomain)},
                     {"dims", {{"a", ka}, {"b", kb}, {"total", ka + 1 + kb}}}, {"map", pairs_json(m)}};
        o.verification = v.to_json();
        o.text = "codomain: " + format_desc(m.codomain) + "\n" + pairs_text(m);
        return o;
      };
    });
  }

  {
    struct Args { std::string desc, a0, a1; std::uint64_t depth = 1; };
    auto a = std::make_shared<Args>();
    auto* c = order->add_subcommand("grow", "embed 2^depth into (a0, a1)");
    c->add_option("desc", a->desc)->required();
    c->add_option("a0", a->a0)->required();
    c->add_option("a1", a->a1)->required();
    c->add_option("--depth", a->depth)->capture_default_str()->check(CLI::Range(std::uint64_t{0}, kMaxGrowDepth));
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto d = parse_desc(a->desc);
        const auto a0 = parse_term(d, a->a0);
        const auto a1 = parse_term(d, a->a1);
        const auto e = grow_binary(d, a0, a1, a->depth);
        Verifier v;
        v.check("embedding verifies", e.verify());
        v.check("2^depth points", e.pairs.size() == (std::uint64_t{1} << a->depth));
        bool inside = true;
        for (const auto& [x, y] : e.pairs) inside = inside && cmp(d, a0, y) < 0 && cmp(d, y, a1) < 0;
        v.check("inside (a0, a1)", inside);
        Output o;
        o.payload = {{"desc", format_desc(d)}, {"a0", format_term(a0)}, {"a1", format_term(a1)},
                     {"depth", a->depth}, {"map", pairs_json(e)}};
        o.verification = v.to_json();
        o.text = pairs_text(e);
        return o;
      };
    });
  }

  {
    struct Args { std::string desc, b, a; bool strict = false; };
    auto a = std::make_shared<Args>();
    auto* c = order->add_subcommand("patch", "whether B fills every cut of A");
    c->add_option("desc", a->desc)->required();
    c->add_option("--b", a->b, "terms of B separated by ';'");
    c->add_option("--a", a->a, "terms of A separated by ';'");
    c->add_flag("--strict-gaps", a->strict, "skip the two endpoint gaps");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto d = parse_desc(a->desc);
        const auto sb = parse_term_list(d, a->b);
        const auto sa = parse_term_list(d, a->a);
        const auto r = patches_check(d, sb, sa, a->strict);
        Verifier v;
        json gaps = json::array();
        bool witnesses_ok = true;
        for (const auto& g : r.gaps) {
          json j = json::object();
          j["below"] = g.below ? json(format_term(*g.below)) : json(nullptr);
          j["above"] = g.above ? json(format_term(*g.above)) : json(nullptr);
          j["witness"] = g.witness ? json(format_term(*g.witness)) : json(nullptr);
          gaps.push_back(j);
          if (g.witness) {
            witnesses_ok = witnesses_ok && (!g.below || cmp(d, *g.below, *g.witness) < 0) &&
                           (!g.above || cmp(d, *g.witness, *g.above) < 0);
          }
        }
        v.check("gap witnesses lie strictly inside", witnesses_ok);
        Output o;
        o.payload = {{"desc", format_desc(d)}, {"patched", r.patched}, {"gaps", gaps}};
        o.text = r.patched ? "true\n" : "false\n";
        if (r.counterexample) {
          const auto& cut = *r.counterexample;
          bool empty = true;
          for (const auto& t : sb) empty = empty && !all_between(d, cut.lower(), t, cut.upper());
          v.check("counterexample gap holds no element of B", empty);
          o.payload["counterexample"] = {{"lower", term_strings(cut.lower())}, {"upper", term_strings(cut.upper())}};
          o.text += "counterexample: {" + format_term_list(cut.lower()) + "} | {" + format_term_list(cut.upper()) + "}\n";
        } else {
          v.check("no counterexample when patched", r.patched);
          o.payload["counterexample"] = nullptr;
        }
        o.verification = v.to_json();
        return o;
      };
    });
  }
}

}  // namespace satlab::cli
