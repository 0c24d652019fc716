#include <algorithm>
#include <memory>

#include "common.hpp"
#include "satlab/hf/collapse.hpp"
#include "satlab/hf/hfset.hpp"

namespace satlab::cli {
namespace {

using namespace satlab::hf;

graphs::FiniteDigraph load_digraph(const std::string& path) { return graphs::parse_digraph(read_file(path)); }

}  // namespace

void add_hf_commands(CLI::App& app, Handler& chosen) {
  auto* hf = app.add_subcommand("hf", "hereditarily finite sets");
  hf->require_subcommand(1);

  {
    auto text = std::make_shared<std::string>();
    auto* c = hf->add_subcommand("encode", "Ackermann code of a brace expression");
    c->add_option("set", *text, "e.g. {{},{{}}}")->required();
    c->callback([text, &chosen] {
      chosen = [text] {
        const auto x = parse_hf(*text);
        const auto code = encode(x);
        Verifier v;
        v.check("decode(code) = set", decode(code) == x);
        Output o;
        o.payload = {{"set", format_hf(x)}, {"code", code.to_string()}};
        o.verification = v.to_json();
        o.text = code.to_string() + "\n";
        return o;
      };
    });
  }

  {
    auto text = std::make_shared<std::string>();
    auto* c = hf->add_subcommand("decode", "brace expression of a code");
    c->add_option("code", *text, "decimal natural")->required();
    c->callback([text, &chosen] {
      chosen = [text] {
        const auto code = Natural::parse(*text);
        const auto x = decode(code);
        const auto s = format_hf(x);
        Verifier v;
        v.check("encode(parse(output)) = code", encode(parse_hf(s)) == code);
        Output o;
        o.payload = {{"code", code.to_string()}, {"set", s}, {"rank", x.rank()}};
        o.verification = v.to_json();
        o.text = s + "\n";
        return o;
      };
    });
  }

  {
    auto path = std::make_shared<std::string>();
    auto* c = hf->add_subcommand("collapse", "Mostowski collapse of an acyclic digraph");
    c->add_option("digraph", *path, "digraph file: `n` then one `u > v` per line")->required();
    c->callback([path, &chosen] {
      chosen = [path] {
        const auto d = load_digraph(*path);
        const auto m = mostowski_collapse(d);
        Verifier v;
        bool rec = true;
        for (graphs::Vertex x = 0; x < d.size(); ++x) {
          std::vector<HFSet> kids;
          for (auto y : d.out(x)) kids.push_back(m.sets[y]);
          rec = rec && HFSet::of(kids) == m.sets[x];
        }
        v.check("collapse(v) = {collapse(w) : v -> w}", rec);
        json sets = json::array();
        std::string text;
        for (graphs::Vertex x = 0; x < d.size(); ++x) {
          const auto s = format_hf(m.sets[x]);
          sets.push_back(s);
          text += std::to_string(x) + ": " + s + "\n";
        }
        text += std::string("injective: ") + (m.injective ? "true" : "false") + "\n";
        Output o;
        o.payload = {{"n", d.size()}, {"sets", sets}, {"injective", m.injective}};
        o.verification = v.to_json();
        o.text = text;
        return o;
      };
    });
  }

  {
    struct Args { std::string f1, f2; };
    auto a = std::make_shared<Args>();
    auto* c = hf->add_subcommand("iso", "isomorphism of extensional acyclic digraphs");
    c->add_option("digraph1", a->f1)->required();
    c->add_option("digraph2", a->f2)->required();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto d1 = load_digraph(a->f1);
        const auto d2 = load_digraph(a->f2);
        const auto r = iso_extensional(d1, d2);
        Verifier v;
        std::string text = r.isomorphic ? "true\n" : "false\n";
        if (r.isomorphic) {
          bool ok = d1.size() == d2.size() && r.mapping.size() == d1.size() && d1.arc_count() == d2.arc_count();
          for (const auto& [x, y] : d1.arcs()) ok = ok && d2.has_arc(r.mapping[x], r.mapping[y]);
          v.check("mapping preserves arcs", ok);
          for (std::size_t x = 0; x < r.mapping.size(); ++x)
            text += std::to_string(x) + " -> " + std::to_string(r.mapping[x]) + "\n";
        } else {
          auto c1 = mostowski_collapse(d1).sets;
          auto c2 = mostowski_collapse(d2).sets;
          std::sort(c1.begin(), c1.end());
          std::sort(c2.begin(), c2.end());
          v.check("collapse images differ", c1 != c2);
        }
        Output o;
        o.payload = {{"isomorphic", r.isomorphic}, {"mapping", r.mapping}};
        o.verification = v.to_json();
        o.text = text;
        return o;
      };
    });
  }
}

}  // namespace satlab::cli
