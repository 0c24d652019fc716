#include <memory>

#include "common.hpp"
#include "satlab/backforth/backforth.hpp"

namespace satlab::cli {
namespace {

using namespace satlab::backforth;

constexpr std::uint64_t kDefaultSeed = 1;

// dlo[:seed] | bit[:seed] | file:path (graph file).
Presentation make_presentation(const std::string& spec, std::uint64_t default_seed) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto rest = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  if (kind == "file") {
    if (rest.empty()) throw Error(ErrorCode::ParseError, "expected file:<path>");
    return make_graph_presentation(graphs::parse_graph(read_file(rest)), default_seed);
  }
  std::uint64_t seed = default_seed;
  if (!rest.empty()) {
    const auto n = Natural::parse(rest).to_u64();
    if (!n) throw Error(ErrorCode::ParseError, "seed out of range: " + rest);
    seed = *n;
  }
  if (kind == "dlo") return make_dlo_presentation(seed);
  if (kind == "bit") return make_bit_presentation(seed);
  throw Error(ErrorCode::ParseError, "presentation '" + spec + "': expected dlo[:seed], bit[:seed] or file:<path>");
}

// Every element among the first k of each enumeration is mapped, where k is
// the number of completed steps on that side.
bool fair(const Presentation& p, const PartialIso& m, std::uint64_t k, bool left) {
  for (std::uint64_t i = 0; i < k; ++i) {
    const auto e = p.element_at(i);
    if (!e) return true;
    if (!(left ? m.forward(*e) : m.backward(*e))) return false;
  }
  return true;
}

}  // namespace

void add_bf_commands(CLI::App& app, Handler& chosen) {
  auto* bf = app.add_subcommand("bf", "back-and-forth");
  bf->require_subcommand(1);

  struct Args {
    std::string left = "dlo", right = "dlo";
    std::uint64_t steps = 10;
    std::uint64_t seed = kDefaultSeed;
  };
  auto a = std::make_shared<Args>();
  auto* c = bf->add_subcommand("run", "build a partial isomorphism step by step");
  c->add_option("--left", a->left, "dlo[:seed] | bit[:seed] | file:<graph>")->capture_default_str();
  c->add_option("--right", a->right, "dlo[:seed] | bit[:seed] | file:<graph>")->capture_default_str();
  c->add_option("--steps", a->steps)->capture_default_str();
  c->add_option("--seed", a->seed, "seed of the left side; the right side uses seed + 1")->capture_default_str();
  c->callback([a, &chosen] {
    chosen = [a] {
      const auto left = make_presentation(a->left, a->seed);
      const auto right = make_presentation(a->right, a->seed + 1);
      const auto r = bf_run(left, right, a->steps);
      Verifier v;
      v.check("partial isomorphism", is_partial_iso(left, right, r.map));
      v.check("forth steps fair", fair(left, r.map, (r.steps_done + 1) / 2, true));
      v.check("back steps fair", fair(right, r.map, r.steps_done / 2, false));
      json pairs = json::array();
      std::string text = "left: " + left.name + "\nright: " + right.name + "\nsteps: " +
                         std::to_string(r.steps_done) + "\nsize: " + std::to_string(r.map.size()) + "\n";
      for (const auto& [x, y] : r.map.pairs()) {
        pairs.push_back({format_element(x), format_element(y)});
        text += format_element(x) + " -> " + format_element(y) + "\n";
      }
      text += "verification: partial isomorphism, fair\n";
      Output o;
      o.payload = {{"left", left.name}, {"right", right.name}, {"steps", r.steps_done},
                   {"size", r.map.size()}, {"pairs", pairs}};
      o.verification = v.to_json();
      o.text = text;
      if (r.failure) {
        o.failure = std::string(error_code_name(*r.failure));
        o.message = r.message;
      }
      return o;
    };
  });
}

}  // namespace satlab::cli
