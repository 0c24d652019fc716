#include <memory>

#include "common.hpp"
#include "satlab/ba/algebra.hpp"

namespace satlab::cli {
namespace {

using namespace satlab::ba;

constexpr unsigned kScanAtoms = 12;

std::vector<BAElem> parse_terms(const std::string& text) {
  std::vector<BAElem> out;
  for (const auto& t : split(text, ';')) out.push_back(parse_term(t));
  return out;
}

std::vector<std::string> term_strings(const std::vector<BAElem>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(format_term(x));
  return out;
}

// Given atom images, or the standard embedding of `atoms` atoms.
BAEmbedding make_embedding(unsigned atoms, const std::string& images) {
  const auto a = FiniteBA::with_atoms(atoms);
  if (images.empty()) return embed_into_atomless(a);
  BAEmbedding f{a, parse_terms(images)};
  if (f.atom_images.size() != atoms)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(atoms) + " atom images");
  if (!f.is_homomorphism()) throw Error(ErrorCode::InvalidArgument, "atom images are not disjoint with join 1");
  return f;
}

std::string atoms_text(const std::vector<BAElem>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += "atom " + std::to_string(i) + ": " + format_term(xs[i]) + "\n";
  return out;
}

}  // namespace

void add_ba_commands(CLI::App& app, Handler& chosen) {
  auto* ba = app.add_subcommand("ba", "Boolean algebras");
  ba->require_subcommand(1);

  {
    struct Args { std::string f, g; };
    auto a = std::make_shared<Args>();
    auto* c = ba->add_subcommand("interp", "strict interpolant F < a < G");
    c->add_option("--F", a->f, "terms separated by ';'");
    c->add_option("--G", a->g, "terms separated by ';'");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto f = parse_terms(a->f);
        const auto g = parse_terms(a->g);
        const auto x = interpolate(f, g);
        Verifier v;
        bool ok = true;
        for (const auto& y : f) ok = ok && less(y, x);
        for (const auto& y : g) ok = ok && less(x, y);
        v.check("strictly between", ok);
        v.check("output parses back", parse_term(format_term(x)) == x);
        Output o;
        o.payload = {{"F", term_strings(f)}, {"G", term_strings(g)}, {"a", format_term(x)}};
        o.verification = v.to_json();
        o.text = format_term(x) + "\n";
        return o;
      };
    });
  }

  {
    struct Args { unsigned atoms = 2; std::string images, lower, upper, y; };
    auto a = std::make_shared<Args>();
    auto* c = ba->add_subcommand("extend", "extend an embedding along x -> y");
    c->add_option("--atoms", a->atoms)->capture_default_str();
    c->add_option("--images", a->images, "atom images separated by ';' (default: standard embedding)");
    c->add_option("--lower", a->lower, "lower bound of x as an atom set, e.g. {0}")->required();
    c->add_option("--upper", a->upper, "upper bound of x as an atom set")->required();
    c->add_option("--y", a->y, "image of x (default: a value that keeps an embedding)");
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto f = make_embedding(a->atoms, a->images);
        const XBounds xb{parse_mask(a->lower), parse_mask(a->upper)};
        const auto y = a->y.empty() ? find_extension_value(f, xb) : parse_term(a->y);
        const auto r = extend_one(f, xb, y);
        Verifier v;
        const bool bounds = leq(f.image(xb.lower), y) && leq(y, f.image(xb.upper));
        v.check("accepted iff f(lower) <= y <= f(upper)", r.accepted == bounds);
        Output o;
        o.payload = {{"atoms", a->atoms}, {"images", term_strings(f.atom_images)}, {"lower", format_mask(xb.lower)},
                     {"upper", format_mask(xb.upper)}, {"y", format_term(y)}, {"accepted", r.accepted}};
        std::string text = std::string(r.accepted ? "accepted" : "rejected") + "\n";
        if (r.accepted) {
          v.check("extension is a homomorphism", r.map && r.map->is_homomorphism());
          v.check("x -> y", r.map->image(r.adjunction.x) == y);
          bool keeps = true;
          for (unsigned i = 0; i < a->atoms; ++i) keeps = keeps && r.map->image(r.adjunction.old_atoms[i]) == f.atom_images[i];
          v.check("restricts to f", keeps);
          v.check("injective flag", r.injective == r.map->is_embedding());
          o.payload["injective"] = r.injective;
          o.payload["extended_images"] = term_strings(r.map->atom_images);
          o.payload["witness"] = nullptr;
          text += std::string("injective: ") + (r.injective ? "true" : "false") + "\n" + atoms_text(r.map->atom_images);
        } else {
          const auto [lo, hi] = *r.witness;
          v.check("witness fails", !(leq(f.image(lo), y) && leq(y, f.image(hi))));
          o.payload["witness"] = {format_mask(lo), format_mask(hi)};
          text += "witness: " + format_mask(lo) + " " + format_mask(hi) + "\n";
        }
        o.verification = v.to_json();
        o.text = text;
        return o;
      };
    });
  }

  {
    struct Args { unsigned atoms = 2; std::string images, b; };
    auto a = std::make_shared<Args>();
    auto* c = ba->add_subcommand("ideal", "the elements a with f(a) < b");
    c->add_option("--atoms", a->atoms)->capture_default_str();
    c->add_option("--images", a->images, "atom images separated by ';' (default: standard embedding)");
    c->add_option("--b", a->b, "term")->required();
    c->callback([a, &chosen] {
      chosen = [a] {
        const auto f = make_embedding(a->atoms, a->images);
        const auto b = parse_term(a->b);
        const auto r = ideal_below(f, b);
        Verifier v;
        bool gens = true;
        for (auto m : r.generators) gens = gens && (m == 0 || less(f.image(m), b));
        v.check("generators lie in the set", gens);
        if (a->atoms <= kScanAtoms) {
          bool covered = true;
          const auto top = f.domain.top();
          for (Mask m = 0; m <= top; ++m) {
            if (!less(f.image(m), b)) continue;
            bool below = false;
            for (auto g : r.generators) below = below || (m & ~g) == 0;
            covered = covered && below;
          }
          v.check("every element lies below a generator (scan)", covered);
        }
        json gj = json::array();
        std::string text = std::string("principal: ") + (r.principal ? "true" : "false") + "\n";
        for (auto m : r.generators) {
          gj.push_back(format_mask(m));
          text += "generator: " + format_mask(m) + "\n";
        }
        Output o;
        o.payload = {{"atoms", a->atoms}, {"images", term_strings(f.atom_images)}, {"b", format_term(b)},
                     {"principal", r.principal}, {"generators", gj}};
        o.verification = v.to_json();
        o.text = text;
        return o;
      };
    });
  }

  {
    auto atoms = std::make_shared<unsigned>(2);
    auto* c = ba->add_subcommand("embed", "embed a finite algebra into the atomless one");
    c->add_option("--atoms", *atoms)->capture_default_str();
    c->callback([atoms, &chosen] {
      chosen = [atoms] {
        const auto f = embed_into_atomless(FiniteBA::with_atoms(*atoms));
        Verifier v;
        v.check("embedding", f.is_embedding());
        Output o;
        o.payload = {{"atoms", *atoms}, {"images", term_strings(f.atom_images)}};
        o.verification = v.to_json();
        o.text = atoms_text(f.atom_images);
        return o;
      };
    });
  }
}

}  // namespace satlab::cli
