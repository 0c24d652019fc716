#include "satlab/ba/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "satlab/error.hpp"

namespace satlab::ba {

FiniteBA FiniteBA::with_atoms(unsigned n) {
  if (n < 1 || n > kMaxAtoms) {
    throw Error(ErrorCode::InvalidArgument, "a finite algebra needs between 1 and " + std::to_string(kMaxAtoms) +
                                                " atoms, got " + std::to_string(n));
  }
  return FiniteBA{n};
}

BAElem BAEmbedding::image(Mask m) const {
  if (!domain.contains(m)) throw Error(ErrorCode::InvalidArgument, format_mask(m) + " is not in the domain");
  BAElem out;
  for (unsigned i = 0; i < domain.atoms; ++i) {
    if ((m >> i) & 1u) out = out | atom_images[i];
  }
  return out;
}

bool BAEmbedding::is_homomorphism() const {
  if (atom_images.size() != domain.atoms) return false;
  BAElem all;
  for (std::size_t i = 0; i < atom_images.size(); ++i) {
    for (std::size_t j = i + 1; j < atom_images.size(); ++j) {
      if (!disjoint(atom_images[i], atom_images[j])) return false;
    }
    all = all | atom_images[i];
  }
  return all.is_one();
}

bool BAEmbedding::is_embedding() const {
  return is_homomorphism() &&
         std::none_of(atom_images.begin(), atom_images.end(), [](const BAElem& e) { return e.is_zero(); });
}

Mask FiniteHom::image(Mask m) const {
  if (!domain.contains(m)) throw Error(ErrorCode::InvalidArgument, format_mask(m) + " is not in the domain");
  Mask out = 0;
  for (unsigned i = 0; i < domain.atoms; ++i) {
    if ((m >> i) & 1u) out |= atom_images[i];
  }
  return out;
}

bool FiniteHom::is_homomorphism() const {
  if (atom_images.size() != domain.atoms) return false;
  Mask all = 0;
  for (Mask a : atom_images) {
    if (!codomain.contains(a) || (all & a)) return false;
    all |= a;
  }
  return all == codomain.top();
}

bool FiniteHom::is_embedding() const {
  return is_homomorphism() && std::none_of(atom_images.begin(), atom_images.end(), [](Mask a) { return a == 0; });
}

Adjunction adjoin(const FiniteBA& a, XBounds x) {
  if (!a.contains(x.upper) || (x.lower & ~x.upper)) {
    throw Error(ErrorCode::InvalidArgument, "bounds " + format_mask(x.lower) + " <= " + format_mask(x.upper) +
                                                " do not describe an element over " + std::to_string(a.atoms) +
                                                " atoms");
  }
  const unsigned split = std::popcount(x.upper & ~x.lower);
  if (a.atoms + split > FiniteBA::kMaxAtoms) throw Error(ErrorCode::TooLarge, "extension has too many atoms");
  Adjunction out;
  out.extended = FiniteBA::with_atoms(a.atoms + split);
  unsigned next = 0;
  for (unsigned i = 0; i < a.atoms; ++i) {
    const Mask bit = Mask{1} << i;
    if (x.lower & bit) {
      out.x |= Mask{1} << next;
      out.old_atoms.push_back(Mask{1} << next++);
    } else if (x.upper & bit) {
      out.x |= Mask{1} << next;
      out.old_atoms.push_back(Mask{3} << next);
      next += 2;
    } else {
      out.old_atoms.push_back(Mask{1} << next++);
    }
  }
  return out;
}

namespace {

// Codomain operations for the two embedding kinds.
struct AtomlessOps {
  using Elem = BAElem;
  const BAEmbedding& f;
  Elem image(Mask m) const { return f.image(m); }
  bool leq(const Elem& x, const Elem& y) const { return ba::leq(x, y); }
  Elem meet(const Elem& x, const Elem& y) const { return x & y; }
  Elem minus(const Elem& x, const Elem& y) const { return x & ~y; }
  bool zero(const Elem& x) const { return x.is_zero(); }
  const Elem& atom(unsigned i) const { return f.atom_images[i]; }
  BAEmbedding make(const FiniteBA& d, std::vector<Elem> atoms) const { return {d, std::move(atoms)}; }
};

struct FiniteOps {
  using Elem = Mask;
  const FiniteHom& f;
  Elem image(Mask m) const { return f.image(m); }
  bool leq(Elem x, Elem y) const { return (x & ~y) == 0; }
  Elem meet(Elem x, Elem y) const { return x & y; }
  Elem minus(Elem x, Elem y) const { return x & ~y; }
  bool zero(Elem x) const { return x == 0; }
  Elem atom(unsigned i) const { return f.atom_images[i]; }
  FiniteHom make(const FiniteBA& d, std::vector<Elem> atoms) const { return {d, f.codomain, std::move(atoms)}; }
};

template <class Ops, class Map>
ExtendResult<Map> extend_with(const Ops& ops, const FiniteBA& domain, XBounds x, const typename Ops::Elem& y) {
  ExtendResult<Map> out;
  out.adjunction = adjoin(domain, x);
  if (!ops.leq(ops.image(x.lower), y)) {
    out.witness = std::make_pair(x.lower, domain.top());
    return out;
  }
  if (!ops.leq(y, ops.image(x.upper))) {
    out.witness = std::make_pair(Mask{0}, x.upper);
    return out;
  }
  std::vector<typename Ops::Elem> atoms;
  for (unsigned i = 0; i < domain.atoms; ++i) {
    const Mask bit = Mask{1} << i;
    if ((x.upper & bit) && !(x.lower & bit)) {
      atoms.push_back(ops.meet(ops.atom(i), y));
      atoms.push_back(ops.minus(ops.atom(i), y));
    } else {
      atoms.push_back(ops.atom(i));
    }
  }
  out.accepted = true;
  out.injective = std::none_of(atoms.begin(), atoms.end(), [&](const auto& e) { return ops.zero(e); });
  out.map = ops.make(out.adjunction.extended, std::move(atoms));
  return out;
}

}  // namespace

ExtendResult<BAEmbedding> extend_one(const BAEmbedding& f, XBounds x, const BAElem& y) {
  return extend_with<AtomlessOps, BAEmbedding>(AtomlessOps{f}, f.domain, x, y);
}

ExtendResult<FiniteHom> extend_one(const FiniteHom& f, XBounds x, Mask y) {
  if (!f.codomain.contains(y)) throw Error(ErrorCode::InvalidArgument, format_mask(y) + " is not in the codomain");
  return extend_with<FiniteOps, FiniteHom>(FiniteOps{f}, f.domain, x, y);
}

BAElem interpolate(const std::vector<BAElem>& f, const std::vector<BAElem>& g, std::uint32_t min_fresh) {
  for (const auto& x : f) {
    for (const auto& y : g) {
      if (!less(x, y)) {
        throw Error(ErrorCode::SeparationFailure, format_term(x) + " is not strictly below " + format_term(y));
      }
    }
  }
  BAElem vf;
  for (const auto& x : f) vf = vf | x;
  BAElem ag = BAElem::one();
  for (const auto& y : g) ag = ag & y;
  if (!less(vf, ag)) {
    throw Error(ErrorCode::SeparationFailure,
                "join " + format_term(vf) + " is not strictly below meet " + format_term(ag));
  }
  std::uint32_t k = min_fresh;
  k = std::max(k, fresh_index(f));
  k = std::max(k, fresh_index(g));
  const BAElem a = vf | (BAElem::var(k) & ag & ~vf);
  if (!less(vf, a) || !less(a, ag)) throw std::logic_error("interpolant is not strict");
  return a;
}

BAElem find_extension_value(const BAEmbedding& f, XBounds x) {
  adjoin(f.domain, x);
  if (x.lower == x.upper) return f.image(x.lower);
  return interpolate({f.image(x.lower)}, {f.image(x.upper)}, fresh_index(f.atom_images));
}

BAEmbedding extend_to_refinement(const BAEmbedding& f, const std::vector<unsigned>& parent) {
  if (parent.empty() || parent.size() > FiniteBA::kMaxAtoms) {
    throw Error(ErrorCode::InvalidArgument, "refinement needs between 1 and " + std::to_string(FiniteBA::kMaxAtoms) +
                                                " atoms");
  }
  std::vector<std::vector<unsigned>> groups(f.domain.atoms);
  for (unsigned j = 0; j < parent.size(); ++j) {
    if (parent[j] >= f.domain.atoms) {
      throw Error(ErrorCode::InvalidArgument, "parent " + std::to_string(parent[j]) + " is not a domain atom");
    }
    groups[parent[j]].push_back(j);
  }
  for (unsigned i = 0; i < groups.size(); ++i) {
    if (groups[i].empty()) {
      throw Error(ErrorCode::InvalidArgument, "domain atom " + std::to_string(i) + " has no atom below it");
    }
  }
  BAEmbedding cur = f;
  while (std::any_of(groups.begin(), groups.end(), [](const auto& g) { return g.size() > 1; })) {
    XBounds x;
    for (unsigned i = 0; i < groups.size(); ++i) {
      if (groups[i].size() > 1) x.upper |= Mask{1} << i;
    }
    const BAElem y = find_extension_value(cur, x);
    auto r = extend_one(cur, x, y);
    if (!r.accepted || !r.injective) throw std::logic_error("extension value rejected");
    for (unsigned i = 0; i < groups.size(); ++i) {
      if (r.map->image(r.adjunction.old_atoms[i]) != cur.atom_images[i]) {
        throw std::logic_error("extension does not restrict to the previous stage");
      }
    }
    std::vector<std::vector<unsigned>> next;
    for (auto& g : groups) {
      if (g.size() > 1) {
        const auto mid = g.begin() + static_cast<std::ptrdiff_t>(g.size() / 2);
        next.emplace_back(g.begin(), mid);
        next.emplace_back(mid, g.end());
      } else {
        next.push_back(g);
      }
    }
    groups = std::move(next);
    cur = std::move(*r.map);
  }
  BAEmbedding out{FiniteBA::with_atoms(static_cast<unsigned>(parent.size())),
                  std::vector<BAElem>(parent.size())};
  for (unsigned i = 0; i < groups.size(); ++i) out.atom_images[groups[i][0]] = cur.atom_images[i];
  if (!out.is_embedding()) throw std::logic_error("refinement map is not an embedding");
  return out;
}

IdealReport ideal_below(const BAEmbedding& f, const BAElem& b) {
  if (!f.is_embedding()) throw Error(ErrorCode::InvalidArgument, "ideal_below needs an embedding");
  Mask m = 0;
  for (unsigned i = 0; i < f.domain.atoms; ++i) {
    if (leq(f.atom_images[i], b)) m |= Mask{1} << i;
  }
  IdealReport out;
  if (f.image(m) != b) {
    out.generators = {m};
  } else if (std::popcount(m) <= 1) {
    out.generators = {0};  // empty, or just {0}
  } else {
    for (unsigned i = 0; i < f.domain.atoms; ++i) {
      if ((m >> i) & 1u) out.generators.push_back(m & ~(Mask{1} << i));
    }
    std::sort(out.generators.begin(), out.generators.end());
  }
  out.principal = out.generators.size() == 1;
  return out;
}

BAEmbedding embed_into_atomless(const FiniteBA& a) {
  unsigned k = 0;
  while ((1u << k) < a.atoms) ++k;
  std::vector<BAElem> cells;
  for (unsigned c = 0; c < (1u << k); ++c) {
    BAElem cell = BAElem::one();
    for (unsigned i = 0; i < k; ++i) {
      const BAElem v = BAElem::var(i);
      cell = cell & (((c >> (k - 1 - i)) & 1u) ? ~v : v);
    }
    cells.push_back(cell);
  }
  BAEmbedding out{a, {}};
  for (unsigned j = 0; j + 1 < a.atoms; ++j) out.atom_images.push_back(cells[j]);
  BAElem last;
  for (unsigned c = a.atoms - 1; c < cells.size(); ++c) last = last | cells[c];
  out.atom_images.push_back(last);
  if (!out.is_embedding()) throw std::logic_error("base embedding is not an embedding");
  return out;
}

std::string format_mask(Mask m) {
  std::string out = "{";
  for (unsigned i = 0; i < 64; ++i) {
    if ((m >> i) & 1u) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i);
    }
  }
  return out + "}";
}

Mask parse_mask(std::string_view text) {
  auto fail = [&](const std::string& why) -> Mask {
    throw Error(ErrorCode::ParseError, why + " in mask '" + std::string(text) + "' (expected {i,j,...})");
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') return fail("expected '{'");
  ++pos;
  Mask m = 0;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 2) return fail("expected an atom index");
      const unsigned i = static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
      if (i >= 64) return fail("atom index out of range");
      m |= Mask{1} << i;
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      return fail("expected ',' or '}'");
    }
  }
  skip();
  if (pos != text.size()) return fail("trailing input");
  return m;
}

}  // namespace satlab::ba
