#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satlab/ba/element.hpp"

namespace satlab::ba {

using Mask = std::uint64_t;

// Power set of `atoms` atoms; elements are atom bitmasks.
struct FiniteBA {
  static constexpr unsigned kMaxAtoms = 32;

  unsigned atoms = 1;

  // Throws InvalidArgument unless 1 <= n <= kMaxAtoms.
  static FiniteBA with_atoms(unsigned n);
  Mask top() const { return (Mask{1} << atoms) - 1; }
  bool contains(Mask m) const { return (m & ~top()) == 0; }
  Mask complement(Mask m) const { return top() & ~m; }
  friend bool operator==(const FiniteBA&, const FiniteBA&) = default;
};

// Homomorphism from a FiniteBA into the atomless algebra, given by atom images.
struct BAEmbedding {
  FiniteBA domain;
  std::vector<BAElem> atom_images;

  BAElem image(Mask m) const;
  // Atom images pairwise disjoint with join 1.
  bool is_homomorphism() const;
  // Homomorphism with every atom image nonzero.
  bool is_embedding() const;
};

// Homomorphism between finite algebras.
struct FiniteHom {
  FiniteBA domain;
  FiniteBA codomain;
  std::vector<Mask> atom_images;

  Mask image(Mask m) const;
  bool is_homomorphism() const;
  bool is_embedding() const;
};

// x over a finite A, by its principal bounds: `lower` = max{a : a <= x},
// `upper` = min{a : x <= a}. Atoms in upper \ lower are split by x.
struct XBounds {
  Mask lower = 0;
  Mask upper = 0;
};

// The algebra generated by A and x. Split atoms become two atoms (the part
// below x first), the others are kept, in atom order.
struct Adjunction {
  FiniteBA extended;
  std::vector<Mask> old_atoms;  // atom of A -> element of the extension
  Mask x = 0;
};

// Throws InvalidArgument unless lower <= upper within A.
Adjunction adjoin(const FiniteBA& a, XBounds x);

template <class Map>
struct ExtendResult {
  bool accepted = false;
  // On rejection: some a <= x <= a' with f(a) <= y <= f(a') failing.
  std::optional<std::pair<Mask, Mask>> witness;
  Adjunction adjunction;
  std::optional<Map> map;  // the homomorphism x -> y, when accepted
  bool injective = false;
};

// Extension of f along x -> y: accepted iff f(a) <= y <= f(a') for all
// a <= x <= a'.
ExtendResult<BAEmbedding> extend_one(const BAEmbedding& f, XBounds x, const BAElem& y);
ExtendResult<FiniteHom> extend_one(const FiniteHom& f, XBounds x, Mask y);

// Strict interpolant f < a < g for all f in F, g in G:
// a = VF | (v_k & AG & ~VF), k the least index at least `min_fresh` beyond
// every support in F and G. Empty F or G bound one side only. Throws
// SeparationFailure with the violating pair when some f is not strictly below
// some g, or VF is not strictly below AG.
BAElem interpolate(const std::vector<BAElem>& f, const std::vector<BAElem>& g, std::uint32_t min_fresh = 0);

// Value for x that keeps f an embedding: f(lower) when x = lower, otherwise
// interpolate({f(lower)}, {f(upper)}) with a generator fresh for every atom
// image.
BAElem find_extension_value(const BAEmbedding& f, XBounds x);

// Extends f to a refinement of its domain: target atom j lies below domain
// atom parent[j], and every domain atom has a target atom below it. Adjoins
// one element at a time; each stage is verified.
BAEmbedding extend_to_refinement(const BAEmbedding& f, const std::vector<unsigned>& parent);

// {a in A : f(a) < b}, by its maximal elements. `generators` is {0} when the
// set is empty; `principal` says whether the set is an ideal with a single
// generator. Throws InvalidArgument unless f is an embedding.
struct IdealReport {
  bool principal = false;
  std::vector<Mask> generators;
};
IdealReport ideal_below(const BAEmbedding& f, const BAElem& b);

// Atoms go to the cells of ceil(log2 n) fresh generators, surplus cells merged
// into the last atom.
BAEmbedding embed_into_atomless(const FiniteBA& a);

// Atom masks as `{0,2}` sets; parsed with the same syntax.
std::string format_mask(Mask m);
Mask parse_mask(std::string_view text);

}  // namespace satlab::ba
