#include "ba_oracle.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace satlab::oracles {

RandomExpr random_expr(std::mt19937_64& rng, unsigned gens, unsigned depth) {
  const std::size_t rows = std::size_t{1} << gens;
  const unsigned pick = depth == 0 ? static_cast<unsigned>(rng() % 6) : static_cast<unsigned>(rng() % 10);
  RandomExpr out;
  if (pick == 0) {
    out.text = "0";
    out.table.assign(rows, false);
  } else if (pick == 1) {
    out.text = "1";
    out.table.assign(rows, true);
  } else if (pick < 6) {
    const unsigned v = static_cast<unsigned>(rng() % gens);
    out.text = "v" + std::to_string(v);
    for (std::size_t r = 0; r < rows; ++r) out.table.push_back((r >> v) & 1u);
  } else if (pick == 6) {
    auto inner = random_expr(rng, gens, depth - 1);
    out.text = "~(" + inner.text + ")";
    for (std::size_t r = 0; r < rows; ++r) out.table.push_back(!inner.table[r]);
  } else {
    auto a = random_expr(rng, gens, depth - 1);
    auto b = random_expr(rng, gens, depth - 1);
    const bool is_and = pick < 8 || pick == 9;
    out.text = "(" + a.text + (is_and ? " & " : " | ") + b.text + ")";
    for (std::size_t r = 0; r < rows; ++r) out.table.push_back(is_and ? a.table[r] && b.table[r] : a.table[r] || b.table[r]);
  }
  return out;
}

std::vector<bool> table_of(const ba::BAElem& x, unsigned gens) {
  std::vector<bool> out;
  for (std::size_t r = 0; r < (std::size_t{1} << gens); ++r) {
    std::vector<std::uint32_t> on;
    for (unsigned i = 0; i < gens; ++i) {
      if ((r >> i) & 1u) on.push_back(i);
    }
    out.push_back(x.eval(on));
  }
  return out;
}

bool brute_extension_exists(const ba::FiniteHom& f, const ba::Adjunction& adj, ba::Mask y) {
  const unsigned m = adj.extended.atoms;
  const unsigned k = f.codomain.atoms;
  // owner[j] = atom of the extension whose image contains codomain atom j.
  std::vector<unsigned> owner(k, 0);
  while (true) {
    auto image = [&](ba::Mask a) {
      ba::Mask out = 0;
      for (unsigned j = 0; j < k; ++j) {
        if ((a >> owner[j]) & 1u) out |= ba::Mask{1} << j;
      }
      return out;
    };
    bool ok = image(adj.x) == y;
    for (unsigned i = 0; i < f.domain.atoms && ok; ++i) ok = image(adj.old_atoms[i]) == f.atom_images[i];
    if (ok) return true;
    unsigned j = 0;
    while (j < k && ++owner[j] == m) owner[j++] = 0;
    if (j == k) return false;
  }
}

bool brute_is_embedding(const ba::BAEmbedding& f) {
  const unsigned n = f.domain.atoms;
  if (n > 8) throw std::invalid_argument("oracle: domain too large");
  const ba::Mask top = (ba::Mask{1} << n) - 1;
  std::vector<ba::BAElem> img;
  for (ba::Mask a = 0; a <= top; ++a) img.push_back(f.image(a));
  if (!img[0].is_zero() || !img[top].is_one()) return false;
  std::set<ba::BAElem> distinct(img.begin(), img.end());
  if (distinct.size() != img.size()) return false;
  for (ba::Mask a = 0; a <= top; ++a) {
    if (img[top & ~a] != ~img[a]) return false;
    for (ba::Mask b = 0; b <= top; ++b) {
      if (img[a & b] != (img[a] & img[b]) || img[a | b] != (img[a] | img[b])) return false;
    }
  }
  return true;
}

}  // namespace satlab::oracles
