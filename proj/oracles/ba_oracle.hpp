#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "satlab/ba/algebra.hpp"

namespace satlab::oracles {

// Random Boolean expression over v0..v(gens-1) with its truth table, computed
// by direct evaluation (row r assigns bit i of r to v_i).
struct RandomExpr {
  std::string text;
  std::vector<bool> table;
};
RandomExpr random_expr(std::mt19937_64& rng, unsigned gens, unsigned depth);

// Truth table of x over v0..v(gens-1), by eval on every assignment.
std::vector<bool> table_of(const ba::BAElem& x, unsigned gens);

// Whether some homomorphism h from the adjunction's algebra into f.codomain
// has h(old atom i) = f(atom i) and h(x) = y, trying every assignment of
// codomain atoms to domain atoms.
bool brute_extension_exists(const ba::FiniteHom& f, const ba::Adjunction& adj, ba::Mask y);

// Homomorphism laws checked element-wise over all of a domain with at most
// 8 atoms: images of meets, joins and complements, 0 and 1; injectivity.
bool brute_is_embedding(const ba::BAEmbedding& f);

}  // namespace satlab::oracles
