#pragma once

#include <cstdint>
#include <random>

#include <srtrunc/ideal.hpp>

namespace srtrunc::cli {

/// Draws in [0, bound) from the raw engine output so that sequences are the
/// same on every standard library.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

struct SquarefreeShape {
  unsigned n = 6;
  unsigned min_generators = 1;
  unsigned max_generators = 5;
  unsigned min_degree = 2;
  unsigned max_degree = 5;
};

/// g generators drawn uniformly among squarefree monomials with degrees in
/// [min_degree, max_degree] (clamped to [1, n]), then normalized.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, const SquarefreeShape& shape);

struct MonomialShape {
  unsigned n = 3;
  unsigned max_exponent = 2;
  unsigned min_generators = 1;
  unsigned max_generators = 4;
};

/// Nonunit monomial ideal with exponents in [0, max_exponent].
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const MonomialShape& shape);

}  // namespace srtrunc::cli
