#pragma once

#include <utility>
#include <vector>

#include "srtrunc/betti_table.hpp"
#include "srtrunc/homology.hpp"
#include "srtrunc/ideal.hpp"

namespace srtrunc {

/// Default cap on the polarized ambient size accepted by betti_monomial().
inline constexpr unsigned kDefaultMaxPolarizedVariables = 24;

/// Polarization of a monomial ideal.
///
/// Source variable x_i with largest exponent a_i over G(I) becomes the block
/// x_{i,1}, ..., x_{i,a_i}; blocks are laid out in order of i, so the target
/// variables are the pairs (i, l) sorted lexicographically. Variables with
/// a_i = 0 get no block.
struct PolarizationMap {
  unsigned source_n = 0;
  std::vector<Exponent> max_exponents;                // a_i per source variable
  std::vector<std::pair<unsigned, unsigned>> target;  // flat index -> (i, l), both one-based
  MonomialIdeal ideal;                                // squarefree, over target.size() variables

  unsigned target_n() const { return static_cast<unsigned>(target.size()); }
  /// Flat zero-based target index of x_{i,l} (one-based i, l).
  unsigned index_of(unsigned i, unsigned l) const;
  Monomial polarize(const Monomial& m) const;
};

/// Throws InputError for the unit ideal.
PolarizationMap polarize(const MonomialIdeal& ideal);

/// {"source_n": n, "target_n": m, "variables": [[i, l], ...]}
std::string polarization_map_to_json(const PolarizationMap& map);

/// Betti table of R/I computed as the Hochster table of the polarization,
/// reported over the source ring. Throws ResourceError when the polarized
/// ambient exceeds `max_target_variables`.
BettiTable betti_monomial(const MonomialIdeal& ideal, Characteristic field,
                          unsigned max_target_variables = kDefaultMaxPolarizedVariables, unsigned threads = 1);

}  // namespace srtrunc
