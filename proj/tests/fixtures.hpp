#pragma once

#include <initializer_list>
#include <ostream>
#include <random>
#include <vector>

#include <srtrunc/srtrunc.hpp>

#include "srtrunc_cli/random_ideal.hpp"

namespace fixture {

using srtrunc::BigInt;
using srtrunc::Characteristic;
using srtrunc::Monomial;
using srtrunc::MonomialIdeal;
using srtrunc::VarSet;

/// One-based variable list to a VarSet.
inline VarSet vars(std::initializer_list<unsigned> one_based) {
  VarSet s;
  for (unsigned v : one_based) s = s.with(v - 1);
  return s;
}

inline MonomialIdeal squarefree(unsigned n, std::initializer_list<std::initializer_list<unsigned>> gens) {
  std::vector<VarSet> supports;
  for (auto g : gens) supports.push_back(vars(g));
  return MonomialIdeal::from_supports(n, supports);
}

inline Monomial mono(std::vector<srtrunc::Exponent> exps) { return Monomial(std::move(exps)); }

inline MonomialIdeal monomial_ideal(unsigned n, std::vector<std::vector<srtrunc::Exponent>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal::normalize(n, std::move(ms));
}

/// (x1x2x3, x4x5x6x7, x1x2x4x5x8x9) in nine variables.
inline MonomialIdeal three_generator_ideal() { return squarefree(9, {{1, 2, 3}, {4, 5, 6, 7}, {1, 2, 4, 5, 8, 9}}); }

/// (x1^3, x2^4, x1^2 x2^2 x3^2).
inline MonomialIdeal mixed_power_ideal() { return monomial_ideal(3, {{3, 0, 0}, {0, 4, 0}, {2, 2, 2}}); }

/// (x1^d, ..., xn^d).
inline MonomialIdeal power_complete_intersection(unsigned n, srtrunc::Exponent d) {
  std::vector<Monomial> gens;
  for (unsigned v = 0; v < n; ++v) gens.push_back(Monomial::variable(n, v, d));
  return MonomialIdeal::normalize(n, gens);
}

inline srtrunc::FVector fv(std::initializer_list<long> values) {
  srtrunc::FVector f;
  for (long v : values) f.entries.emplace_back(v);
  return f;
}

inline MonomialIdeal random_squarefree(std::mt19937_64& rng, unsigned n, unsigned max_gens = 5) {
  srtrunc::cli::SquarefreeShape shape;
  shape.n = n;
  shape.min_generators = 1;
  shape.max_generators = max_gens;
  shape.min_degree = 1;
  shape.max_degree = n;
  return srtrunc::cli::random_squarefree_ideal(rng, shape);
}

inline MonomialIdeal random_monomial(std::mt19937_64& rng, unsigned n, unsigned max_exponent = 2,
                                     unsigned max_gens = 4) {
  srtrunc::cli::MonomialShape shape;
  shape.n = n;
  shape.max_exponent = max_exponent;
  shape.min_generators = 1;
  shape.max_generators = max_gens;
  return srtrunc::cli::random_monomial_ideal(rng, shape);
}

}  // namespace fixture

namespace srtrunc {

inline std::ostream& operator<<(std::ostream& os, VarSet s) { return os << to_string(s); }

inline std::ostream& operator<<(std::ostream& os, const std::vector<VarSet>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << to_string(v[i]);
  return os << ']';
}

}  // namespace srtrunc
