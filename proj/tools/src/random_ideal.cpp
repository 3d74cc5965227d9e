#include "srtrunc_cli/random_ideal.hpp"

#include <algorithm>
#include <numeric>

namespace srtrunc::cli {

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, const SquarefreeShape& shape) {
  const unsigned n = shape.n;
  const unsigned lo = std::clamp(shape.min_degree, 1U, n);
  const unsigned hi = std::clamp(shape.max_degree, lo, n);
  const unsigned count =
      shape.min_generators + static_cast<unsigned>(draw(rng, shape.max_generators - shape.min_generators + 1));
  std::vector<Monomial> gens;
  std::vector<unsigned> vars(n);
  for (unsigned g = 0; g < count; ++g) {
    const unsigned degree = lo + static_cast<unsigned>(draw(rng, hi - lo + 1));
    std::iota(vars.begin(), vars.end(), 0U);
    VarSet s;
    for (unsigned t = 0; t < degree; ++t) {
      const unsigned pick = t + static_cast<unsigned>(draw(rng, n - t));
      std::swap(vars[t], vars[pick]);
      s = s.with(vars[t]);
    }
    gens.push_back(Monomial::from_support(n, s));
  }
  return MonomialIdeal::normalize(n, std::move(gens));
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const MonomialShape& shape) {
  const unsigned count =
      shape.min_generators + static_cast<unsigned>(draw(rng, shape.max_generators - shape.min_generators + 1));
  std::vector<Monomial> gens;
  for (unsigned g = 0; g < count; ++g) {
    std::vector<Exponent> e(shape.n, 0);
    do {
      for (auto& a : e) a = static_cast<Exponent>(draw(rng, shape.max_exponent + 1));
    } while (std::all_of(e.begin(), e.end(), [](Exponent a) { return a == 0; }));
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::normalize(shape.n, std::move(gens));
}

}  // namespace srtrunc::cli
