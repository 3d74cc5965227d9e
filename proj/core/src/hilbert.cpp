#include <algorithm>

#include "srtrunc/betti.hpp"
#include "srtrunc/errors.hpp"

namespace srtrunc {

namespace {

using Poly = std::vector<BigInt>;

void add_shifted(Poly& acc, const Poly& p, unsigned shift, int sign = 1) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t s = 0; s < p.size(); ++s) acc[s + shift] += sign * p[s];
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Minimal generators, sorted by degree so a divisor always precedes its multiples.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (Monomial& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(std::move(g));
  return out;
}

Poly numerator_rec(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};

  // Coprime generators: the quotient is a tensor product of K[x]/(g) pieces.
  VarSet seen;
  bool coprime = true;
  for (const Monomial& g : gens) {
    const VarSet s = g.support();
    if (s.intersects(seen)) {
      coprime = false;
      break;
    }
    seen = seen | s;
  }
  if (coprime) {
    Poly acc{1};
    for (const Monomial& g : gens) {
      Poly factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      acc = multiply(acc, factor);
    }
    return acc;
  }

  // Pivot on the variable occurring in the most generators, raised to its
  // smallest positive exponent among them.
  const unsigned n = gens.front().ambient();
  std::vector<unsigned> occurrences(n, 0);
  std::vector<Exponent> min_exp(n, 0);
  for (const Monomial& g : gens)
    for (unsigned v = 0; v < n; ++v)
      if (g[v] > 0) {
        ++occurrences[v];
        min_exp[v] = min_exp[v] == 0 ? g[v] : std::min(min_exp[v], g[v]);
      }
  const unsigned var =
      static_cast<unsigned>(std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
  const Monomial pivot = Monomial::variable(n, var, min_exp[var]);

  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const Monomial& g : gens) quotient.push_back(g.colon(pivot));

  Poly result = numerator_rec(minimalize(std::move(sum)));
  add_shifted(result, numerator_rec(minimalize(std::move(quotient))), pivot.degree());
  return result;
}

}  // namespace

HilbertNumerator hilbert_numerator_monomial(const MonomialIdeal& ideal) {
  HilbertNumerator h;
  h.n = ideal.ambient();
  h.coefficients = numerator_rec(ideal.generators());
  h.trim();
  return h;
}

HilbertNumerator hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal, std::size_t max_generators) {
  const auto& gens = ideal.generators();
  if (gens.size() > max_generators)
    throw ResourceError("inclusion-exclusion over " + std::to_string(gens.size()) + " generators exceeds the bound of " +
                        std::to_string(max_generators));
  HilbertNumerator h;
  h.n = ideal.ambient();
  const std::size_t m = gens.size();
  // Depth-first over subsets carrying the running lcm.
  auto rec = [&](auto&& self, std::size_t next, const Monomial& lcm, int sign) -> void {
    const unsigned d = lcm.degree();
    if (h.coefficients.size() <= d) h.coefficients.resize(d + 1, 0);
    h.coefficients[d] += sign;
    for (std::size_t i = next; i < m; ++i) self(self, i + 1, lcm.lcm(gens[i]), -sign);
  };
  rec(rec, 0, Monomial(ideal.ambient()), 1);
  h.trim();
  return h;
}

}  // namespace srtrunc
