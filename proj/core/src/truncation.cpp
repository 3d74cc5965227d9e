#include "srtrunc/truncation.hpp"

#include <algorithm>
#include <unordered_set>

#include "srtrunc/errors.hpp"

namespace srtrunc {

MonomialIdeal truncate_geq(const MonomialIdeal& ideal, unsigned k) {
  const unsigned n = ideal.ambient();
  std::unordered_set<Monomial, MonomialHash> gens;
  for (const Monomial& g : ideal.generators()) {
    const unsigned d = g.degree();
    if (d >= k) {
      gens.insert(g);
      continue;
    }
    for_each_monomial_of_degree(n, k - d, [&](const Monomial& m) { gens.insert(g * m); });
  }
  return MonomialIdeal::normalize(n, {gens.begin(), gens.end()});
}

MonomialIdeal squarefree_truncate(const MonomialIdeal& ideal, unsigned k) {
  if (!ideal.is_squarefree()) throw InputError("squarefree truncation needs a squarefree ideal");
  const unsigned n = ideal.ambient();
  std::vector<VarSet> gens;
  for (VarSet s : ideal.supports()) {
    const unsigned d = static_cast<unsigned>(s.size());
    if (d >= k) {
      gens.push_back(s);
      continue;
    }
    for_each_subset_of_size(VarSet::full(n) - s, k - d, [&](VarSet pad) { gens.push_back(s | pad); });
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return MonomialIdeal::from_supports(n, gens);
}

std::vector<VarSet> j_set(const MonomialIdeal& ideal, unsigned k) {
  const MonomialIdeal ik = squarefree_truncate(ideal, k);
  const std::vector<VarSet> supports = ik.supports();
  std::vector<VarSet> out;
  for_each_subset_of_size(VarSet::full(ideal.ambient()), k, [&](VarSet s) {
    if (std::none_of(supports.begin(), supports.end(), [&](VarSet g) { return g.subset_of(s); })) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VarSet> next_truncation_facets(const MonomialIdeal& ik, const SimplicialComplex& delta_k, unsigned k) {
  std::vector<VarSet> out;
  for (const Monomial& u : ik.generators())
    if (u.degree() == k) out.push_back(u.support());
  for (VarSet f : delta_k.facets())
    if (static_cast<unsigned>(f.size()) >= k) out.push_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_recurrence_start(const MonomialIdeal& ideal, unsigned k) {
  if (!ideal.is_squarefree()) throw InputError("facet recurrence needs a squarefree ideal");
  const auto d = ideal.min_degree();
  if (!d) throw InputError("facet recurrence is undefined for the zero ideal");
  if (k < *d)
    throw InputError("truncation index " + std::to_string(k) + " is below the minimal generator degree " +
                     std::to_string(*d));
}

}  // namespace

std::vector<VarSet> facets_after_truncation(const MonomialIdeal& ideal, unsigned k) {
  require_recurrence_start(ideal, k);
  const MonomialIdeal ik = squarefree_truncate(ideal, k);
  if (ik.is_unit()) throw InputError("truncation index 0 of the unit ideal has no complex");
  return next_truncation_facets(ik, stanley_reisner(ik), k);
}

SimplicialComplex iterate_facet_recurrence(const MonomialIdeal& ideal, unsigned target) {
  require_recurrence_start(ideal, target);
  const unsigned n = ideal.ambient();
  unsigned k = *ideal.min_degree();
  if (k == 0) throw InputError("facet recurrence is undefined for the unit ideal");
  // I_d = I at the minimal degree d.
  MonomialIdeal ik = ideal;
  SimplicialComplex delta = stanley_reisner(ik);
  for (; k < target; ++k) {
    delta = SimplicialComplex::from_faces(n, next_truncation_facets(ik, delta, k));
    ik = complex_to_ideal(delta);
  }
  return delta;
}

FVector f_vector_truncated(const FVector& f, unsigned n, unsigned k) {
  const unsigned d = f.top_cardinality();
  FVector out;
  const unsigned prefix = std::min(k, n);
  for (unsigned r = 0; r <= prefix; ++r) out.entries.push_back(binomial(n, r));
  if (k <= d)
    for (unsigned r = k + 1; r <= d; ++r) out.entries.push_back(f.entries[r]);
  return out;
}

}  // namespace srtrunc
