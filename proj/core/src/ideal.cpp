#include "srtrunc/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "srtrunc/errors.hpp"

namespace srtrunc {

MonomialIdeal::MonomialIdeal(unsigned n) : n_(n) {
  if (n > kMaxVariables) throw InputError("ambient size exceeds " + std::to_string(kMaxVariables));
}

MonomialIdeal MonomialIdeal::normalize(unsigned n, std::vector<Monomial> gens) {
  MonomialIdeal out(n);
  for (const Monomial& g : gens)
    if (g.ambient() != n)
      throw InputError("generator " + to_string(g) + " has ambient size " + std::to_string(g.ambient()) +
                       ", expected " + std::to_string(n));
  // After sorting by degree a generator can only be divided by an earlier one.
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Monomial& g : gens) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_supports(unsigned n, const std::vector<VarSet>& supports) {
  std::vector<Monomial> gens;
  gens.reserve(supports.size());
  for (VarSet s : supports) gens.push_back(Monomial::from_support(n, s));
  return normalize(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(unsigned n) { return normalize(n, {Monomial(n)}); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::optional<unsigned> MonomialIdeal::min_degree() const {
  if (gens_.empty()) return std::nullopt;
  return gens_.front().degree();
}

std::optional<unsigned> MonomialIdeal::max_degree() const {
  if (gens_.empty()) return std::nullopt;
  return gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<VarSet> MonomialIdeal::supports() const {
  std::vector<VarSet> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_) out.push_back(g.support());
  return out;
}

MonomialIdeal degree_slice(const MonomialIdeal& ideal, unsigned j) {
  const unsigned n = ideal.ambient();
  std::unordered_set<Monomial, MonomialHash> out;
  for (const Monomial& g : ideal.generators()) {
    const unsigned d = g.degree();
    if (d > j) continue;
    for_each_monomial_of_degree(n, j - d, [&](const Monomial& m) { out.insert(g * m); });
  }
  return MonomialIdeal::normalize(n, {out.begin(), out.end()});
}

MonomialIdeal squarefree_slice(const MonomialIdeal& ideal, unsigned j) {
  const unsigned n = ideal.ambient();
  std::vector<VarSet> out;
  for (const Monomial& g : ideal.generators()) {
    if (!g.is_squarefree()) continue;
    const VarSet s = g.support();
    const unsigned d = static_cast<unsigned>(s.size());
    if (d > j) continue;
    for_each_subset_of_size(VarSet::full(n) - s, j - d, [&](VarSet pad) { out.push_back(s | pad); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return MonomialIdeal::from_supports(n, out);
}

}  // namespace srtrunc
