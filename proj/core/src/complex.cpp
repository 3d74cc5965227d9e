#include "srtrunc/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "srtrunc/errors.hpp"

namespace srtrunc {

namespace {

// Keeps the inclusion-minimal (or maximal) members of a family, sorted canonically.
std::vector<VarSet> keep_minimal(std::vector<VarSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VarSet> out;
  for (VarSet s : family)
    if (std::none_of(out.begin(), out.end(), [&](VarSet t) { return t.subset_of(s); })) out.push_back(s);
  return out;
}

std::vector<VarSet> keep_maximal(std::vector<VarSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VarSet> out;
  for (auto it = family.rbegin(); it != family.rend(); ++it)
    if (std::none_of(out.begin(), out.end(), [&](VarSet t) { return it->subset_of(t); })) out.push_back(*it);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(const FVector& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (i) out += ',';
    out += f.entries[i].get_str();
  }
  return out + ")";
}

SimplicialComplex SimplicialComplex::from_faces(unsigned vertex_count, std::vector<VarSet> faces) {
  const VarSet all = VarSet::full(vertex_count);
  for (VarSet f : faces)
    if (!f.subset_of(all)) throw InputError("face " + to_string(f) + " exceeds vertex count " + std::to_string(vertex_count));
  SimplicialComplex c(vertex_count);
  c.facets_ = keep_maximal(std::move(faces));
  return c;
}

SimplicialComplex SimplicialComplex::simplex(unsigned vertex_count) {
  return from_faces(vertex_count, {VarSet::full(vertex_count)});
}

SimplicialComplex SimplicialComplex::empty_complex(unsigned vertex_count) {
  return from_faces(vertex_count, {VarSet{}});
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw InputError("void complex has no dimension");
  int top = 0;
  for (VarSet f : facets_) top = std::max(top, f.size());
  return top - 1;
}

bool SimplicialComplex::contains_face(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.subset_of(f); });
}

std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& edges) {
  std::vector<VarSet> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<VarSet> current{VarSet{}};
  for (VarSet e : sorted) {
    std::vector<VarSet> next;
    for (VarSet t : current) {
      if (t.intersects(e)) {
        next.push_back(t);
      } else {
        for (unsigned v : e.members()) next.push_back(t.with(v));
      }
    }
    current = keep_minimal(std::move(next));
    if (current.empty()) break;
  }
  return current;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InputError("Stanley-Reisner complex needs a squarefree ideal");
  if (ideal.is_unit()) throw InputError("the unit ideal has no Stanley-Reisner complex");
  const unsigned n = ideal.ambient();
  const VarSet all = VarSet::full(n);
  std::vector<VarSet> facets;
  for (VarSet t : minimal_transversals(ideal.supports())) facets.push_back(all - t);
  return SimplicialComplex::from_faces(n, std::move(facets));
}

MonomialIdeal complex_to_ideal(const SimplicialComplex& complex) {
  if (complex.is_void()) throw InputError("the void complex has no Stanley-Reisner ideal");
  const unsigned n = complex.vertex_count();
  const VarSet all = VarSet::full(n);
  std::vector<VarSet> complements;
  for (VarSet f : complex.facets()) complements.push_back(all - f);
  return MonomialIdeal::from_supports(n, minimal_transversals(complements));
}

FVector f_vector(const SimplicialComplex& complex) {
  if (complex.is_void()) throw InputError("f-vector of the void complex is undefined");
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> counts(complex.dimension() + 2, 0);
  for (VarSet facet : complex.facets()) {
    const std::uint64_t full = facet.bits();
    // Walk every submask of the facet, including the facet and the empty set.
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      if (seen.insert(sub).second) ++counts[VarSet(sub).size()];
      if (sub == 0) break;
    }
  }
  FVector f;
  for (std::uint64_t c : counts) f.entries.emplace_back(static_cast<unsigned long>(c));
  return f;
}

SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int k) {
  if (complex.is_void()) throw InputError("pure skeleton of the void complex");
  if (k > complex.dimension())
    throw InputError("skeleton index " + std::to_string(k) + " exceeds dimension " + std::to_string(complex.dimension()));
  std::vector<VarSet> keep;
  for (VarSet f : complex.facets())
    if (f.size() == k + 1) keep.push_back(f);
  return SimplicialComplex::from_faces(complex.vertex_count(), std::move(keep));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VarSet w) {
  if (!w.subset_of(VarSet::full(complex.vertex_count())))
    throw InputError("vertex set " + to_string(w) + " exceeds the complex");
  std::vector<VarSet> restricted;
  restricted.reserve(complex.facets().size());
  for (VarSet f : complex.facets()) restricted.push_back(f & w);
  return SimplicialComplex::from_faces(complex.vertex_count(), std::move(restricted));
}

std::optional<unsigned> is_cone(const SimplicialComplex& complex) {
  if (complex.is_void()) throw InputError("cone test on the void complex");
  VarSet common = VarSet::full(complex.vertex_count());
  for (VarSet f : complex.facets()) common = common & f;
  if (common.empty()) return std::nullopt;
  return common.front();
}

}  // namespace srtrunc
