#pragma once

#include <optional>
#include <vector>

#include "srtrunc/bigint.hpp"
#include "srtrunc/ideal.hpp"
#include "srtrunc/varset.hpp"

namespace srtrunc {

/// Face counts by cardinality: entries[r] = f_{r-1}, so entries[0] = f_{-1}.
struct FVector {
  std::vector<BigInt> entries;

  /// f_{r-1}, or zero past the end.
  BigInt face_count(unsigned cardinality) const {
    return cardinality < entries.size() ? entries[cardinality] : BigInt(0);
  }
  /// d where the complex has dimension d-1.
  unsigned top_cardinality() const { return entries.empty() ? 0 : static_cast<unsigned>(entries.size() - 1); }

  friend bool operator==(const FVector&, const FVector&) = default;
};

std::string to_string(const FVector& f);

/// Simplicial complex on vertices 0..n-1 given by its facets.
///
/// No facets at all is the void complex; the single facet {} is the empty
/// complex. The two are distinct.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(unsigned vertex_count = 0) : n_(vertex_count) {}

  /// Drops non-maximal entries and duplicates.
  static SimplicialComplex from_faces(unsigned vertex_count, std::vector<VarSet> faces);
  static SimplicialComplex simplex(unsigned vertex_count);
  static SimplicialComplex empty_complex(unsigned vertex_count);

  unsigned vertex_count() const { return n_; }
  const std::vector<VarSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// dim = max |F| - 1; -1 for the empty complex. Requires nonvoid.
  int dimension() const;
  bool contains_face(VarSet face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  unsigned n_ = 0;
  std::vector<VarSet> facets_;
};

/// Minimal sets meeting every edge of the hypergraph (Berge's incremental
/// algorithm), in canonical order. An empty edge admits no transversal.
std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& edges);

/// Δ_I. Throws InputError for non-squarefree or unit ideals.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Ideal of minimal non-faces. Throws InputError on the void complex.
MonomialIdeal complex_to_ideal(const SimplicialComplex& complex);

/// Face counts by facet-subset expansion with global deduplication.
FVector f_vector(const SimplicialComplex& complex);

/// Complex whose facets are the facets of Δ with exactly k+1 vertices.
/// Requires k <= dim; an empty selection yields the void complex.
SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int k);

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VarSet w);

/// A vertex lying in every facet, if any.
std::optional<unsigned> is_cone(const SimplicialComplex& complex);

}  // namespace srtrunc
