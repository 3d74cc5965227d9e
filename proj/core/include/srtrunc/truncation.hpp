#pragma once

#include <vector>

#include "srtrunc/complex.hpp"
#include "srtrunc/ideal.hpp"

namespace srtrunc {

/// I ∩ M^k for any monomial ideal.
MonomialIdeal truncate_geq(const MonomialIdeal& ideal, unsigned k);

/// I_k = I ∩ M_k, the squarefree part of I ∩ M^k. Each generator of degree
/// below k is padded with every disjoint variable set of the missing size.
/// For k > n the result is the zero ideal.
MonomialIdeal squarefree_truncate(const MonomialIdeal& ideal, unsigned k);

/// Supports of the squarefree degree-k monomials outside I_k.
std::vector<VarSet> j_set(const MonomialIdeal& ideal, unsigned k);

/// One step of the facet recurrence: facets of Δ_{I_{k+1}} from the minimal
/// generators of I_k and the facets of Δ_{I_k}, namely the degree-k generator
/// supports together with the facets of size at least k.
std::vector<VarSet> next_truncation_facets(const MonomialIdeal& ik, const SimplicialComplex& delta_k, unsigned k);

/// Facets of Δ_{I_{k+1}} via the recurrence applied to the one-shot I_k.
/// Requires k >= the minimal generator degree of I.
std::vector<VarSet> facets_after_truncation(const MonomialIdeal& ideal, unsigned k);

/// Δ_{I_target} reached by applying the recurrence from the minimal generator
/// degree upward, never computing a truncation directly.
SimplicialComplex iterate_facet_recurrence(const MonomialIdeal& ideal, unsigned target);

/// f-vector of Δ_{I_{k+1}} given the f-vector f of Δ_I:
///   (C(n,0), ..., C(n,k), f_k, ..., f_{d-1})   when k <= d,
///   (C(n,0), ..., C(n,k))                      when d < k,
/// with the binomial prefix capped at C(n,n).
FVector f_vector_truncated(const FVector& f, unsigned n, unsigned k);

}  // namespace srtrunc
