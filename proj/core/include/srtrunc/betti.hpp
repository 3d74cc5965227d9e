#pragma once

#include <cstddef>

#include "srtrunc/betti_table.hpp"
#include "srtrunc/complex.hpp"
#include "srtrunc/homology.hpp"
#include "srtrunc/ideal.hpp"

namespace srtrunc {

/// Default cap on the ambient size of a Hochster sweep (2^n subsets).
inline constexpr unsigned kMaxHochsterVariables = 30;
/// Default cap on the generator count for inclusion-exclusion numerators.
inline constexpr std::size_t kDefaultInclusionExclusionBound = 20;

/// β_{i,j}(R/I) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W) over all W ⊆ {1..n}.
///
/// A restriction Δ_W is a cone exactly when W is not covered by the generator
/// supports lying inside W; those W are skipped. The subset space is split
/// into blocks handed out to `threads` workers whose partial tables are summed,
/// so the result does not depend on the thread count.
BettiTable hochster_betti(const MonomialIdeal& ideal, Characteristic field, unsigned threads = 1);

/// The closed form for one entry on the (k-1) row of R/I_k:
///   α_{i,i+j} = Σ_{r=0}^{i+j} (-1)^{j-r} C(n-r, i+j-r) f^k_{r-1}
///             + Σ_{ℓ+m=i+j, ℓ<i} (-1)^{ℓ-i-1} β_{ℓ,ℓ+m}(R/I)
/// evaluated literally, with fk the f-vector of Δ_{I_k}.
BigInt truncation_alpha(const BettiTable& base, const FVector& fk, unsigned n, unsigned i, unsigned j);

/// Betti table of R/I_k from the table of R/I and the f-vector of Δ_{I_k}.
///
/// Row j - i = k - 1 is solved from the alternating-sum identity, one unknown
/// per total degree, and checked against truncation_alpha(). Rows at or above
/// k are copied from `base`; rows 1..k-2 are empty. Requires k to exceed the
/// minimal generator degree recorded in `base`.
BettiTable closed_form_truncation_betti(const BettiTable& base, const FVector& fk, unsigned n, unsigned k);

/// Coefficient of t^s is Σ_{r=0}^{s} (-1)^{s-r} C(n-r, s-r) f_{r-1}.
HilbertNumerator hilbert_numerator_from_fvector(const FVector& f, unsigned n);

/// Coefficient of t^s is Σ_i (-1)^i β_{i,s}.
HilbertNumerator hilbert_numerator_from_betti(const BettiTable& table);

/// Exact Hilbert numerator of R/I for any monomial ideal, by pivot splitting
/// HN(I) = HN(I + (p)) + t^{deg p} HN(I : p) down to coprime generator sets.
HilbertNumerator hilbert_numerator_monomial(const MonomialIdeal& ideal);

/// N(t) = Σ_{S ⊆ G(I)} (-1)^{|S|} t^{deg lcm(S)}. Throws ResourceError when
/// the ideal has more than `max_generators` generators.
HilbertNumerator hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal,
                                                       std::size_t max_generators = kDefaultInclusionExclusionBound);

/// Betti table of R/I_{≥k} from the table of R/I and the Hilbert numerator of
/// R/I_{≥k} alone. Rows below k-1 vanish, rows above k-1 are those of R/I,
/// and row k-1 is read off the numerator.
BettiTable betti_geq_k(const BettiTable& base, const HilbertNumerator& truncated, unsigned k);

/// Smallest j with β_{1,j} > 0, i.e. the minimal generator degree.
std::optional<unsigned> min_generator_degree(const BettiTable& table);

}  // namespace srtrunc
