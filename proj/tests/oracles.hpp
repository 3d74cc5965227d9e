#pragma once

// Brute-force reference computations used only by the tests. None of them
// call into the homology engine, the Hochster sweep, or the truncation code.

#include <cstdint>
#include <vector>

#include <srtrunc/srtrunc.hpp>

namespace oracle {

using srtrunc::BigInt;
using srtrunc::VarSet;

/// Every subset of {0..n-1} containing no generator support.
std::vector<VarSet> all_faces(const srtrunc::MonomialIdeal& squarefree_ideal);

/// Faces of a complex enumerated by testing all 2^n subsets against the facets.
std::vector<VarSet> all_faces(const srtrunc::SimplicialComplex& complex);

/// Inclusion-maximal members of a face list.
std::vector<VarSet> maximal(const std::vector<VarSet>& faces);

/// Face counts by cardinality.
std::vector<BigInt> face_counts(const std::vector<VarSet>& faces);

/// Rank of a dense integer matrix by Gaussian elimination over Q (mpq) or F_p.
std::size_t dense_rank(std::vector<std::vector<std::int64_t>> rows, std::uint32_t characteristic);

/// dims[q+1] = dim H̃_q from dense boundary matrices of the given face list.
std::vector<std::size_t> reduced_homology(const std::vector<VarSet>& faces, std::uint32_t characteristic);

/// Hochster's formula summed over every W with no pruning, dense ranks.
srtrunc::BettiTable hochster(const srtrunc::MonomialIdeal& squarefree_ideal, std::uint32_t characteristic);

/// Hilbert numerator from counting standard monomials degree by degree up to
/// the degree of the lcm of all generators, multiplied by (1-t)^n.
srtrunc::HilbertNumerator hilbert_by_counting(const srtrunc::MonomialIdeal& ideal);

/// Monomials of degree <= bound in n variables.
std::vector<srtrunc::Monomial> monomials_up_to(unsigned n, unsigned bound);

}  // namespace oracle
