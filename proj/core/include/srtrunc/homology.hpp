#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srtrunc/complex.hpp"

namespace srtrunc {

/// Coefficient field: 0 for the rationals, otherwise a prime below 2^31.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  /// Throws InputError unless p is 0 or a prime below 2^31.
  explicit Characteristic(std::uint32_t p);

  constexpr std::uint32_t value() const { return p_; }
  constexpr bool is_zero() const { return p_ == 0; }

  friend constexpr bool operator==(Characteristic, Characteristic) = default;

 private:
  std::uint32_t p_ = 0;
};

/// Faces grouped by cardinality; by_size[r] holds the faces with r vertices,
/// each list sorted by bit pattern.
struct FaceLattice {
  std::vector<std::vector<VarSet>> by_size;
};

FaceLattice faces_of(const SimplicialComplex& complex);

/// Faces of the complex on `w` whose minimal non-faces are the given sets:
/// subsets of w containing none of them.
FaceLattice faces_avoiding(VarSet w, const std::vector<VarSet>& non_faces);

/// dims[q+1] = dim H̃_q for q = -1 .. top. Empty lattice (void complex) gives
/// an empty vector.
std::vector<std::size_t> reduced_homology_dims(const FaceLattice& faces, Characteristic field);

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, Characteristic field);

/// Rank of a sparse integer matrix given by columns of (row, value) pairs with
/// strictly increasing rows. Exact over Q (fraction-free elimination) or over
/// F_p.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;
std::size_t matrix_rank(std::vector<SparseColumn> columns, Characteristic field);

}  // namespace srtrunc
