#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srtrunc/bigint.hpp"
#include "srtrunc/complex.hpp"
#include "srtrunc/homology.hpp"

namespace srtrunc {

/// Graded Betti numbers β_{i,j}(R/I) over a field of given characteristic,
/// stored sparsely. Only positive entries are kept.
class BettiTable {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (i, j)

  BettiTable(unsigned n, Characteristic field) : n_(n), field_(field) {}

  /// Table of R itself: β_{0,0} = 1 and nothing else.
  static BettiTable of_ring(unsigned n, Characteristic field);

  unsigned ambient() const { return n_; }
  Characteristic characteristic() const { return field_; }
  const std::map<Key, BigInt>& entries() const { return entries_; }

  BigInt at(unsigned i, unsigned j) const;
  /// Stores v at (i, j); zero erases. Throws InconsistencyError for negative
  /// values, j < i, or i > n.
  void set(unsigned i, unsigned j, const BigInt& v);
  void add(unsigned i, unsigned j, const BigInt& v);
  void merge(const BettiTable& other);

  /// Re-labels the ambient ring; Betti numbers do not depend on extra variables.
  void set_ambient(unsigned n);

  /// Largest i with a nonzero entry.
  unsigned projective_dimension() const;
  /// Largest j - i over entries with i >= 1, if any.
  std::optional<unsigned> max_row() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  unsigned n_;
  Characteristic field_;
  std::map<Key, BigInt> entries_;
};

/// Macaulay2-style grid: columns i, rows j - i, zeros printed as '.'.
std::string format_betti_text(const BettiTable& table);
/// {"char": c, "n": n, "entries": [[i, j, value], ...]}
std::string betti_to_json(const BettiTable& table);
BettiTable betti_from_json(std::string_view json);

/// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n.
struct HilbertNumerator {
  unsigned n = 0;
  std::vector<BigInt> coefficients;  // coefficients[s] = coefficient of t^s

  BigInt coefficient(unsigned s) const { return s < coefficients.size() ? coefficients[s] : BigInt(0); }
  /// Drops trailing zero coefficients.
  void trim();

  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

/// "1 - 736t^5 + 4200t^6 ..."
std::string to_string(const HilbertNumerator& h);
/// {"n": n, "coefficients": [c0, c1, ...]}
std::string numerator_to_json(const HilbertNumerator& h);
HilbertNumerator numerator_from_json(std::string_view json);

/// {"f": [f_{-1}, f_0, ...]}
std::string fvector_to_json(const FVector& f);

}  // namespace srtrunc
