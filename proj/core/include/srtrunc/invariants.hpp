#pragma once

#include <optional>
#include <string>

#include "srtrunc/betti_table.hpp"
#include "srtrunc/homology.hpp"
#include "srtrunc/ideal.hpp"
#include "srtrunc/polarization.hpp"

namespace srtrunc {

/// reg(I) = max{j - i : β_{i,j}(R/I) > 0, i >= 1} + 1, and reg(R/I) = reg(I) - 1.
/// For the zero ideal both are reported as 0 and `zero_ideal` is set.
struct Regularity {
  unsigned ideal = 0;
  unsigned quotient = 0;
  bool zero_ideal = false;
};

Regularity regularity(const BettiTable& table);

/// Every entry with i >= 1 sits on j = k + i - 1.
bool has_linear_resolution(const BettiTable& table, unsigned k);

/// k-index: the largest p such that R/I satisfies N_{k,p}.
class KIndex {
 public:
  static KIndex finite(unsigned p) { return KIndex(p); }
  static KIndex infinity() { return KIndex(); }

  bool is_infinite() const { return !value_; }
  unsigned value() const { return *value_; }

  friend bool operator==(const KIndex&, const KIndex&) = default;
  /// Total order with infinity on top.
  friend bool operator<=(const KIndex& a, const KIndex& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return a.value() <= b.value();
  }

 private:
  KIndex() = default;
  explicit KIndex(unsigned p) : value_(p) {}
  std::optional<unsigned> value_;
};

std::string to_string(const KIndex& index);

/// 0 when some generator degree differs from k; otherwise the number of
/// leading homological steps that are linear, infinity when all are. The zero
/// ideal is vacuously linear.
KIndex k_index(const BettiTable& table, unsigned k);

/// reg of a truncation at k of an ideal with regularity d: max(d, k).
unsigned reg_of_truncation(unsigned d, unsigned k);

/// Smallest d at or above the minimal generator degree with I_d linear,
/// scanned with the Hochster oracle and checked against reg(I). Returns 0 for
/// the zero ideal.
unsigned min_linear_truncation(const MonomialIdeal& ideal, Characteristic field, unsigned threads = 1);

struct ComponentwiseResult {
  bool linear = true;
  /// First degree whose slice fails to have a linear resolution.
  std::optional<unsigned> failing_degree;
};

/// Checks the slices I_{<j>} for j from the minimal generator degree through
/// reg(I); past reg(I) every slice is linear, a standard fact this scan relies on.
ComponentwiseResult is_componentwise_linear(const MonomialIdeal& ideal, Characteristic field,
                                            unsigned max_target_variables = kDefaultMaxPolarizedVariables,
                                            unsigned threads = 1);

/// Squarefree variant for a squarefree ideal: the slices I_{[j]} for every j
/// from the minimal generator degree through n.
ComponentwiseResult is_squarefree_componentwise_linear(const MonomialIdeal& ideal, Characteristic field,
                                                       unsigned threads = 1);

}  // namespace srtrunc
