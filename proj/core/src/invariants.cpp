#include "srtrunc/invariants.hpp"

#include "srtrunc/betti.hpp"
#include "srtrunc/errors.hpp"
#include "srtrunc/truncation.hpp"

namespace srtrunc {

Regularity regularity(const BettiTable& table) {
  const auto row = table.max_row();
  if (!row) return Regularity{0, 0, true};
  return Regularity{*row + 1, *row, false};
}

bool has_linear_resolution(const BettiTable& table, unsigned k) {
  for (const auto& [key, v] : table.entries())
    if (key.first >= 1 && key.second != k + key.first - 1) return false;
  return true;
}

std::string to_string(const KIndex& index) {
  return index.is_infinite() ? "inf" : std::to_string(index.value());
}

KIndex k_index(const BettiTable& table, unsigned k) {
  for (const auto& [key, v] : table.entries())
    if (key.first == 1 && key.second != k) return KIndex::finite(0);
  // Smallest homological degree with an entry off the k-linear diagonal.
  std::optional<unsigned> first_bad;
  for (const auto& [key, v] : table.entries())
    if (key.first >= 1 && key.second != k + key.first - 1)
      if (!first_bad || key.first < *first_bad) first_bad = key.first;
  if (!first_bad) return KIndex::infinity();
  return KIndex::finite(*first_bad - 1);
}

unsigned reg_of_truncation(unsigned d, unsigned k) { return d >= k ? d : k; }

unsigned min_linear_truncation(const MonomialIdeal& ideal, Characteristic field, unsigned threads) {
  if (!ideal.is_squarefree()) throw InputError("linear truncation scan needs a squarefree ideal");
  const auto start = ideal.min_degree();
  if (!start) return 0;
  const Regularity reg = regularity(hochster_betti(ideal, field, threads));
  for (unsigned d = *start;; ++d) {
    const MonomialIdeal id = squarefree_truncate(ideal, d);
    if (has_linear_resolution(hochster_betti(id, field, threads), d)) {
      if (d != reg.ideal)
        throw InconsistencyError("smallest linear truncation " + std::to_string(d) + " differs from reg(I) = " +
                                 std::to_string(reg.ideal));
      return d;
    }
    if (d > ideal.ambient())
      throw InconsistencyError("no linear squarefree truncation found up to the ambient size");
  }
}

ComponentwiseResult is_componentwise_linear(const MonomialIdeal& ideal, Characteristic field,
                                            unsigned max_target_variables, unsigned threads) {
  const auto start = ideal.min_degree();
  if (!start) return {};
  const Regularity reg = regularity(betti_monomial(ideal, field, max_target_variables, threads));
  for (unsigned j = *start; j <= reg.ideal; ++j) {
    const MonomialIdeal slice = degree_slice(ideal, j);
    if (!has_linear_resolution(betti_monomial(slice, field, max_target_variables, threads), j))
      return ComponentwiseResult{false, j};
  }
  return {};
}

ComponentwiseResult is_squarefree_componentwise_linear(const MonomialIdeal& ideal, Characteristic field,
                                                       unsigned threads) {
  if (!ideal.is_squarefree()) throw InputError("squarefree componentwise check needs a squarefree ideal");
  const auto start = ideal.min_degree();
  if (!start) return {};
  for (unsigned j = *start; j <= ideal.ambient(); ++j) {
    const MonomialIdeal slice = squarefree_slice(ideal, j);
    if (!has_linear_resolution(hochster_betti(slice, field, threads), j)) return ComponentwiseResult{false, j};
  }
  return {};
}

}  // namespace srtrunc
