#include "srtrunc/betti.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "srtrunc/errors.hpp"

namespace srtrunc {

namespace {

// Per-worker accumulator indexed by (i, j); counts fit comfortably in 64 bits
// for any sweep under the variable cap.
struct Tally {
  unsigned n;
  std::vector<std::uint64_t> counts;
  explicit Tally(unsigned n_) : n(n_), counts(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0) {}
  void add(unsigned i, unsigned j, std::uint64_t v) { counts[static_cast<std::size_t>(i) * (n + 1) + j] += v; }
};

void sweep_block(std::uint64_t begin, std::uint64_t end, const std::vector<VarSet>& gens, Characteristic field,
                 Tally& tally) {
  for (std::uint64_t bits = begin; bits < end; ++bits) {
    const VarSet w(bits);
    VarSet covered;
    for (VarSet g : gens)
      if (g.subset_of(w)) covered = covered | g;
    if (covered != w) continue;  // some vertex of W is an apex of Δ_W
    const std::vector<std::size_t> dims = reduced_homology_dims(faces_avoiding(w, gens), field);
    const unsigned size = static_cast<unsigned>(w.size());
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      if (dims[idx] == 0) continue;
      // idx = q + 1 and i = |W| - q - 1.
      tally.add(size - static_cast<unsigned>(idx), size, dims[idx]);
    }
  }
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal, Characteristic field, unsigned threads) {
  if (!ideal.is_squarefree()) throw InputError("Hochster's formula needs a squarefree ideal");
  if (ideal.is_unit()) throw InputError("the unit ideal has no Stanley-Reisner ring");
  const unsigned n = ideal.ambient();
  if (n > kMaxHochsterVariables)
    throw ResourceError("Hochster sweep over " + std::to_string(n) + " variables exceeds the cap of " +
                        std::to_string(kMaxHochsterVariables));
  const std::vector<VarSet> gens = ideal.supports();
  const std::uint64_t total = std::uint64_t{1} << n;
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(blocks, 256))));

  std::vector<Tally> tallies(threads, Tally(n));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](unsigned t) {
    for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;)
      sweep_block(b * kBlock, std::min(total, (b + 1) * kBlock), gens, field, tallies[t]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  BettiTable table(n, field);
  for (const Tally& tally : tallies)
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= n; ++j)
        if (std::uint64_t c = tally.counts[static_cast<std::size_t>(i) * (n + 1) + j])
          table.add(i, j, BigInt(static_cast<unsigned long>(c)));
  return table;
}

std::optional<unsigned> min_generator_degree(const BettiTable& table) {
  for (const auto& [key, v] : table.entries())
    if (key.first == 1) return key.second;  // map is ordered by (i, j)
  return std::nullopt;
}

BigInt truncation_alpha(const BettiTable& base, const FVector& fk, unsigned n, unsigned i, unsigned j) {
  const long s = static_cast<long>(i + j);
  BigInt alpha = 0;
  for (long r = 0; r <= s; ++r)
    alpha += sign_power(static_cast<long>(j) - r) * binomial(static_cast<long>(n) - r, s - r) * fk.face_count(r);
  for (unsigned l = 0; l < i; ++l)
    alpha += sign_power(static_cast<long>(l) - static_cast<long>(i) - 1) * base.at(l, static_cast<unsigned>(s));
  return alpha;
}

BettiTable closed_form_truncation_betti(const BettiTable& base, const FVector& fk, unsigned n, unsigned k) {
  const auto d = min_generator_degree(base);
  if (!d) throw InputError("closed form needs a nonzero ideal");
  if (k <= *d)
    throw InputError("closed form needs k > " + std::to_string(*d) + " (minimal generator degree), got k = " +
                     std::to_string(k));
  if (base.ambient() != n) throw InputError("Betti table ambient does not match n");

  const HilbertNumerator numerator = hilbert_numerator_from_fvector(fk, n);
  if (numerator.coefficient(0) != 1) throw InconsistencyError("f-vector numerator has constant term != 1");
  for (unsigned s = 1; s < k; ++s)
    if (sgn(numerator.coefficient(s)) != 0)
      throw InconsistencyError("f-vector of the truncation has a nonzero numerator coefficient in degree " +
                               std::to_string(s) + " below k");

  BettiTable result = BettiTable::of_ring(n, base.characteristic());
  for (const auto& [key, v] : base.entries())
    if (key.first >= 1 && key.second - key.first >= k) result.set(key.first, key.second, v);

  for (unsigned i = 1; i <= n; ++i) {
    const unsigned s = i + k - 1;
    BigInt rest = 0;
    for (unsigned l = 1; l < i; ++l) rest += sign_power(l) * base.at(l, s);
    const BigInt from_identity = sign_power(i) * (numerator.coefficient(s) - rest);
    const BigInt literal = truncation_alpha(base, fk, n, i, k - 1);
    if (from_identity != literal)
      throw InconsistencyError("closed-form alpha_{" + std::to_string(i) + "," + std::to_string(s) +
                               "} disagrees with the alternating-sum identity: " + literal.get_str() + " vs " +
                               from_identity.get_str());
    if (sgn(from_identity) < 0)
      throw InconsistencyError("alpha_{" + std::to_string(i) + "," + std::to_string(s) + "} = " +
                               from_identity.get_str() + " is negative; table and f-vector do not match");
    result.set(i, s, from_identity);
  }
  return result;
}

HilbertNumerator hilbert_numerator_from_fvector(const FVector& f, unsigned n) {
  HilbertNumerator h;
  h.n = n;
  h.coefficients.assign(n + 1, 0);
  for (long s = 0; s <= static_cast<long>(n); ++s)
    for (long r = 0; r <= s; ++r)
      h.coefficients[s] += sign_power(s - r) * binomial(static_cast<long>(n) - r, s - r) * f.face_count(r);
  h.trim();
  return h;
}

HilbertNumerator hilbert_numerator_from_betti(const BettiTable& table) {
  HilbertNumerator h;
  h.n = table.ambient();
  for (const auto& [key, v] : table.entries()) {
    const auto [i, j] = key;
    if (h.coefficients.size() <= j) h.coefficients.resize(j + 1, 0);
    h.coefficients[j] += sign_power(i) * v;
  }
  h.trim();
  return h;
}

BettiTable betti_geq_k(const BettiTable& base, const HilbertNumerator& truncated, unsigned k) {
  const unsigned n = base.ambient();
  if (truncated.n != n)
    throw InputError("numerator is over " + std::to_string(truncated.n) + " variables, table over " + std::to_string(n));
  if (truncated.coefficient(0) != 1) throw InconsistencyError("numerator of R/I_{>=k} must have constant term 1");

  const auto d = min_generator_degree(base);
  if (!d) {
    // Zero ideal: the truncation is zero as well.
    if (truncated.coefficients.size() > 1) throw InconsistencyError("zero ideal with a nontrivial numerator");
    return BettiTable::of_ring(n, base.characteristic());
  }
  if (k < *d)
    throw InputError("k = " + std::to_string(k) + " is below the minimal generator degree " + std::to_string(*d));

  for (unsigned s = 1; s < k; ++s)
    if (sgn(truncated.coefficient(s)) != 0)
      throw InconsistencyError("numerator coefficient of t^" + std::to_string(s) + " must vanish below degree k");

  BettiTable result = BettiTable::of_ring(n, base.characteristic());
  unsigned top = static_cast<unsigned>(truncated.coefficients.size());
  for (const auto& [key, v] : base.entries()) {
    top = std::max(top, key.second + 1);
    if (key.first >= 1 && key.second - key.first >= k) result.set(key.first, key.second, v);
  }
  for (unsigned s = k; s < top; ++s) {
    const unsigned i = s - k + 1;
    BigInt rest = 0;
    for (unsigned l = 1; l < i; ++l) rest += sign_power(l) * base.at(l, s);
    const BigInt value = sign_power(i) * (truncated.coefficient(s) - rest);
    if (sgn(value) == 0) continue;
    if (i > n || sgn(value) < 0)
      throw InconsistencyError("recovered beta_{" + std::to_string(i) + "," + std::to_string(s) + "} = " +
                               value.get_str() + " is impossible; table and numerator do not match");
    result.set(i, s, value);
  }
  return result;
}

}  // namespace srtrunc
