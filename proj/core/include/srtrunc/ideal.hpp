#pragma once

#include <optional>
#include <vector>

#include "srtrunc/monomial.hpp"
#include "srtrunc/varset.hpp"

namespace srtrunc {

/// Monomial ideal stored by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// Zero ideal of K[x_1..x_n].
  explicit MonomialIdeal(unsigned n = 0);

  /// Divisibility-reduces and deduplicates; throws InputError on mixed ambients.
  static MonomialIdeal normalize(unsigned n, std::vector<Monomial> gens);
  static MonomialIdeal from_supports(unsigned n, const std::vector<VarSet>& supports);
  static MonomialIdeal unit(unsigned n);

  unsigned ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  /// Smallest generator degree; nullopt for the zero ideal.
  std::optional<unsigned> min_degree() const;
  std::optional<unsigned> max_degree() const;

  bool contains(const Monomial& m) const;

  /// Generator supports; meaningful for squarefree ideals.
  std::vector<VarSet> supports() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Monomial> gens_;
};

/// Support of a monomial.
inline VarSet support(const Monomial& m) { return m.support(); }

/// Ideal generated by the degree-j monomials lying in I.
MonomialIdeal degree_slice(const MonomialIdeal& ideal, unsigned j);

/// Ideal generated by the squarefree degree-j monomials lying in I.
MonomialIdeal squarefree_slice(const MonomialIdeal& ideal, unsigned j);

/// Calls fn(S) for every subset S of `pool` with |S| = size.
template <typename Fn>
void for_each_subset_of_size(VarSet pool, unsigned size, Fn&& fn) {
  const std::vector<unsigned> members = pool.members();
  if (size > members.size()) return;
  std::vector<unsigned> idx(size);
  for (unsigned i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VarSet s;
    for (unsigned i : idx) s = s.with(members[i]);
    fn(s);
    int pos = static_cast<int>(size) - 1;
    while (pos >= 0 && idx[pos] == members.size() - size + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (unsigned i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace srtrunc
