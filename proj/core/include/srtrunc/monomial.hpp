#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "srtrunc/varset.hpp"

namespace srtrunc {

using Exponent = std::uint32_t;

/// Monomial x_1^{a_1} ... x_n^{a_n} over an explicit ambient variable count n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(unsigned n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  /// Squarefree monomial with the given support.
  static Monomial from_support(unsigned n, VarSet support);
  /// x_{var+1}^{power}, zero-based var.
  static Monomial variable(unsigned n, unsigned var, Exponent power = 1);

  unsigned ambient() const { return static_cast<unsigned>(exps_.size()); }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent operator[](unsigned var) const { return exps_[var]; }

  unsigned degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  VarSet support() const;

  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, other).
  Monomial colon(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Canonical order: degree, then the monomial with the larger exponent at the
/// first differing variable comes first (x1x2 < x1x3 < x2x3).
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// "x1*x2^3*x5", or "1" for the unit monomial.
std::string to_string(const Monomial& m);

/// Calls fn(m) for every monomial of the given degree in n variables.
template <typename Fn>
void for_each_monomial_of_degree(unsigned n, unsigned degree, Fn&& fn) {
  if (n == 0) {
    if (degree == 0) fn(Monomial(0));
    return;
  }
  std::vector<Exponent> e(n, 0);
  // Enumerate compositions of `degree` into n parts.
  auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      fn(Monomial(e));
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, degree);
}

}  // namespace srtrunc
