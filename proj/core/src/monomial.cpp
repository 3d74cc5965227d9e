#include "srtrunc/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "srtrunc/bigint.hpp"
#include "srtrunc/errors.hpp"

namespace srtrunc {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_string(VarSet s) {
  std::string out = "{";
  bool first = true;
  for (unsigned v : s.members()) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  if (exps_.size() > kMaxVariables) throw InputError("monomial exceeds " + std::to_string(kMaxVariables) + " variables");
}

Monomial Monomial::from_support(unsigned n, VarSet support) {
  Monomial m(n);
  for (unsigned v : support.members()) {
    if (v >= n) throw InputError("variable index outside ambient ring");
    m.exps_[v] = 1;
  }
  return m;
}

Monomial Monomial::variable(unsigned n, unsigned var, Exponent power) {
  Monomial m(n);
  m.exps_.at(var) = power;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

VarSet Monomial::support() const {
  VarSet s;
  for (unsigned v = 0; v < exps_.size(); ++v)
    if (exps_[v] > 0) s = s.with(v);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (unsigned v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (unsigned v = 0; v < exps_.size(); ++v) r.exps_[v] += other.exps_[v];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (unsigned v = 0; v < exps_.size(); ++v) r.exps_[v] = std::max(exps_[v], other.exps_[v]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r = *this;
  for (unsigned v = 0; v < exps_.size(); ++v) r.exps_[v] = std::min(exps_[v], other.exps_[v]);
  return r;
}

Monomial Monomial::colon(const Monomial& other) const {
  Monomial r = *this;
  for (unsigned v = 0; v < exps_.size(); ++v) r.exps_[v] -= std::min(exps_[v], other.exps_[v]);
  return r;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto ea = a.exponents(), eb = b.exponents();
  for (std::size_t v = 0; v < ea.size() && v < eb.size(); ++v)
    if (ea[v] != eb[v]) return ea[v] > eb[v];
  return ea.size() < eb.size();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
  return h;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (unsigned v = 0; v < m.ambient(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace srtrunc
