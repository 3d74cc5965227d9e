#include "srtrunc/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "srtrunc/errors.hpp"

namespace srtrunc {

Characteristic::Characteristic(std::uint32_t p) : p_(p) {
  if (p == 0) return;
  bool prime = p >= 2 && p < (1U << 31);
  for (std::uint32_t d = 2; prime && static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw InputError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
}

FaceLattice faces_of(const SimplicialComplex& complex) {
  FaceLattice out;
  if (complex.is_void()) return out;
  std::unordered_set<std::uint64_t> seen;
  out.by_size.resize(complex.dimension() + 2);
  for (VarSet facet : complex.facets()) {
    const std::uint64_t full = facet.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      if (seen.insert(sub).second) out.by_size[VarSet(sub).size()].push_back(VarSet(sub));
      if (sub == 0) break;
    }
  }
  for (auto& level : out.by_size)
    std::sort(level.begin(), level.end(), [](VarSet a, VarSet b) { return a.bits() < b.bits(); });
  return out;
}

FaceLattice faces_avoiding(VarSet w, const std::vector<VarSet>& non_faces) {
  FaceLattice out;
  std::vector<VarSet> relevant;
  for (VarSet g : non_faces) {
    if (g.empty()) return out;  // unit ideal: void complex
    if (g.subset_of(w)) relevant.push_back(g);
  }
  const std::vector<unsigned> verts = w.members();
  // blockers[v]: relevant non-faces containing v.
  std::vector<std::vector<VarSet>> blockers(64);
  for (VarSet g : relevant)
    for (unsigned v : g.members()) blockers[v].push_back(g);

  out.by_size.resize(verts.size() + 1);
  auto dfs = [&](auto&& self, VarSet face, std::size_t next) -> void {
    out.by_size[face.size()].push_back(face);
    for (std::size_t i = next; i < verts.size(); ++i) {
      const unsigned v = verts[i];
      const VarSet grown = face.with(v);
      bool blocked = std::any_of(blockers[v].begin(), blockers[v].end(), [&](VarSet g) { return g.subset_of(grown); });
      if (!blocked) self(self, grown, i + 1);
    }
  };
  dfs(dfs, VarSet{}, 0);
  while (!out.by_size.empty() && out.by_size.back().empty()) out.by_size.pop_back();
  for (auto& level : out.by_size)
    std::sort(level.begin(), level.end(), [](VarSet a, VarSet b) { return a.bits() < b.bits(); });
  return out;
}

namespace {

struct Overflow {};

// Coefficient policies for the column reduction. Each provides a value type,
// the elimination step "c <- x*c - y*p", and a content normalization.

struct ModPrime {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(Value v) const { return v == 0; }
  Value inverse(Value a) const {
    // Fermat; p is prime.
    Value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  // Pivot columns are scaled to a unit leading coefficient.
  void prepare_pivot(std::vector<std::pair<std::uint32_t, Value>>& col) const {
    const Value inv = inverse(col.back().second);
    for (auto& e : col) e.second = e.second * inv % p;
  }
  // c <- c - c_low * pivot
  void eliminate(std::vector<std::pair<std::uint32_t, Value>>& c,
                 const std::vector<std::pair<std::uint32_t, Value>>& pivot,
                 std::vector<std::pair<std::uint32_t, Value>>& scratch) const {
    const Value factor = p - c.back().second;
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < c.size() && c[i].first < pivot[j].first)) {
        scratch.push_back(c[i++]);
      } else if (i == c.size() || pivot[j].first < c[i].first) {
        scratch.emplace_back(pivot[j].first, pivot[j].second * factor % p);
        ++j;
      } else {
        Value v = (c[i].second + pivot[j].second * factor) % p;
        if (v) scratch.emplace_back(c[i].first, v);
        ++i, ++j;
      }
    }
    c.swap(scratch);
  }
  void normalize(std::vector<std::pair<std::uint32_t, Value>>&) const {}
};

struct CheckedInt64 {
  using Value = std::int64_t;

  Value from(std::int64_t v) const { return v; }
  bool is_zero(Value v) const { return v == 0; }
  static Value mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value gcd(Value a, Value b) { return std::gcd(a, b); }
  static Value exact_div(Value a, Value b) { return a / b; }
};

struct BigIntegers {
  using Value = BigInt;

  Value from(std::int64_t v) const { return Value(static_cast<long>(v)); }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value gcd(const Value& a, const Value& b) {
    Value r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Value exact_div(const Value& a, const Value& b) {
    Value r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
};

// Fraction-free elimination over Z: c <- (a/g) c - (b/g) pivot, then divide
// out the content. Rank over Q is unchanged since a != 0.
template <typename Ops>
struct FractionFree : Ops {
  using Value = typename Ops::Value;
  using Column = std::vector<std::pair<std::uint32_t, Value>>;

  void prepare_pivot(Column&) const {}

  void eliminate(Column& c, const Column& pivot, Column& scratch) const {
    const Value& a = pivot.back().second;
    const Value& b = c.back().second;
    const Value g = Ops::gcd(a, b);
    const Value ca = Ops::exact_div(a, g);
    const Value cb = Ops::exact_div(b, g);
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < c.size() && c[i].first < pivot[j].first)) {
        scratch.emplace_back(c[i].first, Ops::mul(ca, c[i].second));
        ++i;
      } else if (i == c.size() || pivot[j].first < c[i].first) {
        scratch.emplace_back(pivot[j].first, Ops::sub(Value(0), Ops::mul(cb, pivot[j].second)));
        ++j;
      } else {
        Value v = Ops::sub(Ops::mul(ca, c[i].second), Ops::mul(cb, pivot[j].second));
        if (!this->is_zero(v)) scratch.emplace_back(c[i].first, std::move(v));
        ++i, ++j;
      }
    }
    c.swap(scratch);
  }

  void normalize(Column& c) const {
    if (c.empty()) return;
    Value g = c.front().second;
    for (const auto& e : c) g = Ops::gcd(g, e.second);
    if (g < 0) g = Ops::sub(Value(0), g);
    if (g == 1) return;
    for (auto& e : c) e.second = Ops::exact_div(e.second, g);
  }
};

struct ReductionResult {
  std::size_t rank = 0;
  std::vector<bool> pivot_rows;
};

// Left-to-right column reduction keyed on the lowest (largest) row index.
template <typename Ring>
ReductionResult reduce(const std::vector<SparseColumn>& input, std::size_t row_count, const std::vector<bool>& skip,
                       const Ring& ring) {
  using Column = typename Ring::Column;
  ReductionResult result;
  result.pivot_rows.assign(row_count, false);
  std::vector<Column> reduced;
  reduced.reserve(input.size());
  std::vector<std::int64_t> pivot_of(row_count, -1);
  Column scratch;
  for (std::size_t j = 0; j < input.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    Column c;
    c.reserve(input[j].size());
    for (const auto& [row, v] : input[j]) {
      auto value = ring.from(v);
      if (!ring.is_zero(value)) c.emplace_back(row, std::move(value));
    }
    while (!c.empty()) {
      const std::int64_t p = pivot_of[c.back().first];
      if (p < 0) break;
      ring.eliminate(c, reduced[static_cast<std::size_t>(p)], scratch);
      ring.normalize(c);
    }
    if (c.empty()) continue;
    ring.prepare_pivot(c);
    pivot_of[c.back().first] = static_cast<std::int64_t>(reduced.size());
    result.pivot_rows[c.back().first] = true;
    reduced.push_back(std::move(c));
    ++result.rank;
  }
  return result;
}

struct ModRing : ModPrime {
  using Column = std::vector<std::pair<std::uint32_t, Value>>;
};

ReductionResult reduce_in(const std::vector<SparseColumn>& columns, std::size_t row_count,
                          const std::vector<bool>& skip, Characteristic field) {
  if (!field.is_zero()) {
    ModRing ring{ModPrime{field.value()}};
    return reduce(columns, row_count, skip, ring);
  }
  try {
    return reduce(columns, row_count, skip, FractionFree<CheckedInt64>{});
  } catch (const Overflow&) {
    return reduce(columns, row_count, skip, FractionFree<BigIntegers>{});
  }
}

std::size_t index_of(const std::vector<VarSet>& level, VarSet face) {
  auto it = std::lower_bound(level.begin(), level.end(), face, [](VarSet a, VarSet b) { return a.bits() < b.bits(); });
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<SparseColumn> boundary_columns(const std::vector<VarSet>& faces, const std::vector<VarSet>& facets_below) {
  std::vector<SparseColumn> cols;
  cols.reserve(faces.size());
  for (VarSet f : faces) {
    SparseColumn col;
    int position = 0;
    for (unsigned v : f.members()) {
      col.emplace_back(static_cast<std::uint32_t>(index_of(facets_below, f.without(v))), sign_power(position));
      ++position;
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseColumn> columns, Characteristic field) {
  std::size_t rows = 0;
  for (auto& c : columns) {
    std::sort(c.begin(), c.end());
    if (!c.empty()) rows = std::max<std::size_t>(rows, c.back().first + 1);
  }
  return reduce_in(columns, rows, {}, field).rank;
}

std::vector<std::size_t> reduced_homology_dims(const FaceLattice& faces, Characteristic field) {
  const auto& levels = faces.by_size;
  if (levels.empty() || levels[0].empty()) return {};
  const std::size_t top = levels.size() - 1;  // largest face cardinality
  // rank[r]: rank of the boundary from cardinality r to r-1.
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<bool> cleared;
  for (std::size_t r = top; r >= 1; --r) {
    const auto cols = boundary_columns(levels[r], levels[r - 1]);
    ReductionResult red = reduce_in(cols, levels[r - 1].size(), cleared, field);
    rank[r] = red.rank;
    // A pivot row of this boundary is a face whose own boundary column is
    // dependent on earlier ones; it can be skipped one level down.
    cleared = std::move(red.pivot_rows);
  }
  std::vector<std::size_t> dims(top + 1, 0);
  for (std::size_t r = 0; r <= top; ++r) dims[r] = levels[r].size() - rank[r] - rank[r + 1];
  return dims;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, Characteristic field) {
  return reduced_homology_dims(faces_of(complex), field);
}

}  // namespace srtrunc
