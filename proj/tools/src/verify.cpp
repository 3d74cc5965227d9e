#include "srtrunc_cli/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <random>
#include <sstream>

#include <srtrunc/srtrunc.hpp>

#include "srtrunc_cli/random_ideal.hpp"

namespace srtrunc::cli {

namespace {

constexpr const char* kClosedForm = "closed-form-vs-oracle";
constexpr const char* kFacets = "facet-recurrence";
constexpr const char* kFVector = "f-vector-recurrence";
constexpr const char* kAlternating = "alternating-sum";
constexpr const char* kLinearReg = "linear-iff-reg";
constexpr const char* kRegTruncation = "reg-of-truncation";
constexpr const char* kIndexMonotone = "index-monotone";
constexpr const char* kGeqFromHilbert = "geq-from-hilbert";

class Recorder {
 public:
  Recorder() {
    for (const char* name :
         {kClosedForm, kFacets, kFVector, kAlternating, kLinearReg, kRegTruncation, kIndexMonotone, kGeqFromHilbert})
    {
      PropertyTally t;
      t.name = name;
      tallies_.push_back(std::move(t));
    }
  }

  void check(const char* name, bool ok, const std::string& context) {
    PropertyTally& t = find(name);
    ++t.checked;
    if (ok)
      ++t.passed;
    else if (t.first_failure.empty())
      t.first_failure = context;
  }
  void skip(const char* name) { ++find(name).skipped; }

  std::vector<PropertyTally> release() { return std::move(tallies_); }

 private:
  PropertyTally& find(const char* name) {
    return *std::find_if(tallies_.begin(), tallies_.end(), [&](const PropertyTally& t) { return t.name == name; });
  }
  std::vector<PropertyTally> tallies_;
};

std::string describe(const MonomialIdeal& ideal, unsigned k) {
  std::string s = "k=" + std::to_string(k) + " I=(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    s += (i ? "," : "") + to_string(ideal.generators()[i]);
  return s + ")";
}

// Runs `body`; an exception counts as a failed check of `name`.
template <typename Fn>
void guarded(Recorder& rec, const char* name, const std::string& context, Fn&& body) {
  try {
    rec.check(name, body(), context);
  } catch (const std::exception& e) {
    rec.check(name, false, context + ": " + e.what());
  }
}

void check_squarefree(const MonomialIdeal& ideal, const VerifyOptions& opt, Recorder& rec) {
  const unsigned n = ideal.ambient();
  const unsigned d = *ideal.min_degree();
  const BettiTable base = hochster_betti(ideal, opt.field, opt.threads);
  const SimplicialComplex delta = stanley_reisner(ideal);
  const FVector f = f_vector(delta);
  const Regularity reg = regularity(base);

  guarded(rec, kAlternating, describe(ideal, 0),
          [&] { return hilbert_numerator_from_fvector(f, n) == hilbert_numerator_from_betti(base); });

  auto check_linear_iff_reg = [&](const BettiTable& table, const MonomialIdeal& id, unsigned tag) {
    const unsigned min_deg = *id.min_degree();
    const Regularity r = regularity(table);
    for (unsigned k = 1; k <= min_deg; ++k)
      guarded(rec, kLinearReg, describe(ideal, tag),
              [&] { return has_linear_resolution(table, k) == (r.ideal == k); });
  };
  check_linear_iff_reg(base, ideal, d);

  for (unsigned k = d; k < n; ++k) {
    const MonomialIdeal next = squarefree_truncate(ideal, k + 1);
    const SimplicialComplex next_delta = stanley_reisner(next);
    guarded(rec, kFacets, describe(ideal, k), [&] {
      return facets_after_truncation(ideal, k) == next_delta.facets() &&
             iterate_facet_recurrence(ideal, k + 1) == next_delta;
    });
    guarded(rec, kFVector, describe(ideal, k),
            [&] { return f_vector_truncated(f, n, k) == f_vector(next_delta); });
  }

  for (unsigned k = d + 1; k <= n; ++k) {
    const MonomialIdeal ik = squarefree_truncate(ideal, k);
    const BettiTable oracle = hochster_betti(ik, opt.field, opt.threads);
    guarded(rec, kClosedForm, describe(ideal, k), [&] {
      const FVector fk = f_vector_truncated(f, n, k - 1);
      return closed_form_truncation_betti(base, fk, n, k) == oracle;
    });
    guarded(rec, kAlternating, describe(ideal, k), [&] {
      return hilbert_numerator_from_fvector(f_vector(stanley_reisner(ik)), n) == hilbert_numerator_from_betti(oracle);
    });
    guarded(rec, kRegTruncation, describe(ideal, k),
            [&] { return regularity(oracle).ideal == reg_of_truncation(reg.ideal, k); });
    check_linear_iff_reg(oracle, ik, k);
  }
}

void check_monomial(const MonomialIdeal& ideal, const VerifyOptions& opt, Recorder& rec) {
  const unsigned d = *ideal.min_degree();
  const auto fits = [&](const MonomialIdeal& id) { return polarize(id).target_n() <= opt.max_polarized; };
  if (!fits(ideal)) {
    rec.skip(kIndexMonotone);
    rec.skip(kGeqFromHilbert);
    return;
  }
  const BettiTable base = betti_monomial(ideal, opt.field, opt.max_polarized, opt.threads);
  const unsigned last = std::max(d, regularity(base).ideal) + 1;

  KIndex previous = KIndex::infinity();
  bool have_previous = false;
  for (unsigned k = d; k <= last; ++k) {
    const MonomialIdeal truncated = truncate_geq(ideal, k);
    if (!fits(truncated)) {
      rec.skip(kIndexMonotone);
      rec.skip(kGeqFromHilbert);
      have_previous = false;
      continue;
    }
    const BettiTable oracle = betti_monomial(truncated, opt.field, opt.max_polarized, opt.threads);
    guarded(rec, kGeqFromHilbert, describe(ideal, k),
            [&] { return betti_geq_k(base, hilbert_numerator_monomial(truncated), k) == oracle; });
    const KIndex index = k_index(oracle, k);
    if (have_previous) guarded(rec, kIndexMonotone, describe(ideal, k), [&] { return previous <= index; });
    previous = index;
    have_previous = true;
  }
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& t) { return t.ok(); });
}

const PropertyTally& VerifyReport::property(const std::string& name) const {
  auto it = std::find_if(properties.begin(), properties.end(), [&](const PropertyTally& t) { return t.name == name; });
  if (it == properties.end()) throw InputError("no property named " + name);
  return *it;
}

VerifyReport verify_sweep(const VerifyOptions& options) {
  if (options.n < 2 || options.n > options.max_n)
    throw ResourceError("verify needs 2 <= n <= " + std::to_string(options.max_n) + ", got " + std::to_string(options.n));
  if (options.min_generators == 0 || options.min_generators > options.max_generators)
    throw InputError("generator count range is empty");
  std::mt19937_64 rng(options.seed);
  SquarefreeShape sq{options.n, options.min_generators, options.max_generators, options.min_degree,
                     options.max_degree == 0 ? std::max(2U, options.n - 1) : options.max_degree};
  MonomialShape mono{std::min(options.n, 3U), 2, 1, 4};
  Recorder rec;
  for (unsigned t = 0; t < options.trials; ++t) {
    const MonomialIdeal ideal = random_squarefree_ideal(rng, sq);
    check_squarefree(ideal, options, rec);
    const MonomialIdeal monomial = random_monomial_ideal(rng, mono);
    check_monomial(monomial, options, rec);
  }
  return VerifyReport{options, rec.release()};
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  const VerifyOptions& o = report.options;
  out << "verify n=" << o.n << " trials=" << o.trials << " seed=" << o.seed << " char=" << o.field.value() << '\n';
  for (const PropertyTally& t : report.properties) {
    out << "  " << t.name << std::string(t.name.size() < 24 ? 24 - t.name.size() : 1, ' ') << "checked=" << t.checked
        << " passed=" << t.passed;
    if (t.skipped) out << " skipped=" << t.skipped;
    out << (t.ok() ? "" : "  FAIL") << '\n';
    if (!t.first_failure.empty()) out << "    first failure: " << t.first_failure << '\n';
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyTally& t : report.properties)
    props.push_back({{"name", t.name},
                     {"checked", t.checked},
                     {"passed", t.passed},
                     {"skipped", t.skipped},
                     {"first_failure", t.first_failure}});
  const VerifyOptions& o = report.options;
  nlohmann::json doc{{"n", o.n},          {"trials", o.trials}, {"seed", o.seed},
                     {"char", o.field.value()}, {"ok", report.ok()}, {"properties", std::move(props)}};
  return doc.dump();
}

}  // namespace srtrunc::cli
