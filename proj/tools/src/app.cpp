#include "srtrunc_cli/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include <srtrunc/srtrunc.hpp>

#include "srtrunc_cli/verify.hpp"

namespace srtrunc::cli {

namespace {

unsigned env_bound(const char* name, unsigned fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InputError(std::string("bad value for ") + name + ": '" + raw + "'");
  return static_cast<unsigned>(v);
}

struct Limits {
  unsigned max_polarized;
  unsigned max_ie_generators;
  unsigned max_verify_n;

  static Limits from_env() {
    return Limits{env_bound("SRTRUNC_MAX_POLARIZED_VARS", kDefaultMaxPolarizedVariables),
                  env_bound("SRTRUNC_MAX_IE_GENERATORS", static_cast<unsigned>(kDefaultInclusionExclusionBound)),
                  env_bound("SRTRUNC_MAX_VERIFY_N", 14)};
  }
};

struct Common {
  std::string file;
  std::uint32_t characteristic = 0;
  unsigned threads = 1;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_file = true) {
  if (with_file) cmd->add_option("file", c.file, "Ideal file (n=<int> header, one monomial per line)")->required();
  cmd->add_option("--char", c.characteristic, "Field characteristic: 0 or a prime")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads for the Hochster sweep")->capture_default_str();
  cmd->add_flag("--json", c.json, "Emit JSON");
}

void require_squarefree(const MonomialIdeal& ideal, const std::string& what) {
  if (!ideal.is_squarefree()) throw InputError(what + " needs a squarefree ideal");
}

unsigned require_k(const std::optional<unsigned>& k, const std::string& command) {
  if (!k) throw InputError(command + ": --k is required");
  return *k;
}

// Betti table of R/I for any monomial ideal: Hochster directly when squarefree,
// through the polarization otherwise.
BettiTable betti_of(const MonomialIdeal& ideal, const Common& c, const Limits& limits) {
  const Characteristic field(c.characteristic);
  if (ideal.is_squarefree()) return hochster_betti(ideal, field, c.threads);
  return betti_monomial(ideal, field, limits.max_polarized, c.threads);
}

void emit_betti(std::ostream& out, const BettiTable& table, bool json) {
  if (json)
    out << betti_to_json(table) << '\n';
  else
    out << "char " << table.characteristic().value() << '\n' << format_betti_text(table);
}

void emit_ideal(std::ostream& out, const MonomialIdeal& ideal, bool json) {
  if (!json) {
    out << format_ideal(ideal);
    return;
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(to_string(g));
  out << nlohmann::json{{"n", ideal.ambient()}, {"zero", ideal.is_zero()}, {"generators", gens}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers, f-vectors and regularity of monomial ideals and their truncations", "srtrunc"};
  app.require_subcommand(1);

  Common common;
  std::optional<unsigned> k;

  std::string betti_method = "oracle";
  auto* betti = app.add_subcommand("betti", "Graded Betti table of R/I, R/I_k or R/I_{>=k}");
  add_common(betti, common);
  betti->add_option("--method", betti_method, "oracle | closed-form | geq")
      ->check(CLI::IsMember({"oracle", "closed-form", "geq"}))
      ->capture_default_str();
  betti->add_option("--k", k, "Truncation degree (closed-form, geq)");

  std::string truncate_mode;
  auto* truncate = app.add_subcommand("truncate", "Print I_k (sqfree) or I ∩ M^k (geq)");
  add_common(truncate, common);
  truncate->add_option("--mode", truncate_mode, "sqfree | geq")->required()->check(CLI::IsMember({"sqfree", "geq"}));
  truncate->add_option("--k", k, "Truncation degree")->required();

  auto* fvector = app.add_subcommand("fvector", "f-vector of the Stanley-Reisner complex of I (or of I_k)");
  add_common(fvector, common);
  fvector->add_option("--k", k, "Use the squarefree truncation I_k");

  std::string hilbert_method = "monomial";
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator of R/I");
  add_common(hilbert, common);
  hilbert->add_option("--method", hilbert_method, "monomial | inclusion-exclusion | fvector | betti")
      ->check(CLI::IsMember({"monomial", "inclusion-exclusion", "fvector", "betti"}))
      ->capture_default_str();
  hilbert->add_option("--k", k, "Numerator of R/I_{>=k} instead");

  auto* polar = app.add_subcommand("polarize", "Polarized ideal plus its variable map");
  add_common(polar, common);

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of I and R/I");
  add_common(reg, common);

  auto* linear = app.add_subcommand("linear", "Does R/I have a k-linear resolution?");
  add_common(linear, common);
  linear->add_option("--k", k, "Degree of linearity")->required();

  auto* index = app.add_subcommand("index", "k-index of R/I");
  add_common(index, common);
  index->add_option("--k", k, "Degree")->required();

  auto* cwl = app.add_subcommand("cwl", "Componentwise linearity with a failing degree as certificate");
  add_common(cwl, common);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Randomized check of the truncation theorems against the oracle");
  add_common(verify, common, false);
  verify->add_option("--n", vopt.n, "Variables")->capture_default_str();
  verify->add_option("--trials", vopt.trials, "Random ideals")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "RNG seed")->required();
  verify->add_option("--min-gens", vopt.min_generators, "Fewest generators per ideal")->capture_default_str();
  verify->add_option("--max-gens", vopt.max_generators, "Most generators per ideal")->capture_default_str();
  verify->add_option("--min-deg", vopt.min_degree, "Smallest generator degree")->capture_default_str();
  verify->add_option("--max-deg", vopt.max_degree, "Largest generator degree (0: n-1)")->capture_default_str();

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      !app.get_subcommand_no_throw(args.front())) {
    err << "srtrunc: unknown subcommand '" << args.front() << "'\n";
    return kInputError;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "srtrunc: " << e.what() << '\n';
    return kInputError;
  }

  try {
    const Limits limits = Limits::from_env();
    const Characteristic field(common.characteristic);
    if (common.threads == 0) throw InputError("--threads must be positive");

    if (*verify) {
      vopt.field = field;
      vopt.threads = common.threads;
      vopt.max_n = limits.max_verify_n;
      const VerifyReport report = verify_sweep(vopt);
      out << (common.json ? report_to_json(report) + "\n" : format_report(report));
      return report.ok() ? kOk : kInconsistency;
    }

    const MonomialIdeal ideal = read_ideal_file(common.file);

    if (*betti) {
      if (betti_method == "oracle") {
        emit_betti(out, betti_of(ideal, common, limits), common.json);
      } else if (betti_method == "closed-form") {
        require_squarefree(ideal, "closed-form");
        const unsigned kk = require_k(k, "betti --method closed-form");
        const BettiTable base = hochster_betti(ideal, field, common.threads);
        const FVector fk = f_vector_truncated(f_vector(stanley_reisner(ideal)), ideal.ambient(), kk - 1);
        emit_betti(out, closed_form_truncation_betti(base, fk, ideal.ambient(), kk), common.json);
      } else {
        const unsigned kk = require_k(k, "betti --method geq");
        const BettiTable base = betti_of(ideal, common, limits);
        emit_betti(out, betti_geq_k(base, hilbert_numerator_monomial(truncate_geq(ideal, kk)), kk), common.json);
      }
    } else if (*truncate) {
      const MonomialIdeal result = truncate_mode == "geq" ? truncate_geq(ideal, *k) : squarefree_truncate(ideal, *k);
      emit_ideal(out, result, common.json);
    } else if (*fvector) {
      require_squarefree(ideal, "fvector");
      const MonomialIdeal target = k ? squarefree_truncate(ideal, *k) : ideal;
      const FVector f = f_vector(stanley_reisner(target));
      out << (common.json ? fvector_to_json(f) : to_string(f)) << '\n';
    } else if (*hilbert) {
      const MonomialIdeal target = k ? truncate_geq(ideal, *k) : ideal;
      HilbertNumerator h;
      if (hilbert_method == "monomial") {
        h = hilbert_numerator_monomial(target);
      } else if (hilbert_method == "inclusion-exclusion") {
        h = hilbert_numerator_inclusion_exclusion(target, limits.max_ie_generators);
      } else if (hilbert_method == "fvector") {
        require_squarefree(target, "hilbert --method fvector");
        h = hilbert_numerator_from_fvector(f_vector(stanley_reisner(target)), target.ambient());
      } else {
        h = hilbert_numerator_from_betti(betti_of(target, common, limits));
      }
      out << (common.json ? numerator_to_json(h) : to_string(h)) << '\n';
    } else if (*polar) {
      const PolarizationMap map = polarize(ideal);
      if (common.json) {
        nlohmann::json gens = nlohmann::json::array();
        for (const Monomial& g : map.ideal.generators()) gens.push_back(to_string(g));
        out << nlohmann::json{{"ideal", {{"n", map.target_n()}, {"generators", gens}}},
                              {"map", nlohmann::json::parse(polarization_map_to_json(map))}}
                   .dump()
            << '\n';
      } else {
        out << format_ideal(map.ideal) << "# variables: " << polarization_map_to_json(map) << '\n';
      }
    } else if (*reg) {
      const Regularity r = regularity(betti_of(ideal, common, limits));
      if (common.json)
        out << nlohmann::json{{"reg_ideal", r.ideal}, {"reg_quotient", r.quotient}, {"zero_ideal", r.zero_ideal}}.dump()
            << '\n';
      else
        out << "reg(I) = " << r.ideal << "\nreg(R/I) = " << r.quotient << (r.zero_ideal ? "\n(zero ideal)" : "")
            << '\n';
    } else if (*linear) {
      const bool ok = has_linear_resolution(betti_of(ideal, common, limits), *k);
      if (common.json)
        out << nlohmann::json{{"k", *k}, {"linear", ok}}.dump() << '\n';
      else
        out << (ok ? "linear" : "not linear") << '\n';
    } else if (*index) {
      const KIndex idx = k_index(betti_of(ideal, common, limits), *k);
      if (common.json) {
        nlohmann::json v = idx.is_infinite() ? nlohmann::json("inf") : nlohmann::json(idx.value());
        out << nlohmann::json{{"k", *k}, {"index", v}}.dump() << '\n';
      } else {
        out << to_string(idx) << '\n';
      }
    } else if (*cwl) {
      const ComponentwiseResult r = is_componentwise_linear(ideal, field, limits.max_polarized, common.threads);
      if (common.json) {
        nlohmann::json fail = r.failing_degree ? nlohmann::json(*r.failing_degree) : nlohmann::json(nullptr);
        out << nlohmann::json{{"componentwise_linear", r.linear}, {"failing_degree", fail}}.dump() << '\n';
      } else {
        out << (r.linear ? "componentwise linear" : "not componentwise linear (slice degree " +
                                                        std::to_string(*r.failing_degree) + " is not linear)")
            << '\n';
      }
    }
    return kOk;
  } catch (const InputError& e) {
    err << "srtrunc: " << e.what() << '\n';
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "srtrunc: inconsistency: " << e.what() << '\n';
    return kInconsistency;
  } catch (const ResourceError& e) {
    err << "srtrunc: resource bound: " << e.what() << '\n';
    return kResourceBound;
  }
}

}  // namespace srtrunc::cli
