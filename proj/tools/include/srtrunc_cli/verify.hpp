#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <srtrunc/homology.hpp>

namespace srtrunc::cli {

struct VerifyOptions {
  unsigned n = 7;
  unsigned trials = 200;
  std::uint64_t seed = 0;
  Characteristic field{};
  unsigned threads = 1;
  unsigned min_generators = 1;
  unsigned max_generators = 5;
  unsigned min_degree = 2;
  /// 0 selects n - 1.
  unsigned max_degree = 0;
  /// Monomial-ideal checks skip truncations whose polarization is wider than this.
  unsigned max_polarized = 20;
  /// Largest n accepted.
  unsigned max_n = 14;
};

struct PropertyTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;
  std::string first_failure;

  bool ok() const { return checked == passed; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<PropertyTally> properties;

  bool ok() const;
  const PropertyTally& property(const std::string& name) const;
};

/// Random squarefree ideals in n variables checked against the truncation
/// theorems, plus random monomial ideals in min(n, 3) variables for the
/// I_{>=k} statements. Deterministic in the seed.
VerifyReport verify_sweep(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

}  // namespace srtrunc::cli
