#include "srtrunc/polarization.hpp"

#include <algorithm>
#include <json.hpp>

#include "srtrunc/betti.hpp"
#include "srtrunc/errors.hpp"

namespace srtrunc {

unsigned PolarizationMap::index_of(unsigned i, unsigned l) const {
  auto it = std::lower_bound(target.begin(), target.end(), std::pair{i, l});
  if (it == target.end() || *it != std::pair{i, l})
    throw InputError("x_{" + std::to_string(i) + "," + std::to_string(l) + "} is not a polarized variable");
  return static_cast<unsigned>(it - target.begin());
}

Monomial PolarizationMap::polarize(const Monomial& m) const {
  if (m.ambient() != source_n) throw InputError("monomial ambient does not match the polarization source");
  VarSet s;
  for (unsigned i = 0; i < source_n; ++i) {
    if (m[i] > max_exponents[i])
      throw InputError("exponent of x" + std::to_string(i + 1) + " exceeds the polarization depth");
    for (unsigned l = 1; l <= m[i]; ++l) s = s.with(index_of(i + 1, l));
  }
  return Monomial::from_support(target_n(), s);
}

PolarizationMap polarize(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("cannot polarize the unit ideal");
  PolarizationMap map;
  map.source_n = ideal.ambient();
  map.max_exponents.assign(map.source_n, 0);
  for (const Monomial& g : ideal.generators())
    for (unsigned i = 0; i < map.source_n; ++i) map.max_exponents[i] = std::max(map.max_exponents[i], g[i]);
  for (unsigned i = 0; i < map.source_n; ++i)
    for (unsigned l = 1; l <= map.max_exponents[i]; ++l) map.target.emplace_back(i + 1, l);
  if (map.target.size() > kMaxVariables)
    throw ResourceError("polarization needs " + std::to_string(map.target.size()) + " variables, above " +
                        std::to_string(kMaxVariables));
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(map.polarize(g));
  map.ideal = MonomialIdeal::normalize(map.target_n(), std::move(gens));
  return map;
}

std::string polarization_map_to_json(const PolarizationMap& map) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& [i, l] : map.target) vars.push_back({i, l});
  nlohmann::json doc;
  doc["source_n"] = map.source_n;
  doc["target_n"] = map.target_n();
  doc["variables"] = std::move(vars);
  return doc.dump();
}

BettiTable betti_monomial(const MonomialIdeal& ideal, Characteristic field, unsigned max_target_variables,
                          unsigned threads) {
  if (ideal.is_unit()) throw InputError("the unit ideal has no Betti table");
  const PolarizationMap map = polarize(ideal);
  if (map.target_n() > max_target_variables)
    throw ResourceError("polarized ambient size " + std::to_string(map.target_n()) + " exceeds the bound of " +
                        std::to_string(max_target_variables));
  BettiTable table = hochster_betti(map.ideal, field, threads);
  table.set_ambient(ideal.ambient());
  return table;
}

}  // namespace srtrunc
