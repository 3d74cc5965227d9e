#include "srtrunc/betti_table.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "srtrunc/errors.hpp"

namespace srtrunc {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt big_from_json(const json& v) {
  if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return BigInt(v.get<std::string>());
  throw InputError("expected an integer, got " + v.dump());
}

json parse_or_throw(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

BettiTable BettiTable::of_ring(unsigned n, Characteristic field) {
  BettiTable t(n, field);
  t.set(0, 0, 1);
  return t;
}

BigInt BettiTable::at(unsigned i, unsigned j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? BigInt(0) : it->second;
}

void BettiTable::set(unsigned i, unsigned j, const BigInt& v) {
  if (sgn(v) == 0) {
    entries_.erase({i, j});
    return;
  }
  const std::string where = "beta_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  if (sgn(v) < 0) throw InconsistencyError(where + " = " + v.get_str() + " is negative");
  if (j < i) throw InconsistencyError(where + " lies below the diagonal j >= i");
  if (i > n_) throw InconsistencyError(where + " exceeds homological degree n = " + std::to_string(n_));
  entries_[{i, j}] = v;
}

void BettiTable::add(unsigned i, unsigned j, const BigInt& v) { set(i, j, at(i, j) + v); }

void BettiTable::merge(const BettiTable& other) {
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
}

void BettiTable::set_ambient(unsigned n) {
  if (projective_dimension() > n) throw InconsistencyError("table does not fit in " + std::to_string(n) + " variables");
  n_ = n;
}

unsigned BettiTable::projective_dimension() const {
  unsigned pd = 0;
  for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::optional<unsigned> BettiTable::max_row() const {
  std::optional<unsigned> row;
  for (const auto& [key, v] : entries_)
    if (key.first >= 1) row = std::max(row.value_or(0), key.second - key.first);
  return row;
}

std::string format_betti_text(const BettiTable& table) {
  const unsigned cols = table.projective_dimension() + 1;
  unsigned rows = 1;
  for (const auto& [key, v] : table.entries()) rows = std::max(rows, key.second - key.first + 1);

  std::vector<BigInt> totals(cols, 0);
  for (const auto& [key, v] : table.entries()) totals[key.first] += v;

  // cells[r][c] as strings; row 0 is the header, row 1 the totals.
  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header, total;
  for (unsigned c = 0; c < cols; ++c) {
    header.push_back(std::to_string(c));
    total.push_back(totals[c].get_str());
  }
  cells.push_back(header);
  cells.push_back(total);
  for (unsigned r = 0; r < rows; ++r) {
    labels.push_back(std::to_string(r) + ":");
    std::vector<std::string> line;
    for (unsigned c = 0; c < cols; ++c) {
      BigInt v = table.at(c, c + r);
      line.push_back(sgn(v) == 0 ? "." : v.get_str());
    }
    cells.push_back(line);
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(cols, 0);
  for (const auto& line : cells)
    for (unsigned c = 0; c < cols; ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = std::string(label_width - labels[r].size(), ' ') + labels[r];
    for (unsigned c = 0; c < cols; ++c) line += ' ' + std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string betti_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, v] : table.entries()) entries.push_back(json::array({key.first, key.second, big_to_json(v)}));
  json doc;
  doc["char"] = table.characteristic().value();
  doc["n"] = table.ambient();
  doc["entries"] = std::move(entries);
  return doc.dump();
}

BettiTable betti_from_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  try {
    BettiTable t(doc.at("n").get<unsigned>(), Characteristic(doc.at("char").get<std::uint32_t>()));
    for (const json& e : doc.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw InputError("Betti entry must be [i, j, value]: " + e.dump());
      t.set(e[0].get<unsigned>(), e[1].get<unsigned>(), big_from_json(e[2]));
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed Betti table JSON: ") + e.what());
  }
}

void HilbertNumerator::trim() {
  while (!coefficients.empty() && sgn(coefficients.back()) == 0) coefficients.pop_back();
}

std::string to_string(const HilbertNumerator& h) {
  std::string out;
  for (std::size_t s = 0; s < h.coefficients.size(); ++s) {
    const BigInt& c = h.coefficients[s];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1 || s == 0) out += mag.get_str();
    if (s >= 1) out += "t";
    if (s >= 2) out += "^" + std::to_string(s);
  }
  return out.empty() ? "0" : out;
}

std::string numerator_to_json(const HilbertNumerator& h) {
  json coeffs = json::array();
  for (const BigInt& c : h.coefficients) coeffs.push_back(big_to_json(c));
  json doc;
  doc["n"] = h.n;
  doc["coefficients"] = std::move(coeffs);
  return doc.dump();
}

HilbertNumerator numerator_from_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  try {
    HilbertNumerator h;
    h.n = doc.at("n").get<unsigned>();
    for (const json& c : doc.at("coefficients")) h.coefficients.push_back(big_from_json(c));
    h.trim();
    return h;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed numerator JSON: ") + e.what());
  }
}

std::string fvector_to_json(const FVector& f) {
  json entries = json::array();
  for (const BigInt& c : f.entries) entries.push_back(big_to_json(c));
  json doc;
  doc["f"] = std::move(entries);
  return doc.dump();
}

}  // namespace srtrunc
