#include "srtrunc/ideal_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "srtrunc/errors.hpp"

namespace srtrunc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, std::string_view what, std::string_view token) {
  throw InputError("line " + std::to_string(line) + ": " + std::string(what) + " '" + std::string(token) + "'");
}

std::optional<unsigned> parse_uint(std::string_view s) {
  unsigned v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Calls fn(line_number, content) for each non-blank line with comments removed.
template <typename Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
  }
}

unsigned parse_header(std::size_t line_no, std::string_view line) {
  std::string_view rest = line;
  if (rest.substr(0, 1) != "n") fail(line_no, "expected header n=<int>, got", line);
  rest = trim(rest.substr(1));
  if (rest.substr(0, 1) != "=") fail(line_no, "expected header n=<int>, got", line);
  const auto n = parse_uint(trim(rest.substr(1)));
  if (!n) fail(line_no, "bad variable count in header", line);
  if (*n > kMaxVariables) fail(line_no, "variable count above " + std::to_string(kMaxVariables), line);
  return *n;
}

Monomial parse_monomial(std::size_t line_no, std::string_view line, unsigned n) {
  Monomial m(n);
  if (line == "1") return m;
  std::vector<Exponent> exps(n, 0);
  while (true) {
    const auto star = line.find('*');
    const std::string_view token = trim(line.substr(0, star));
    if (token.size() < 2 || token[0] != 'x') fail(line_no, "bad token", token);
    const auto caret = token.find('^');
    const auto var = parse_uint(token.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
    if (!var || *var == 0) fail(line_no, "bad variable", token);
    if (*var > n) fail(line_no, "variable outside n=" + std::to_string(n), token);
    unsigned power = 1;
    if (caret != std::string_view::npos) {
      const auto e = parse_uint(token.substr(caret + 1));
      if (!e) fail(line_no, "bad exponent", token);
      power = *e;
    }
    exps[*var - 1] += power;
    if (star == std::string_view::npos) break;
    line = line.substr(star + 1);
  }
  return Monomial(std::move(exps));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<unsigned> n;
  std::vector<Monomial> gens;
  for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!n) {
      n = parse_header(line_no, line);
      return;
    }
    gens.push_back(parse_monomial(line_no, line, *n));
  });
  if (!n) throw InputError("missing header n=<int>");
  return MonomialIdeal::normalize(*n, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) { return parse_ideal(read_file(path)); }

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.ambient()) + "\n";
  for (const Monomial& g : ideal.generators()) out += to_string(g) + "\n";
  return out;
}

SimplicialComplex parse_complex(std::string_view text) {
  std::optional<unsigned> n;
  std::vector<VarSet> facets;
  for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!n) {
      n = parse_header(line_no, line);
      return;
    }
    VarSet face;
    if (line != "{}") {
      while (true) {
        const auto comma = line.find(',');
        const std::string_view token = trim(line.substr(0, comma));
        const auto v = parse_uint(token);
        if (!v || *v == 0) fail(line_no, "bad vertex", token);
        if (*v > *n) fail(line_no, "vertex outside n=" + std::to_string(*n), token);
        face = face.with(*v - 1);
        if (comma == std::string_view::npos) break;
        line = line.substr(comma + 1);
      }
    }
    facets.push_back(face);
  });
  if (!n) throw InputError("missing header n=<int>");
  return SimplicialComplex::from_faces(*n, std::move(facets));
}

std::string format_complex(const SimplicialComplex& complex) {
  std::string out = "n=" + std::to_string(complex.vertex_count()) + "\n";
  for (VarSet f : complex.facets()) {
    if (f.empty()) {
      out += "{}\n";
      continue;
    }
    std::string line;
    for (unsigned v : f.members()) line += (line.empty() ? "" : ",") + std::to_string(v + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace srtrunc
