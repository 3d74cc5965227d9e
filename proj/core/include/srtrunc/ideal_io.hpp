#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "srtrunc/complex.hpp"
#include "srtrunc/ideal.hpp"

namespace srtrunc {

// Ideal text format:
//
//   # comment
//   n=9
//   x1*x2*x3
//   x4^2*x5
//
// One generator per line, `1` for the unit monomial, blank lines and `#`
// comments ignored. The `n=<int>` header must precede every generator.

MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);
std::string format_ideal(const MonomialIdeal& ideal);

// Complex text format: header `n=<int>`, then one facet per line as
// comma-separated one-based vertex indices. An empty line after the header
// is skipped, so the empty complex is written as a line holding `{}`.

SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& complex);

}  // namespace srtrunc
