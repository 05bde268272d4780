#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epslab/rational.hpp"
#include "epslab/ring.hpp"

namespace epslab {

/// Monomial grammar:
///   expr   := "1" | factor ("*" factor)*
///   factor := ident ("^" uint)?
/// Whitespace-insensitive; repeated variables multiply (exponents add).
Monomial parse_monomial(const std::string& text,
                        std::span<const std::string> names);

/// Job parameters with the documented defaults.
struct JobParams {
  int nmax = 8;
  int mmax = 3;
  int kmax = 6;
  int bmax = 8;
  std::uint64_t seed = 7;
  mpq_class tolerance = mpq_class(1, 20);
};

struct Instance {
  Ring ring;
  RingIdeal ideal;
  JobParams params;
};

/// Loads a JSON instance file:
///   {"vars": ["x","y"], "quotient": [], "ideal": ["x^2","x*y"],
///    "nmax": 8, ...}
/// Throws ParseError with position data for malformed input.
Instance parse_instance_file(const std::string& path);
Instance parse_instance_text(const std::string& text);

}  // namespace epslab
