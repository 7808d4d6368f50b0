#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "mcres/mcres.hpp"

#include <ostream>

namespace mcres {
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << to_string(f); }
}  // namespace mcres

namespace mcres::testing {

inline MonomialOrder weights(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return MonomialOrder::grevlex(WeightedGrading(a, b, c, d));
}

inline Polynomial P(const MonomialOrder& o, std::string_view s) { return parse_polynomial(s, o); }

// Canonical text of a set of polynomials, each normalized up to sign.
inline std::vector<std::string> up_to_sign(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) {
    Polynomial g = f.lead().coef < Rational(0) ? -f : f;
    out.push_back(to_string(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcres::testing
