#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcres/patil.hpp"
#include "mcres/resolution.hpp"
#include "mcres/text.hpp"

namespace mcres {

// Final syzygy matrices per case. A lists the generators (by name or as a
// polynomial); B and C are row-major with rows split by ';' and entries by
// ','. Exponents may use lambda, mu, nu, q, qp (q'), v, w.
struct ClosedFormTemplate {
  const char* label;
  const char* A;
  const char* B;
  const char* C;
};

inline const std::vector<ClosedFormTemplate>& closed_form_templates() {
  static const std::vector<ClosedFormTemplate> t{
      // r=1, r'=2
      {"i", "xi, phi1, psi0, theta",
       "-X2^q, X0^lambda - X2^(qp+1)*Y^(v-w), X1*X2^(q-qp-1) - Y^v, Y^w*X0^(lambda-1), 0, "
       "-X0^(lambda-1)*X2^(q-qp-1);"
       "-X0, 0, 0, X1, 0, -Y^(v-w);"
       "X1*Y^w, xi, 0, -X2*Y^w, X1*X2^(q-qp-1) - Y^v, X2^(q-qp);"
       "-X1*X2^(qp+1), 0, xi, X2^(qp+2), Y^(v-w)*X2^(qp+1) - X0^lambda, -X0^(lambda-1)*X1",
       "0, Y^(v-w), X1;"
       "0, -X2^(q-qp-1), -Y^w;"
       "X0^(lambda-1), 0, X2^(qp+1);"
       "Y^(v-w), 0, X0;"
       "-X2, X1, 0;"
       "X1, -X0, 0"},
      {"ii", "xi, phi0, phi1, psi0, theta",
       "-X2^q, X0^mu*X1 - Y^v, Y^w*X0^(lambda-1), 0, -X0^(lambda+mu-1), 0;"
       "X1, 0, -X2, -Y^(v-w), 0, X0^mu;"
       "-X0, 0, X1, 0, -Y^(v-w), 0;"
       "0, 0, 0, X1, X2, -Y^w;"
       "0, xi, 0, -X0^lambda, -X0^(lambda-1)*X1, X2^(qp+1)",
       "0, X1*X0^mu - Y^v;"
       "X0^(lambda-1), X2^(qp+1);"
       "Y^(v-w), X0^(mu+1);"
       "-X2, -X1*Y^w;"
       "X1, X0*Y^w;"
       "0, -xi"},
      {"iii", "xi, phi0, phi1, psi0, theta",
       "-X2^q, X0^(mu+1) - X2^(qp+1)*Y^(v-w), Y^w, 0, -X0^mu*X2^(q-qp-1), 0;"
       "X1, 0, -X2, -Y^(v-w), 0, X0^mu;"
       "-X0, 0, X1, 0, -Y^(v-w), 0;"
       "0, xi, 0, X1*X2^(q-qp-1), X2^(q-qp), -Y^w;"
       "0, 0, 0, -X0, -X1, X2^(qp+1)",
       "Y^(v-w), X1*X0^mu;"
       "-X2^(q-qp-1), -Y^w;"
       "0, X0^(mu+1) - X2^(qp+1)*Y^(v-w);"
       "X1, X2^(qp+2);"
       "-X0, -X2^(qp+1)*X1;"
       "0, -xi"},
      {"iv", "xi, phi0, phi1, psi0, theta",
       "-X2^q, Y^w, 0, -X0^mu, 0;"
       "X1, -X2, -Y^(v-w), 0, X0^mu;"
       "-X0, X1, 0, -Y^(v-w), 0;"
       "0, 0, X1, X2, -Y^w;"
       "0, 0, -X0, -X1, X2^(qp+1)",
       "X1*X0^mu - Y^v;"
       "X0^(mu+1) - X2^(qp+1)*Y^(v-w);"
       "X2^(qp+2) - X1*Y^w;"
       "X0*Y^w - X2^(qp+1)*X1;"
       "-xi"},
      {"v", "xi, phi0, phi1, psi0, theta",
       "-X2^q, X0^(lambda+mu) - X2^(qp+1)*Y^(v-w), X0^mu*X1*X2^(q-qp-1) - Y^v, "
       "Y^w*X0^(lambda-1), 0, -X0^(lambda+mu-1)*X2^(q-qp-1), 0;"
       "X1, 0, 0, -X2, -Y^(v-w), 0, X0^mu;"
       "-X0, 0, 0, X1, 0, -Y^(v-w), 0;"
       "0, xi, 0, 0, X1*X2^(q-qp-1), X2^(q-qp), -Y^w;"
       "0, 0, xi, 0, -X0^lambda, -X0^(lambda-1)*X1, X2^(qp+1)",
       "0, Y^(v-w), X1*X0^mu;"
       "0, -X2^(q-qp-1), -Y^w;"
       "X0^(lambda-1), 0, X2^(qp+1);"
       "Y^(v-w), 0, X0^(mu+1);"
       "-X2, X1, 0;"
       "X1, -X0, 0;"
       "0, 0, -xi"},
      // r=r'=1
      {"vi", "xi, psi0, psi1, theta",
       "-X2^qp*Y^(v-w), X2^(q-qp) - Y^v, 0, 0, X0^(lambda-1);"
       "X1, 0, X2^(q-qp) - Y^v, 0, -X2;"
       "-X0, 0, 0, X2^(q-qp) - Y^v, X1;"
       "0, xi, X1*X2^qp*Y^(v-w) - X0^lambda, X2^(qp+1)*Y^(v-w) - X1*X0^(lambda-1), 0",
       "0, Y^v - X2^(q-qp);"
       "X0^(lambda-1), -X2^qp*Y^(v-w);"
       "-X2, X1;"
       "X1, -X0;"
       "Y^v - X2^(q-qp), 0"},
      {"vii", "xi, phi0, phi1, psi0, psi1, theta",
       "-X2^q, -X2^qp*Y^(v-w), Y^w, 0, 0, X0^mu, 0, 0;"
       "X1, 0, -X2, -Y^(v-w), 0, 0, X0^mu, 0;"
       "-X0, 0, X1, 0, -Y^(v-w), 0, 0, X0^mu;"
       "0, X1, 0, X2^(q-qp), 0, -X2, -Y^w, 0;"
       "0, -X0, 0, 0, X2^(q-qp), X1, 0, -Y^w;"
       "0, 0, 0, -X0, -X1, 0, X1*X2^qp, X2^(qp+1)",
       "0, Y^(v-w), X0^mu;"
       "0, -X2^(q-qp), -Y^w;"
       "X0^mu, 0, -X2^qp*Y^(v-w);"
       "0, X1, X2^(qp+1);"
       "0, -X0, -X1*X2^qp;"
       "-Y^w, 0, X2^q;"
       "X2, 0, -X1;"
       "-X1, 0, X0"},
      {"viii", "xi, phi0, phi1, psi0, psi1, theta",
       "-X2^q, -Y^(v-w), Y^w*X0^(lambda-1), 0, 0, X0^(nu-1), 0, 0;"
       "X1, 0, -X2, -Y^(v-w), 0, 0, X0^mu, 0;"
       "-X0, 0, X1, 0, -Y^(v-w), 0, 0, X0^mu;"
       "0, X1, 0, X2^q, 0, -X2, -Y^w, 0;"
       "0, -X0, 0, 0, X2^q, X1, 0, -Y^w;"
       "0, 0, 0, -X0^lambda, -X1*X0^(lambda-1), 0, X1, X2",
       "-X0^(nu-1), 0, Y^(v-w);"
       "X0^(lambda-1)*Y^w, 0, -X2^q;"
       "Y^(v-w), X0^mu, 0;"
       "-X2, 0, X1;"
       "X1, 0, -X0;"
       "-X2^q, -Y^w, 0;"
       "X1*X0^(lambda-1), X2, 0;"
       "-X0^lambda, -X1, 0"},
      {"ix", "xi, phi0, phi1, psi0, psi1, theta",
       "-X2^q, -X2^qp*Y^(v-w), X0^mu*X2^(q-qp) - Y^v, Y^w*X0^(lambda-1), 0, 0, "
       "X0^(lambda+mu-1), 0, 0;"
       "X1, 0, 0, -X2, -Y^(v-w), 0, 0, X0^mu, 0;"
       "-X0, 0, 0, X1, 0, -Y^(v-w), 0, 0, X0^mu;"
       "0, X1, 0, 0, X2^(q-qp), 0, -X2, -Y^w, 0;"
       "0, -X0, 0, 0, 0, X2^(q-qp), X1, 0, -Y^w;"
       "0, 0, xi, 0, -X0^lambda, -X1*X0^(lambda-1), 0, X1*X2^qp, X2^(qp+1)",
       "0, 0, Y^(v-w), X0^mu;"
       "0, 0, -X2^(q-qp), -Y^w;"
       "X0^(lambda-1), 0, 0, X2^qp;"
       "Y^(v-w), X0^mu, 0, 0;"
       "-X2, 0, X1, 0;"
       "X1, 0, -X0, 0;"
       "-X2^(q-qp), -Y^w, 0, 0;"
       "0, X2, 0, -X1;"
       "0, -X1, 0, X0"},
      // r=2, r'=1
      {"x", "xi, phi0, psi0, psi1, theta",
       "-X2^qp*Y^(v-w), X1*X2^(q-qp) - Y^v, 0, X0^lambda, X2^q, 0;"
       "0, 0, -Y^(v-w), 0, X0, X1;"
       "X1, 0, 0, -X2, -Y^w, 0;"
       "-X0, 0, X2^(q-qp), X1, 0, -Y^w;"
       "0, xi, -X0^lambda, 0, X1*X2^qp, X2^(qp+1)",
       "Y^w, -X2^(q-qp+1);"
       "-X2^qp, X0^lambda;"
       "0, xi;"
       "0, Y^v - X1*X2^(q-qp);"
       "X1, -X2*Y^(v-w);"
       "-X0, X1*Y^(v-w)"},
      {"xi", "xi, phi0, psi0, psi1, theta",
       "-X2^qp*Y^(v-w), 0, X0^lambda, X2^q, 0;"
       "0, -Y^(v-w), 0, X0, X1;"
       "X1, 0, -X2, -Y^w, 0;"
       "-X0, X2^(q-qp), X1, 0, -Y^w;"
       "0, -X0^lambda, 0, X1*X2^qp, X2^(qp+1)",
       "X0^lambda*Y^w - X2^(q-qp+1);"
       "xi;"
       "Y^v - X1*X2^(q-qp);"
       "X0^lambda*X1 - X2*Y^(v-w);"
       "X1*Y^(v-w) - X0^(lambda+1)"},
      {"xii", "xi, phi0, psi0, psi1, theta",
       "-X2^(q+1) + X0^lambda*Y^w, -Y^(v-w), 0, X0^(lambda+mu), X0^mu*X2^q, 0;"
       "xi, 0, -Y^(v-w), 0, X0^(mu+1), X0^mu*X1;"
       "0, X1, 0, -X2, -Y^w, 0;"
       "0, -X0, X2^q, X1, 0, -Y^w;"
       "0, 0, -X0^lambda, 0, X1, X2",
       "X0^mu, Y^(v-w);"
       "0, X0^lambda*Y^w - X2^(q+1);"
       "0, xi;"
       "-Y^w, -X1*X2^q;"
       "X2, X0^lambda*X1;"
       "-X1, -X0^(lambda+1)"},
      {"xiii", "xi, phi0, psi0, theta",
       "-X2^(q+1) + X0^lambda*Y^w, -X2^q*Y^(v-w), X0^mu*X1 - Y^v, X0^(lambda+mu), "
       "X0^mu*X2^q, 0;"
       "xi, -X0*Y^(v-w), 0, X1*Y^(v-w), X0^(mu+1), X0^mu*X1 - Y^v;"
       "0, X1, 0, -X2, -Y^w, 0;"
       "0, -X0^(lambda+1), xi, X1*X0^lambda, X1*X2^q, X2^(q+1) - X0^lambda*Y^w",
       "0, X0^mu, Y^(v-w);"
       "Y^w, 0, -X2;"
       "-X2^q, 0, X0^lambda;"
       "0, -Y^w, -X1;"
       "X1, X2, 0;"
       "-X0, -X1, 0"},
      {"xiv", "xi, phi0, psi0, psi1, theta",
       "-X2^(q+1) + X0^lambda*Y^w, -X2^qp*Y^(v-w), X0^mu*X1*X2^(q-qp) - Y^v, 0, "
       "X0^(lambda+mu), X0^mu*X2^q, 0;"
       "xi, 0, 0, -Y^(v-w), 0, X0^(mu+1), X0^mu*X1;"
       "0, X1, 0, 0, -X2, -Y^w, 0;"
       "0, -X0, 0, X2^(q-qp), X1, 0, -Y^w;"
       "0, 0, xi, -X0^lambda, 0, X1*X2^qp, X2^(qp+1)",
       "0, X0^mu, Y^(v-w);"
       "Y^w, 0, -X2^(q-qp+1);"
       "-X2^qp, 0, X0^lambda;"
       "0, 0, xi;"
       "0, -Y^w, -X1*X2^(q-qp);"
       "X1, X2, 0;"
       "-X0, -X1, 0"},
      // r=r'=2
      {"xv", "xi, psi0, theta",
       "-psi0, -theta, 0;"
       "xi, 0, -theta;"
       "0, xi, psi0",
       "theta;"
       "-psi0;"
       "xi"},
      {"xvi", "xi, phi0, psi0, theta",
       "X0^lambda*Y^w - X2^(q+1), X0^(lambda+mu) - X2^(qp+1)*Y^(v-w), X0^mu*X2^(q-qp) - Y^v, "
       "0, 0;"
       "xi, 0, 0, -Y^(v-w), X0^mu;"
       "0, xi, 0, X2^(q-qp), -Y^w;"
       "0, 0, xi, -X0^lambda, X2^(qp+1)",
       "Y^(v-w), X0^mu;"
       "-X2^(q-qp), -Y^w;"
       "X0^lambda, X2^(qp+1);"
       "xi, 0;"
       "0, -xi"},
      // W empty
      {"xvii", "xi, phi0, phi1, theta",
       "-X2^q, X0^mu*X1*X2^(q-qp-1) - Y^v, X0^(lambda-1)*Y^w, 0, 0;"
       "X1, 0, -X2, X0^mu*X1*X2^(q-qp-1) - Y^v, 0;"
       "-X0, 0, X1, 0, X0^mu*X1*X2^(q-qp-1) - Y^v;"
       "0, xi, 0, X1*X2^q - X0^lambda*Y^w, X2^(q+1) - X0^(lambda-1)*X1*Y^w",
       "Y^v - X0^mu*X1*X2^(q-qp-1), 0;"
       "-X2^q, -X0^(lambda-1)*Y^w;"
       "0, -(Y^v - X0^mu*X1*X2^(q-qp-1));"
       "X1, X2;"
       "-X0, -X1"},
      {"xviii", "xi, phi0, phi1, theta",
       "-X2^q, X0^(lambda-1)*Y^w, X0^mu*X2^(q-qp) - Y^v, 0, 0;"
       "X1, -X2, 0, X0^mu*X2^(q-qp) - Y^v, 0;"
       "-X0, X1, 0, 0, X0^mu*X2^(q-qp) - Y^v;"
       "0, 0, xi, X1*X2^q - X0^lambda*Y^w, X2^(q+1) - X0^(lambda-1)*X1*Y^w",
       "Y^v - X0^mu*X2^(q-qp), 0;"
       "0, -(Y^v - X0^mu*X2^(q-qp));"
       "-X2^q, -X0^(lambda-1)*Y^w;"
       "X1, X2;"
       "-X0, -X1"},
      {"xix", "xi, phi0, theta",
       "-phi0, -theta, 0;"
       "xi, 0, -theta;"
       "0, xi, phi0",
       "theta;"
       "-phi0;"
       "xi"},
  };
  return t;
}

inline const ClosedFormTemplate& closed_form_template(const std::string& label) {
  for (const auto& t : closed_form_templates())
    if (label == t.label) return t;
  throw Error(ErrorKind::CaseUnmatched, "no closed form for case '" + label + "'");
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

// Source twists are read off the first nonzero entry of each column.
inline GradedMap instantiate_matrix(std::string_view text, const GradedFreeModule& target,
                                    const MonomialOrder& order, const ParamEnv& env,
                                    const NamedPolys& named) {
  auto rows = split(text, ';');
  if (rows.size() != target.rank())
    throw Error(ErrorKind::ShapeMismatch, "template has " + std::to_string(rows.size()) +
                                              " rows, target rank is " +
                                              std::to_string(target.rank()));
  std::vector<std::vector<Polynomial>> cells;
  for (auto row : rows) {
    std::vector<Polynomial> r;
    for (auto cell : split(row, ',')) r.push_back(parse_polynomial(cell, order, env, named));
    if (!cells.empty() && r.size() != cells.front().size())
      throw Error(ErrorKind::ShapeMismatch, "ragged template row");
    cells.push_back(std::move(r));
  }
  std::size_t ncols = cells.front().size();
  GradedFreeModule source;
  for (std::size_t j = 0; j < ncols; ++j) {
    std::optional<std::int64_t> tw;
    for (std::size_t i = 0; i < rows.size() && !tw; ++i)
      if (!cells[i][j].is_zero()) {
        auto d = is_homogeneous(cells[i][j], order.grading());
        if (!d)
          throw Error(ErrorKind::HomogeneityBroken, "inhomogeneous entry " + to_string(cells[i][j]));
        tw = *d + target.twists[i];
      }
    if (!tw) throw Error(ErrorKind::ShapeMismatch, "zero column " + std::to_string(j));
    source.twists.push_back(*tw);
  }
  std::vector<Polynomial> entries;
  for (auto& r : cells)
    for (auto& c : r) entries.push_back(std::move(c));
  return GradedMap(order, std::move(source), target, std::move(entries));
}

}  // namespace detail

inline FreeResolution instantiate_closed_form(const ClosedFormTemplate& t, const CaseParameters& p,
                                              const SequenceSpec& spec) {
  auto order = MonomialOrder::grevlex(spec.grading());
  NamedPolys named;
  for (auto& [name, f] : patil_named_generators(p, spec)) named.emplace(name, f);
  auto env = p.env();
  GradedFreeModule ring{{0}};
  FreeResolution res;
  res.maps.push_back(detail::instantiate_matrix(t.A, ring, order, env, named));
  res.maps.push_back(detail::instantiate_matrix(t.B, res.maps[0].source(), order, env, named));
  res.maps.push_back(detail::instantiate_matrix(t.C, res.maps[1].source(), order, env, named));
  res.minimal = is_minimal(res);
  return res;
}

inline FreeResolution closed_form_resolution(const CaseParameters& p, const SequenceSpec& spec,
                                             const CaseTables& tables = CaseTables::builtin()) {
  return instantiate_closed_form(closed_form_template(case_id(p, tables).label), p, spec);
}

}  // namespace mcres
