#pragma once

#include <array>
#include <string>
#include <vector>

#include "mcres/mcres.hpp"

namespace mcres::testing {

struct SchreyerFixture {
  std::array<int, 4> seq;
  const char* label;
  std::vector<const char*> rows;
};

// First syzygies of G written symbolically, one row per syzygy, entries in
// the order of G as produced by patil_named_generators.
inline const std::vector<SchreyerFixture>& schreyer_fixtures() {
  static const std::vector<SchreyerFixture> fx = {
      {{7, 8, 9, 12}, "v", {
          "-X2^q, X1, -X0, 0, 0",
          "-X2^(q+1) + X0^(lambda-1)*X1*Y^w, 0, xi, 0, 0",
          "X0^(lambda+mu) - X2^(qp+1)*Y^(v-w), 0, 0, xi, 0",
          "X0^mu*X1*X2^(q-qp-1) - Y^v, 0, 0, 0, xi",
          "Y^w*X0^(lambda-1), -X2, X1, 0, 0",
          "0, -Y^(v-w), 0, X1*X2^(q-qp-1), -X0^lambda",
          "0, -theta, 0, 0, phi0",
          "-X0^(mu+lambda-1)*X2^(q-qp-1), 0, -Y^(v-w), X2^(q-qp), -X0^(lambda-1)*X1",
          "0, 0, -theta, 0, phi1",
          "0, X0^mu, 0, -Y^w, X2^(qp+1)"}},
      {{8, 9, 10, 13}, "ix", {
          "-X2^q, X1, -X0, 0, 0, 0",
          "X0^(lambda-1)*X1*Y^w - X2^(q+1), 0, xi, 0, 0, 0",
          "-X2^qp*Y^(v-w), 0, 0, X1, -X0, 0",
          "X0^(lambda+mu-1)*X1 - X2^(qp+1)*Y^(v-w), 0, 0, 0, xi, 0",
          "X0^mu*X2^(q-qp) - Y^v, 0, 0, 0, 0, xi",
          "X0^(lambda-1)*Y^w, -X2, X1, 0, 0, 0",
          "0, -Y^(v-w), 0, X2^(q-qp), 0, -X0^lambda",
          "X0^(lambda+mu-1)*X2^(q-qp-1), -Y^(v-w), 0, 0, X1*X2^(q-qp-1), -X0^lambda",
          "0, -theta, 0, 0, 0, phi0",
          "-X0^(lambda+mu-1)*X2^(q-qp), 0, -X1*Y^(v-w), X2^(q-qp+1), 0, -X0^(lambda-1)*X1^2",
          "0, 0, -Y^(v-w), 0, X2^(q-qp), -X0^(lambda-1)*X1",
          "0, 0, -theta, 0, 0, phi1",
          "X0^(lambda+mu-1), 0, 0, -X2, X1, 0",
          "0, X0^mu, 0, -Y^w, 0, X1*X2^qp",
          "0, 0, X0^mu, 0, -Y^w, X2^(qp+1)"}},
      {{9, 10, 11, 15}, "xiv", {
          "-X2^(q+1) + X0^lambda*Y^w, xi, 0, 0, 0",
          "-X2^qp*Y^(v-w), 0, X1, -X0, 0",
          "X0^(lambda+mu)*X1 - X2^(qp+1)*Y^(v-w), 0, 0, xi, 0",
          "X0^mu*X1*X2^(q-qp) - Y^v, 0, 0, 0, xi",
          "-X0^(lambda+mu)*X2^(q-qp), -X1*Y^(v-w), X2^(q-qp+1), 0, -X0^lambda*X1",
          "0, -Y^(v-w), 0, X2^(q-qp), -X0^lambda",
          "0, -theta, 0, 0, phi0",
          "X0^(lambda+mu), 0, -X2, X1, 0",
          "X0^mu*X2^q, X0^(mu+1), -Y^w, 0, X1*X2^qp",
          "0, X0^mu*X1, 0, -Y^w, X2^(qp+1)"}},
      {{6, 7, 8, 10}, "xvi", {
          "X0^lambda*Y^w - X2^(q+1), xi, 0, 0",
          "X0^(lambda+mu) - X2^(qp+1)*Y^(v-w), 0, xi, 0",
          "X0^mu*X2^(q-qp) - Y^v, 0, 0, xi",
          "0, -Y^(v-w), X2^(q-qp), -X0^lambda",
          "0, -theta, 0, phi0",
          "0, X0^mu, -Y^w, X2^(qp+1)"}},
      {{6, 7, 8, 9}, "xviii", {
          "-X2^q, X1, -X0, 0",
          "X0^(lambda-1)*X1*Y^w - X2^(q+1), 0, xi, 0",
          "X0^mu*X2^(q-qp) - Y^v, 0, 0, xi",
          "X0^(lambda-1)*Y^w, -X2, X1, 0",
          "0, -theta, 0, phi0",
          "0, 0, -theta, phi1"}},
  };
  return fx;
}

struct FixtureResult {
  std::string seq, label;
  std::size_t columns = 0, rows = 0, matched = 0;
  bool composes = false;
  bool ok() const { return columns == rows && matched == rows && composes; }
};

// Each Schreyer column must equal, up to sign, a distinct symbolic row.
inline FixtureResult check_schreyer_fixture(const SchreyerFixture& f) {
  FixtureResult out;
  auto spec = validate_sequence(f.seq[0], f.seq[1], f.seq[2], f.seq[3]);
  auto p = extract_parameters(toric_kernel(spec));
  out.seq = spec.str();
  out.label = case_id(p).label;
  auto order = MonomialOrder::grevlex(spec.grading());
  NamedPolys named;
  for (auto& [n, g] : patil_named_generators(p, spec)) named.emplace(n, g);

  auto gb = buchberger(patil_generators(p, spec));
  auto S = schreyer_syzygies(gb);
  out.columns = S.cols();
  out.rows = f.rows.size();

  std::vector<std::vector<std::string>> expected;
  for (const char* row : f.rows) {
    std::vector<std::string> v;
    for (auto cell : detail::split(row, ','))
      v.push_back(to_string(parse_polynomial(cell, order, p.env(), named)));
    expected.push_back(v);
  }
  std::vector<bool> used(expected.size(), false);
  for (std::size_t j = 0; j < S.cols(); ++j) {
    std::vector<std::string> col, neg;
    for (std::size_t i = 0; i < S.rows(); ++i) {
      col.push_back(to_string(S.at(i, j)));
      neg.push_back(to_string(-S.at(i, j)));
    }
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (!used[k] && (expected[k] == col || expected[k] == neg)) {
        used[k] = true;
        ++out.matched;
        break;
      }
  }
  out.composes = compose_zero(GradedMap(order, S.target(), GradedFreeModule{{0}}, gb.elements), S);
  return out;
}

}  // namespace mcres::testing
