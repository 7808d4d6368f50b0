#pragma once

#include <cstdint>
#include <vector>

#include "mcres/groebner.hpp"
#include "mcres/semigroup.hpp"

namespace mcres {

struct ToricIdeal {
  SequenceSpec spec;
  std::vector<Polynomial> generators;  // reduced weighted-grevlex basis
  GroebnerBasis<Polynomial> reduced_gb;  // same elements, with transcript
};

inline bool is_pure_difference_binomial(const Polynomial& f) {
  return f.size() == 2 && f.terms()[0].coef.is_one() && (-f.terms()[1].coef).is_one();
}

// Kernel of X_i -> t^{w_i} for up to four weights (unused variables keep
// weight 1 and never occur). The auxiliary variable T is eliminated with an
// order that compares weighted degree first and then the power of T; on a
// homogeneous ideal this is an elimination order, and its T-free part is
// already a weighted grevlex basis.
inline std::vector<Polynomial> toric_kernel_weights(const std::vector<std::int64_t>& weights) {
  if (weights.empty() || weights.size() > 4)
    throw Error(ErrorKind::PreconditionViolated, "between one and four weights");
  std::int64_t w[4] = {1, 1, 1, 1};
  for (std::size_t i = 0; i < weights.size(); ++i) w[i] = weights[i];
  WeightedGrading g(w[0], w[1], w[2], w[3]);
  auto elim = MonomialOrder::elimination(g);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Polynomial f = Polynomial::monomial(elim, 1, Monomial::var(static_cast<int>(i)));
    f -= Polynomial::monomial(elim, 1, Monomial::var(T, static_cast<std::int32_t>(w[i])));
    gens.push_back(f);
  }
  auto gb = buchberger(gens, BuchbergerOptions{.record_transcript = false});
  auto grevlex = MonomialOrder::grevlex(g);
  GroebnerBasis<Polynomial> free;
  for (const auto& f : gb.elements) {
    bool has_t = false;
    for (const auto& t : f.terms()) has_t = has_t || t.mono[T] != 0;
    if (!has_t) free.elements.push_back(f.with_order(grevlex));
  }
  return reduce_basis(free).elements;
}

inline ToricIdeal toric_kernel(const SequenceSpec& spec) {
  ToricIdeal out;
  out.spec = spec;
  out.generators = toric_kernel_weights({spec.m0, spec.m1, spec.m2, spec.n});
  out.reduced_gb = buchberger(out.generators);
  return out;
}

}  // namespace mcres
