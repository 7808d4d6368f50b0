#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <type_traits>
#include <vector>

#include "mcres/element.hpp"

namespace mcres {

template <class E>
struct DivisionResult {
  std::vector<Polynomial> quotients;
  E remainder;
};

namespace detail {

// Prefers the latest divisor whose lead divides t.
template <class E>
const Term* find_reducer_lead(const Term& t, const std::vector<E>& divisors, std::size_t& k) {
  for (k = divisors.size(); k-- > 0;) {
    const Term& l = divisors[k].lead();
    if (l.pos == t.pos && l.mono.divides(t.mono)) return &l;
  }
  return nullptr;
}

// Full reduction of f by divisors. Quotient terms are collected only when
// q is non-null.
template <class E>
E reduce(const E& f, const std::vector<E>& divisors, std::vector<std::vector<Term>>* q) {
  E p = f;
  std::vector<Term> rem;
  if (q) q->assign(divisors.size(), {});
  while (!p.is_zero()) {
    const Term lt = p.lead();
    std::size_t k;
    if (const Term* l = find_reducer_lead(lt, divisors, k)) {
      Rational c = lt.coef / l->coef;
      Monomial m = l->mono.cofactor_in(lt.mono);
      if (q) (*q)[k].push_back(Term{c, m, 0});
      p.add_scaled(-c, m, divisors[k]);
    } else {
      rem.push_back(lt);
      p.add_scaled(Rational(-1), Monomial::one(), E::monomial(p.order(), lt.coef, lt.mono, lt.pos));
    }
  }
  return E(f.order(), std::move(rem));
}

}  // namespace detail

template <class E>
DivisionResult<E> divide(const E& f, const std::vector<E>& divisors) {
  for (const auto& g : divisors)
    if (g.is_zero()) throw Error(ErrorKind::PreconditionViolated, "zero divisor in division");
  std::vector<std::vector<Term>> q;
  E r = detail::reduce(f, divisors, &q);
  DivisionResult<E> out{{}, std::move(r)};
  for (auto& ts : q) out.quotients.emplace_back(f.order().base(), std::move(ts));
  return out;
}

template <class E>
struct SPoly {
  E spoly;
  Polynomial cofactor_f;  // coefficient times lcm / LM(f)
  Polynomial cofactor_g;
};

// S = cofactor_f * f - cofactor_g * g; nullopt when the leading positions differ.
template <class E>
std::optional<SPoly<E>> s_polynomial(const E& f, const E& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::PreconditionViolated, "zero in S-pair");
  const Term& a = f.lead();
  const Term& b = g.lead();
  if (a.pos != b.pos) return std::nullopt;
  Monomial l = lcm(a.mono, b.mono);
  const auto& base = f.order().base();
  Polynomial cf = Polynomial::monomial(base, Rational(1) / a.coef, a.mono.cofactor_in(l));
  Polynomial cg = Polynomial::monomial(base, Rational(1) / b.coef, b.mono.cofactor_in(l));
  E s = f.scaled(cf.lead().coef, cf.lead().mono);
  s.add_scaled(-cg.lead().coef, cg.lead().mono, g);
  return SPoly<E>{std::move(s), std::move(cf), std::move(cg)};
}

// One processed S-pair (i < j): cof_i * g_i - cof_j * g_j = sum_k quotients[k] * g_k.
struct PairRecord {
  std::uint32_t i = 0, j = 0;
  Polynomial cof_i, cof_j;
  std::vector<Polynomial> quotients;
  bool koszul = false;
};

template <class E>
struct GroebnerBasis {
  std::vector<E> elements;
  std::vector<PairRecord> transcript;
  bool transcript_complete = false;
};

enum class PairStrategy { Normal, Oldest };

struct BuchbergerOptions {
  bool record_transcript = true;
  PairStrategy strategy = PairStrategy::Normal;
};

namespace detail {

struct PendingPair {
  std::int64_t degree;
  std::uint32_t i, j;
};

template <class E>
std::int64_t lcm_degree(const E& a, const E& b) {
  return a.order().degree(lcm(a.lead().mono, b.lead().mono), a.lead().pos);
}

inline Polynomial tail_of(const Polynomial& f) {
  return Polynomial(f.order(), std::vector<Term>(f.terms().begin() + 1, f.terms().end()));
}

}  // namespace detail

template <class E>
GroebnerBasis<E> buchberger(const std::vector<E>& gens, const BuchbergerOptions& opt = {}) {
  constexpr bool kRing = std::is_same_v<E, Polynomial>;
  GroebnerBasis<E> gb;
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error(ErrorKind::PreconditionViolated, "zero generator");
    gb.elements.push_back(g);
  }
  auto& G = gb.elements;
  if (G.empty()) {
    gb.transcript_complete = true;
    return gb;
  }
  const MonomialOrder base = G.front().order().base();

  auto later = [&](const detail::PendingPair& a, const detail::PendingPair& b) {
    if (opt.strategy == PairStrategy::Normal && a.degree != b.degree) return a.degree > b.degree;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };
  std::priority_queue<detail::PendingPair, std::vector<detail::PendingPair>, decltype(later)> queue(
      later);
  auto add_pairs_with = [&](std::uint32_t j) {
    for (std::uint32_t i = 0; i < j; ++i)
      if (G[i].lead().pos == G[j].lead().pos)
        queue.push({detail::lcm_degree(G[i], G[j]), i, j});
  };
  for (std::uint32_t j = 1; j < G.size(); ++j) add_pairs_with(j);

  std::vector<std::vector<Term>> q;
  while (!queue.empty()) {
    auto [deg, i, j] = queue.top();
    queue.pop();
    const Term& a = G[i].lead();
    const Term& b = G[j].lead();
    if constexpr (kRing) {
      if (coprime(a.mono, b.mono)) {
        if (opt.record_transcript) {
          Rational s = Rational(1) / (a.coef * b.coef);
          PairRecord rec;
          rec.i = i;
          rec.j = j;
          rec.koszul = true;
          rec.cof_i = Polynomial::monomial(base, Rational(1) / a.coef, b.mono);
          rec.cof_j = Polynomial::monomial(base, Rational(1) / b.coef, a.mono);
          rec.quotients.assign(G.size(), Polynomial(base));
          rec.quotients[i] = detail::tail_of(G[j]).scaled(-s);
          rec.quotients[j] = detail::tail_of(G[i]).scaled(s);
          gb.transcript.push_back(std::move(rec));
        }
        continue;
      }
    }
    auto sp = *s_polynomial(G[i], G[j]);
    E r = detail::reduce(sp.spoly, G, opt.record_transcript ? &q : nullptr);
    PairRecord rec;
    if (opt.record_transcript) {
      rec.i = i;
      rec.j = j;
      rec.cof_i = std::move(sp.cofactor_f);
      rec.cof_j = std::move(sp.cofactor_g);
      for (auto& ts : q) rec.quotients.emplace_back(base, std::move(ts));
    }
    if (!r.is_zero()) {
      Rational lc = r.lead().coef;
      G.push_back(r.scaled(Rational(1) / lc));
      if (opt.record_transcript) rec.quotients.push_back(Polynomial::constant(base, lc));
      add_pairs_with(static_cast<std::uint32_t>(G.size() - 1));
    }
    if (opt.record_transcript) gb.transcript.push_back(std::move(rec));
  }
  if (opt.record_transcript) {
    for (auto& rec : gb.transcript) rec.quotients.resize(G.size(), Polynomial(base));
    gb.transcript_complete = true;
  }
  return gb;
}

template <class E>
bool is_groebner(const std::vector<E>& gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw Error(ErrorKind::PreconditionViolated, "zero generator");
  for (std::size_t j = 1; j < gens.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if constexpr (std::is_same_v<E, Polynomial>) {
        if (coprime(gens[i].lead().mono, gens[j].lead().mono)) continue;
      }
      auto sp = s_polynomial(gens[i], gens[j]);
      if (!sp) continue;
      if (!detail::reduce(sp->spoly, gens, nullptr).is_zero()) return false;
    }
  return true;
}

// Reduced basis: minimal, inter-reduced, leading coefficient +1, sorted by
// ascending leading term. The transcript is dropped.
template <class E>
GroebnerBasis<E> reduce_basis(const GroebnerBasis<E>& gb) {
  const auto& G = gb.elements;
  std::vector<E> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    const Term& l = G[k].lead();
    bool redundant = false;
    for (std::size_t h = 0; h < G.size() && !redundant; ++h) {
      if (h == k) continue;
      const Term& o = G[h].lead();
      if (o.pos != l.pos || !o.mono.divides(l.mono)) continue;
      redundant = o.mono != l.mono || h < k;
    }
    if (!redundant) minimal.push_back(G[k]);
  }
  GroebnerBasis<E> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const E& g = minimal[k];
    const Term& l = g.lead();
    E tail(g.order(), std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
    E r = detail::reduce(tail, minimal, nullptr);
    r.add_scaled(Rational(1), Monomial::one(), E::monomial(g.order(), l.coef, l.mono, l.pos));
    out.elements.push_back(r.scaled(Rational(1) / l.coef));
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const E& a, const E& b) {
    return a.order().compare(a.lead(), b.lead()) < 0;
  });
  return out;
}

template <class E>
bool ideal_member(const E& f, const std::vector<E>& gb) {
  if (f.is_zero()) return true;
  return detail::reduce(f, gb, nullptr).is_zero();
}

}  // namespace mcres
