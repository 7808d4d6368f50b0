#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <type_traits>
#include <vector>

#include "mcres/graded_map.hpp"
#include "mcres/groebner.hpp"

namespace mcres {

// maps[k] is the differential F_{k+1} -> F_k, with F_0 = R at twist 0.
struct FreeResolution {
  std::vector<GradedMap> maps;
  bool minimal = false;

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r{1};
    for (const auto& m : maps) r.push_back(m.cols());
    return r;
  }
  // Ranks of F_1, F_2, ... (the Betti triple for these curves).
  std::vector<std::size_t> betti_totals() const {
    std::vector<std::size_t> r;
    for (const auto& m : maps) r.push_back(m.cols());
    return r;
  }
  std::size_t length() const { return maps.size(); }
};

namespace detail {

template <class E>
std::int64_t element_degree(const E& g) {
  return g.order().degree(g.lead().mono, g.lead().pos);
}

template <class E>
std::shared_ptr<const SchreyerFrame> frame_over(const std::vector<E>& gb) {
  std::vector<Monomial> mono;
  std::vector<std::uint32_t> pos;
  for (const auto& g : gb) {
    mono.push_back(g.lead().mono);
    pos.push_back(g.lead().pos);
  }
  const MonomialOrder& base = gb.front().order().base();
  if constexpr (std::is_same_v<E, Polynomial>) {
    return SchreyerFrame::make(base, nullptr, std::move(mono), std::move(pos));
  } else {
    return SchreyerFrame::make(base, gb.front().order().frame(), std::move(mono), std::move(pos));
  }
}

template <class E>
std::vector<ModuleElement> syzygy_columns(const GroebnerBasis<E>& gb) {
  if (!gb.transcript_complete) throw Error(ErrorKind::TranscriptIncomplete, "no transcript");
  std::vector<ModuleElement> cols;
  if (gb.elements.empty()) return cols;
  auto order = ModuleOrder::schreyer(frame_over(gb.elements));
  const std::size_t t = gb.elements.size();
  for (const auto& rec : gb.transcript) {
    if (rec.quotients.size() != t)
      throw Error(ErrorKind::TranscriptIncomplete, "quotient list has the wrong length");
    std::vector<Term> ts;
    for (std::size_t k = 0; k < t; ++k)
      for (const auto& term : rec.quotients[k].terms())
        ts.push_back(Term{term.coef, term.mono, static_cast<std::uint32_t>(k)});
    for (const auto& term : rec.cof_i.terms()) ts.push_back(Term{-term.coef, term.mono, rec.i});
    for (const auto& term : rec.cof_j.terms()) ts.push_back(Term{term.coef, term.mono, rec.j});
    ModuleElement c(order, std::move(ts));
    if (!c.is_zero()) cols.push_back(std::move(c));
  }
  return cols;
}

template <class E>
std::vector<std::int64_t> element_degrees(const std::vector<E>& gb) {
  std::vector<std::int64_t> d;
  for (const auto& g : gb) d.push_back(element_degree(g));
  return d;
}

inline GradedMap map_from_columns(const std::vector<ModuleElement>& cols,
                                  const std::vector<std::int64_t>& target_twists,
                                  const MonomialOrder& base) {
  GradedFreeModule src{element_degrees(cols)};
  GradedFreeModule tgt{target_twists};
  std::vector<Polynomial> e(tgt.rank() * src.rank(), Polynomial(base));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::vector<Term>> comp(tgt.rank());
    for (const auto& t : cols[c].terms()) comp[t.pos].push_back(Term{t.coef, t.mono, 0});
    for (std::size_t r = 0; r < tgt.rank(); ++r)
      e[r * src.rank() + c] = Polynomial(base, std::move(comp[r]));
  }
  return GradedMap(base, std::move(src), std::move(tgt), std::move(e));
}

// Lexicographic comparison with X0 > X1 > X2 > Y, used to sort bases so that
// iterated Schreyer syzygies lose one variable per step.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

template <class E>
void sort_for_schreyer(std::vector<E>& v) {
  std::stable_sort(v.begin(), v.end(), [](const E& a, const E& b) {
    if (a.lead().pos != b.lead().pos) return a.lead().pos < b.lead().pos;
    return lex_greater(a.lead().mono, b.lead().mono);
  });
}

template <class E>
std::vector<E> drop_redundant_leads(const std::vector<E>& v) {
  std::vector<E> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Term& l = v[k].lead();
    bool redundant = false;
    for (std::size_t h = 0; h < v.size() && !redundant; ++h) {
      if (h == k) continue;
      const Term& o = v[h].lead();
      if (o.pos != l.pos || !o.mono.divides(l.mono)) continue;
      redundant = o.mono != l.mono || h < k;
    }
    if (!redundant) out.push_back(v[k]);
  }
  return out;
}

}  // namespace detail

// Columns of Schreyer's theorem, one per recorded S-pair, in transcript order.
template <class E>
GradedMap schreyer_syzygies(const GroebnerBasis<E>& gb) {
  auto cols = detail::syzygy_columns(gb);
  const MonomialOrder& base = gb.elements.front().order().base();
  auto tw = detail::element_degrees(gb.elements);
  if (cols.empty()) return GradedMap::zero(base, GradedFreeModule{}, GradedFreeModule{tw});
  return detail::map_from_columns(cols, tw, base);
}

struct BuildOptions {
  PairStrategy strategy = PairStrategy::Normal;
};

inline FreeResolution build_resolution(const std::vector<Polynomial>& gens,
                                       const BuildOptions& opt = {}) {
  if (gens.empty()) throw Error(ErrorKind::PreconditionViolated, "no generators");
  const MonomialOrder base = gens.front().order();
  for (const auto& g : gens)
    if (!is_homogeneous(g, base.grading()))
      throw Error(ErrorKind::HomogeneityBroken, "generator " + to_string(g) + " is not homogeneous");

  BuchbergerOptions bopt{.record_transcript = true, .strategy = opt.strategy};
  auto G = reduce_basis(buchberger(gens, BuchbergerOptions{.record_transcript = false,
                                                           .strategy = opt.strategy}))
               .elements;
  detail::sort_for_schreyer(G);
  auto gb = buchberger(G, bopt);

  FreeResolution res;
  res.maps.push_back(GradedMap(base, GradedFreeModule{detail::element_degrees(gb.elements)},
                               GradedFreeModule{{0}}, gb.elements));

  auto cols = detail::drop_redundant_leads(detail::syzygy_columns(gb));
  std::vector<std::int64_t> tw = detail::element_degrees(gb.elements);
  while (!cols.empty()) {
    detail::sort_for_schreyer(cols);
    auto mgb = buchberger(cols, bopt);
    res.maps.push_back(detail::map_from_columns(mgb.elements, tw, base));
    tw = detail::element_degrees(mgb.elements);
    cols = detail::drop_redundant_leads(detail::syzygy_columns(mgb));
  }
  return res;
}

// Invertible change of basis given as a product f_1 f_2 ... f_k of factors.
struct ElementaryFactor {
  enum class Kind { Add, Swap, Scale };
  Kind kind = Kind::Add;
  std::size_t i = 0, j = 0;
  Polynomial alpha;  // Add: the (i, j) entry
  Rational unit{1};  // Scale: the diagonal entry at i

  static ElementaryFactor add(std::size_t i, std::size_t j, Polynomial a) {
    return ElementaryFactor{Kind::Add, i, j, std::move(a), Rational(1)};
  }
  static ElementaryFactor swap(std::size_t i, std::size_t j) {
    return ElementaryFactor{Kind::Swap, i, j, Polynomial(), Rational(1)};
  }
  static ElementaryFactor scale(std::size_t i, Rational c) {
    return ElementaryFactor{Kind::Scale, i, i, Polynomial(), c};
  }
  ElementaryFactor inverse() const {
    switch (kind) {
      case Kind::Add: return add(i, j, -alpha);
      case Kind::Swap: return *this;
      case Kind::Scale: return scale(i, Rational(1) / unit);
    }
    return *this;
  }
};

using ElementaryProduct = std::vector<ElementaryFactor>;

inline ElementaryProduct inverse(const ElementaryProduct& p) {
  ElementaryProduct out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// F_position gets the new basis described by P: the incoming map becomes
// P * M and the outgoing map M' * P^{-1}.
inline FreeResolution transform_complex(FreeResolution res, std::size_t position,
                                        const ElementaryProduct& P) {
  if (position == 0 || position > res.maps.size())
    throw Error(ErrorKind::ShapeMismatch, "no free module at position " + std::to_string(position));
  GradedMap& out = res.maps[position - 1];
  GradedMap* in = position < res.maps.size() ? &res.maps[position] : nullptr;
  const std::size_t rank = out.cols();
  const auto& tw = out.source().twists;
  for (auto it = P.rbegin(); it != P.rend(); ++it) {
    const ElementaryFactor& f = *it;
    if (f.i >= rank || f.j >= rank)
      throw Error(ErrorKind::ShapeMismatch, "factor index outside the module rank");
    switch (f.kind) {
      case ElementaryFactor::Kind::Add: {
        if (f.i == f.j) throw Error(ErrorKind::NotElementary, "E_ii is not elementary");
        if (f.alpha.is_zero()) break;
        auto d = is_homogeneous(f.alpha, out.order().grading());
        if (!d || *d != tw[f.j] - tw[f.i])
          throw Error(ErrorKind::HomogeneityBroken,
                      "factor " + to_string(f.alpha) + " has the wrong degree for twists");
        if (in) in->add_row_multiple(f.i, f.j, f.alpha);
        out.add_col_multiple(f.j, f.i, -f.alpha);
        break;
      }
      case ElementaryFactor::Kind::Swap:
        if (f.i == f.j) break;
        if (in) in->swap_rows(f.i, f.j);
        out.swap_cols(f.i, f.j);
        break;
      case ElementaryFactor::Kind::Scale:
        if (f.unit.is_zero()) throw Error(ErrorKind::NotElementary, "zero scaling");
        if (in) in->scale_row(f.i, f.unit);
        out.scale_col(f.i, Rational(1) / f.unit);
        break;
    }
  }
  res.minimal = false;
  return res;
}

inline FreeResolution prune_unit(FreeResolution res, std::size_t step, std::size_t l,
                                 std::size_t m) {
  if (step >= res.maps.size()) throw Error(ErrorKind::ShapeMismatch, "no such map");
  if (step == 0) throw Error(ErrorKind::PreconditionViolated, "cannot prune the ring itself");
  GradedMap& A = res.maps[step];
  if (l >= A.rows() || m >= A.cols()) throw Error(ErrorKind::ShapeMismatch, "entry out of range");
  if (!is_constant(A.at(l, m)))
    throw Error(ErrorKind::PreconditionViolated, "entry is not a nonzero constant");
  for (std::size_t c = 0; c < A.cols(); ++c)
    if (c != m && !A.at(l, c).is_zero())
      throw Error(ErrorKind::PreconditionViolated, "row of the unit is not cleared");
  for (std::size_t r = 0; r < A.rows(); ++r)
    if (r != l && !A.at(r, m).is_zero())
      throw Error(ErrorKind::PreconditionViolated, "column of the unit is not cleared");
  A.delete_row(l);
  A.delete_col(m);
  res.maps[step - 1].delete_col(l);
  if (step + 1 < res.maps.size()) res.maps[step + 1].delete_row(m);
  while (!res.maps.empty() && res.maps.back().cols() == 0) res.maps.pop_back();
  return res;
}

inline FreeResolution minimalize(FreeResolution res) {
  for (;;) {
    bool found = false;
    std::size_t k = 0, l = 0, m = 0;
    for (k = 0; k < res.maps.size() && !found; ++k) {
      const GradedMap& A = res.maps[k];
      for (l = 0; l < A.rows() && !found; ++l)
        for (m = 0; m < A.cols() && !found; ++m)
          if (is_constant(A.at(l, m))) found = true;
    }
    if (!found) break;
    --k, --l, --m;
    if (k == 0) throw Error(ErrorKind::PreconditionViolated, "a generator of the ideal is a unit");
    Rational c = res.maps[k].at(l, m).lead().coef;
    res = transform_complex(std::move(res), k + 1, {ElementaryFactor::scale(m, c)});
    ElementaryProduct cols;
    for (std::size_t j = 0; j < res.maps[k].cols(); ++j)
      if (j != m && !res.maps[k].at(l, j).is_zero())
        cols.push_back(ElementaryFactor::add(m, j, res.maps[k].at(l, j)));
    if (!cols.empty()) res = transform_complex(std::move(res), k + 1, cols);
    ElementaryProduct rows;
    for (std::size_t i = 0; i < res.maps[k].rows(); ++i)
      if (i != l && !res.maps[k].at(i, m).is_zero())
        rows.push_back(ElementaryFactor::add(i, l, -res.maps[k].at(i, m)));
    if (!rows.empty()) res = transform_complex(std::move(res), k, rows);
    res = prune_unit(std::move(res), k, l, m);
  }
  res.minimal = true;
  return res;
}

struct BettiTable {
  std::map<std::pair<std::size_t, std::int64_t>, std::int64_t> entries;
  std::vector<std::int64_t> totals;
};

inline bool is_minimal(const FreeResolution& res) {
  for (const auto& m : res.maps)
    if (!entries_in_maximal_ideal(m)) return false;
  return true;
}

inline BettiTable betti_table(const FreeResolution& res) {
  if (!is_minimal(res))
    throw Error(ErrorKind::NotMinimalResolution, "a map has a unit entry");
  BettiTable b;
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    b.totals.push_back(static_cast<std::int64_t>(res.maps[i].cols()));
    for (auto t : res.maps[i].source().twists) ++b.entries[{i, t}];
  }
  return b;
}

// K(z) = 1 - sum z^{twists of F_1} + sum z^{twists of F_2} - ...
using IntSeries = std::map<std::int64_t, std::int64_t>;

inline IntSeries hilbert_numerator(const FreeResolution& res) {
  IntSeries k{{0, 1}};
  std::int64_t sign = -1;
  for (const auto& m : res.maps) {
    for (auto t : m.source().twists) k[t] += sign;
    sign = -sign;
  }
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

// Coefficients of K(z) / prod (1 - z^w) up to degree N.
inline std::vector<std::int64_t> hilbert_series_truncation(const IntSeries& K,
                                                           const std::vector<std::int64_t>& weights,
                                                           std::int64_t N) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& [d, c] : K)
    if (d <= N) s[static_cast<std::size_t>(d)] += c;
  for (auto w : weights)
    for (std::int64_t d = w; d <= N; ++d) s[static_cast<std::size_t>(d)] += s[static_cast<std::size_t>(d - w)];
  return s;
}

}  // namespace mcres
