#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mcres/monomial.hpp"

namespace mcres {

// Sparse linear combination of terms kept strictly descending in Order.
// Order is MonomialOrder for polynomials and ModuleOrder for free-module
// elements; both expose compare(Term, Term) and base().
template <class Order>
class Element {
 public:
  using order_type = Order;

  Element() = default;
  explicit Element(Order o) : order_(std::move(o)) {}
  Element(Order o, std::vector<Term> ts) : order_(std::move(o)), terms_(std::move(ts)) {
    canonicalize();
  }

  static Element constant(Order o, const Rational& c) {
    Element e(std::move(o));
    if (!c.is_zero()) e.terms_.push_back(Term{c, Monomial::one(), 0});
    return e;
  }
  static Element monomial(Order o, const Rational& c, const Monomial& m, std::uint32_t pos = 0) {
    Element e(std::move(o));
    if (!c.is_zero()) e.terms_.push_back(Term{c, m, pos});
    return e;
  }

  const Order& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  // Same terms read in another order (re-sorted).
  Element with_order(Order o) const { return Element(std::move(o), terms_); }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  Element operator-() const {
    Element r(order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{-t.coef, t.mono, t.pos});
    return r;
  }
  friend Element operator+(const Element& a, const Element& b) {
    Element r = a;
    r.add_scaled(Rational(1), Monomial::one(), b);
    return r;
  }
  friend Element operator-(const Element& a, const Element& b) {
    Element r = a;
    r.add_scaled(Rational(-1), Monomial::one(), b);
    return r;
  }
  Element& operator+=(const Element& b) {
    add_scaled(Rational(1), Monomial::one(), b);
    return *this;
  }
  Element& operator-=(const Element& b) {
    add_scaled(Rational(-1), Monomial::one(), b);
    return *this;
  }

  Element scaled(const Rational& c, const Monomial& m = Monomial::one()) const {
    Element r(order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coef * c, t.mono * m, t.pos});
    return r;
  }

  // this += c * m * g. Multiplication by a monomial preserves the order, so
  // this is a single merge.
  void add_scaled(const Rational& c, const Monomial& m, const Element& g) {
    if (c.is_zero() || g.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    for (const auto& gt : g.terms_) {
      Term s{gt.coef * c, gt.mono * m, gt.pos};
      while (it != terms_.end() && order_.compare(*it, s) > 0) out.push_back(*it++);
      if (it != terms_.end() && order_.compare(*it, s) == 0) {
        Rational sum = it->coef + s.coef;
        if (!sum.is_zero()) out.push_back(Term{sum, s.mono, s.pos});
        ++it;
      } else {
        out.push_back(std::move(s));
      }
    }
    out.insert(out.end(), it, terms_.end());
    terms_ = std::move(out);
  }

  // Multiply by a polynomial (coefficients from the base ring).
  template <class P>
  Element times(const P& p) const {
    Element r(order_);
    for (const auto& t : p.terms()) r.add_scaled(t.coef, t.mono, *this);
    return r;
  }

  // Weighted degree shared by all terms (module terms add the twist of their
  // position), or nullopt.
  template <class TwistFn>
  std::optional<std::int64_t> homogeneous_degree(const WeightedGrading& g, TwistFn twist) const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = g.degree(terms_.front().mono) + twist(terms_.front().pos);
    for (const auto& t : terms_)
      if (g.degree(t.mono) + twist(t.pos) != d) return std::nullopt;
    return d;
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a, b) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && order_.compare(out.back(), t) == 0) {
        out.back().coef += t.coef;
        if (out.back().coef.is_zero()) out.pop_back();
      } else if (!t.coef.is_zero()) {
        out.push_back(t);
      }
    }
    terms_ = std::move(out);
  }

  Order order_{};
  std::vector<Term> terms_;
};

using Polynomial = Element<MonomialOrder>;

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times(b); }

inline std::optional<std::int64_t> is_homogeneous(const Polynomial& f, const WeightedGrading& g) {
  return f.homogeneous_degree(g, [](std::uint32_t) { return std::int64_t{0}; });
}

inline bool is_constant(const Polynomial& f) {
  return f.size() == 1 && f.lead().mono.is_one();
}

// Induced order on a free module. Level-one Schreyer frames sit over the
// ideal generators; deeper frames point at the frame below.
struct SchreyerFrame {
  MonomialOrder base;
  std::shared_ptr<const SchreyerFrame> prev;
  std::vector<Monomial> lead_mono;
  std::vector<std::uint32_t> lead_pos;
  std::vector<Monomial> total;

  static std::shared_ptr<const SchreyerFrame> make(MonomialOrder base,
                                                   std::shared_ptr<const SchreyerFrame> prev,
                                                   std::vector<Monomial> lead_mono,
                                                   std::vector<std::uint32_t> lead_pos) {
    auto f = std::make_shared<SchreyerFrame>();
    f->base = std::move(base);
    f->prev = std::move(prev);
    f->lead_mono = std::move(lead_mono);
    f->lead_pos = std::move(lead_pos);
    f->total.resize(f->lead_mono.size());
    for (std::size_t i = 0; i < f->lead_mono.size(); ++i)
      f->total[i] = f->prev ? f->lead_mono[i] * f->prev->total[f->lead_pos[i]] : f->lead_mono[i];
    return f;
  }

  int compare(const Monomial& a, std::uint32_t i, const Monomial& b, std::uint32_t j) const {
    if (i == j) return base.compare(a, b);
    int c = base.compare(a * total[i], b * total[j]);
    if (c != 0) return c;
    if (prev) {
      c = prev->compare(a * lead_mono[i], lead_pos[i], b * lead_mono[j], lead_pos[j]);
      if (c != 0) return c;
    }
    return i < j ? 1 : -1;
  }
};

class ModuleOrder {
 public:
  ModuleOrder() = default;
  static ModuleOrder position_over_term(MonomialOrder base) {
    ModuleOrder o;
    o.base_ = std::move(base);
    return o;
  }
  static ModuleOrder schreyer(std::shared_ptr<const SchreyerFrame> f) {
    ModuleOrder o;
    o.base_ = f->base;
    o.frame_ = std::move(f);
    return o;
  }

  const MonomialOrder& base() const { return base_; }
  const std::shared_ptr<const SchreyerFrame>& frame() const { return frame_; }
  bool is_schreyer() const { return frame_ != nullptr; }

  int compare(const Term& a, const Term& b) const {
    if (frame_) return frame_->compare(a.mono, a.pos, b.mono, b.pos);
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return base_.compare(a.mono, b.mono);
  }
  // Weighted degree of the term's image down in the ring (Schreyer), or of
  // the bare monomial (position over term).
  std::int64_t degree(const Monomial& m, std::uint32_t pos) const {
    if (frame_) return base_.grading().degree(m) + base_.grading().degree(frame_->total[pos]);
    return base_.grading().degree(m);
  }

 private:
  MonomialOrder base_;
  std::shared_ptr<const SchreyerFrame> frame_;
};

using ModuleElement = Element<ModuleOrder>;

inline ModuleElement embed(const Polynomial& f, std::uint32_t pos, const ModuleOrder& o) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back(Term{t.coef, t.mono, pos});
  return ModuleElement(o, std::move(ts));
}

// Component at one position, as a polynomial.
inline Polynomial component(const ModuleElement& v, std::uint32_t pos) {
  std::vector<Term> ts;
  for (const auto& t : v.terms())
    if (t.pos == pos) ts.push_back(Term{t.coef, t.mono, 0});
  return Polynomial(v.order().base(), std::move(ts));
}

}  // namespace mcres
