#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "mcres/error.hpp"
#include "mcres/rational.hpp"

namespace mcres {

// Variables X0, X1, X2, Y and the auxiliary elimination variable T.
inline constexpr int kNumVars = 5;
enum Var : int { X0 = 0, X1 = 1, X2 = 2, Y = 3, T = 4 };

inline const char* var_name(int v) {
  static constexpr const char* names[kNumVars] = {"X0", "X1", "X2", "Y", "T"};
  return names[v];
}

struct Monomial {
  std::array<std::int32_t, kNumVars> e{};

  static Monomial one() { return {}; }
  static Monomial var(int v, std::int32_t k = 1) {
    Monomial m;
    m.e[v] = k;
    return m;
  }
  static Monomial of(std::int32_t x0, std::int32_t x1, std::int32_t x2, std::int32_t y,
                     std::int32_t t = 0) {
    Monomial m;
    m.e = {x0, x1, x2, y, t};
    for (auto k : m.e)
      if (k < 0) throw Error(ErrorKind::PreconditionViolated, "negative exponent");
    return m;
  }

  bool is_one() const { return e == std::array<std::int32_t, kNumVars>{}; }
  std::int32_t operator[](int v) const { return e[v]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) {
      if (__builtin_add_overflow(a.e[i], b.e[i], &m.e[i]) || m.e[i] > (1 << 28))
        throw Error(ErrorKind::Overflow, "exponent");
    }
    return m;
  }

  bool divides(const Monomial& b) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  // b / *this, requires divides(b)
  Monomial cofactor_in(const Monomial& b) const {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = b.e[i] - e[i];
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return m;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i)
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
  }

  std::int32_t total_degree() const {
    std::int32_t s = 0;
    for (auto k : e) s += k;
    return s;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += var_name(i);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }
};

struct WeightedGrading {
  std::array<std::int64_t, kNumVars> w{1, 1, 1, 1, 1};

  WeightedGrading() = default;
  WeightedGrading(std::int64_t m0, std::int64_t m1, std::int64_t m2, std::int64_t n)
      : w{m0, m1, m2, n, 1} {
    for (auto x : w)
      if (x <= 0) throw Error(ErrorKind::PreconditionViolated, "weights must be positive");
  }

  std::int64_t degree(const Monomial& m) const {
    std::int64_t d = 0;
    for (int i = 0; i < kNumVars; ++i) d += w[i] * m.e[i];
    return d;
  }
  friend bool operator==(const WeightedGrading&, const WeightedGrading&) = default;
};

inline std::int64_t weighted_degree(const WeightedGrading& g, const Monomial& m) {
  return g.degree(m);
}

enum class Cmp : int { LT = -1, EQ = 0, GT = 1 };

// Term of a polynomial or of a free-module element (pos = basis index).
struct Term {
  Rational coef;
  Monomial mono;
  std::uint32_t pos = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Weighted degree first. Ties: reverse lexicographic, scanning X0, X1, X2, Y
// and preferring the smaller exponent at the first difference. The
// elimination kind inserts "larger power of T wins" between the two.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Elimination };

  MonomialOrder() = default;
  explicit MonomialOrder(WeightedGrading g, Kind k = Kind::Grevlex) : grading_(g), kind_(k) {}

  static MonomialOrder grevlex(const WeightedGrading& g) { return MonomialOrder(g, Kind::Grevlex); }
  static MonomialOrder elimination(const WeightedGrading& g) {
    return MonomialOrder(g, Kind::Elimination);
  }

  const WeightedGrading& grading() const { return grading_; }
  Kind kind() const { return kind_; }
  const MonomialOrder& base() const { return *this; }

  int compare(const Monomial& a, const Monomial& b) const {
    std::int64_t da = grading_.degree(a), db = grading_.degree(b);
    if (da != db) return da > db ? 1 : -1;
    if (kind_ == Kind::Elimination && a.e[T] != b.e[T]) return a.e[T] > b.e[T] ? 1 : -1;
    for (int i = 0; i < kNumVars; ++i) {
      if (i == T) continue;
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
  int compare(const Term& a, const Term& b) const { return compare(a.mono, b.mono); }
  std::int64_t degree(const Monomial& m, std::uint32_t = 0) const { return grading_.degree(m); }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  WeightedGrading grading_;
  Kind kind_ = Kind::Grevlex;
};

inline Cmp compare(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return static_cast<Cmp>(o.compare(a, b));
}

}  // namespace mcres
