#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mcres/error.hpp"
#include "mcres/monomial.hpp"

namespace mcres {

// Submonoid of the naturals generated by finitely many positive integers.
// Membership is tabulated once, after dividing out the gcd, up to
// m_min * m_max; everything beyond that bound is a member.
class SubSemigroup {
 public:
  explicit SubSemigroup(std::vector<std::int64_t> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw Error(ErrorKind::PreconditionViolated, "no generators");
    for (auto g : gens_)
      if (g <= 0) throw Error(ErrorKind::PreconditionViolated, "generators must be positive");
    gcd_ = 0;
    for (auto g : gens_) gcd_ = std::gcd(gcd_, g);
    auto [lo, hi] = std::minmax_element(gens_.begin(), gens_.end());
    bound_ = (*lo / gcd_) * (*hi / gcd_);
    table_.assign(static_cast<std::size_t>(bound_) + 1, 0);
    table_[0] = 1;
    for (std::int64_t s = 1; s <= bound_; ++s)
      for (auto g : gens_) {
        std::int64_t h = g / gcd_;
        if (h <= s && table_[s - h]) {
          table_[s] = 1;
          break;
        }
      }
  }

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t gcd() const { return gcd_; }

  bool contains(std::int64_t s) const {
    if (s < 0) return false;
    if (s % gcd_ != 0) return false;
    s /= gcd_;
    return s > bound_ || table_[static_cast<std::size_t>(s)];
  }

  // Largest gap (in units of the gcd), -1 when every natural is a member.
  std::int64_t frobenius() const {
    if (gcd_ != 1) throw Error(ErrorKind::GcdNotOne, "generators have gcd " + std::to_string(gcd_));
    for (std::int64_t s = bound_; s >= 0; --s)
      if (!table_[static_cast<std::size_t>(s)]) return s;
    return -1;
  }

 private:
  std::vector<std::int64_t> gens_;
  std::int64_t gcd_ = 1;
  std::int64_t bound_ = 0;
  std::vector<char> table_;
};

inline bool contains(const SubSemigroup& s, std::int64_t x) { return s.contains(x); }
inline std::int64_t frobenius(const SubSemigroup& s) { return s.frobenius(); }

inline std::vector<std::int64_t> apery_set(const SubSemigroup& s, std::int64_t a) {
  if (std::find(s.generators().begin(), s.generators().end(), a) == s.generators().end())
    throw Error(ErrorKind::PreconditionViolated, std::to_string(a) + " is not a generator");
  if (s.gcd() != 1) throw Error(ErrorKind::GcdNotOne, "Apery set needs gcd 1");
  std::vector<std::int64_t> w(static_cast<std::size_t>(a), -1);
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < a; ++x) {
    if (s.contains(x) && w[static_cast<std::size_t>(x % a)] < 0) {
      w[static_cast<std::size_t>(x % a)] = x;
      ++found;
    }
  }
  return w;
}

inline std::int64_t min_multiple_in(std::int64_t n, const SubSemigroup& s) {
  if (n <= 0) throw Error(ErrorKind::PreconditionViolated, "n must be positive");
  std::int64_t limit = *std::max_element(s.generators().begin(), s.generators().end()) + 1;
  for (std::int64_t t = 1; t <= limit; ++t)
    if (s.contains(t * n)) return t;
  throw Error(ErrorKind::PreconditionViolated, "no multiple of n in the semigroup");
}

struct SequenceSpec {
  std::int64_t m0 = 0, m1 = 0, m2 = 0, n = 0;

  WeightedGrading grading() const { return WeightedGrading(m0, m1, m2, n); }
  std::int64_t d() const { return m1 - m0; }
  SubSemigroup gamma() const { return SubSemigroup({m0, m1, m2, n}); }
  SubSemigroup gamma1() const { return SubSemigroup({m0, m1, m2}); }
  std::string str() const {
    return "(" + std::to_string(m0) + "," + std::to_string(m1) + "," + std::to_string(m2) + "," +
           std::to_string(n) + ")";
  }
  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

inline SequenceSpec validate_sequence(std::int64_t m0, std::int64_t m1, std::int64_t m2,
                                      std::int64_t n) {
  if (m0 < 1 || m1 < 1 || m2 < 1 || n < 1)
    throw Error(ErrorKind::PreconditionViolated, "entries must be positive");
  if (!(m0 < m1 && m1 < m2) || m1 - m0 != m2 - m1)
    throw Error(ErrorKind::NotArithmetic, "m0 < m1 < m2 with m1 - m0 = m2 - m1 is required");
  if (std::gcd(std::gcd(m0, m1), std::gcd(m2, n)) != 1)
    throw Error(ErrorKind::GcdNotOne, "gcd(m0,m1,m2,n) != 1");
  const std::int64_t v[4] = {m0, m1, m2, n};
  const char* names[4] = {"m0", "m1", "m2", "n"};
  for (int i = 0; i < 4; ++i) {
    std::vector<std::int64_t> others;
    for (int j = 0; j < 4; ++j)
      if (j != i) others.push_back(v[j]);
    if (SubSemigroup(others).contains(v[i]))
      throw Error(ErrorKind::NotMinimal, std::string(names[i]) + " is redundant");
  }
  return SequenceSpec{m0, m1, m2, n};
}

// Entry s is 1 iff s lies in the semigroup generated by the sequence.
inline std::vector<std::int64_t> gamma_series_truncation(const SequenceSpec& spec, std::int64_t N) {
  SubSemigroup g = spec.gamma();
  std::vector<std::int64_t> out(static_cast<std::size_t>(N) + 1);
  for (std::int64_t s = 0; s <= N; ++s) out[static_cast<std::size_t>(s)] = g.contains(s) ? 1 : 0;
  return out;
}

}  // namespace mcres
