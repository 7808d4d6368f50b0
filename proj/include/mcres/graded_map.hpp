#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mcres/element.hpp"
#include "mcres/text.hpp"

namespace mcres {

struct GradedFreeModule {
  std::vector<std::int64_t> twists;
  std::size_t rank() const { return twists.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

// Matrix over the polynomial ring, target-rank rows by source-rank columns.
// Entry (i, j) is homogeneous of degree source[j] - target[i] >= 0.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(MonomialOrder order, GradedFreeModule source, GradedFreeModule target,
            std::vector<Polynomial> entries)
      : order_(std::move(order)),
        source_(std::move(source)),
        target_(std::move(target)),
        entries_(std::move(entries)) {
    if (entries_.size() != rows() * cols())
      throw Error(ErrorKind::ShapeMismatch, "entry count does not match the ranks");
    validate();
  }
  static GradedMap zero(MonomialOrder order, GradedFreeModule source, GradedFreeModule target) {
    std::vector<Polynomial> e(source.rank() * target.rank(), Polynomial(order));
    return GradedMap(order, std::move(source), std::move(target), std::move(e));
  }

  const MonomialOrder& order() const { return order_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }

  void validate() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) {
        const Polynomial& f = at(i, j);
        if (f.is_zero()) continue;
        auto d = is_homogeneous(f, order_.grading());
        std::int64_t want = source_.twists[j] - target_.twists[i];
        if (!d || *d != want || want < 0)
          throw Error(ErrorKind::HomogeneityBroken,
                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                          to_string(f) + " should have degree " + std::to_string(want));
      }
  }

  // Elementary operations used by the minimalization calculus.
  void add_row_multiple(std::size_t i, std::size_t j, const Polynomial& a) {
    for (std::size_t c = 0; c < cols(); ++c)
      if (!at(j, c).is_zero()) at(i, c) += a * at(j, c);
  }
  void add_col_multiple(std::size_t i, std::size_t j, const Polynomial& a) {
    for (std::size_t r = 0; r < rows(); ++r)
      if (!at(r, j).is_zero()) at(r, i) += at(r, j) * a;
  }
  void scale_row(std::size_t i, const Rational& c) {
    for (std::size_t k = 0; k < cols(); ++k) at(i, k) = at(i, k).scaled(c);
  }
  void scale_col(std::size_t j, const Rational& c) {
    for (std::size_t k = 0; k < rows(); ++k) at(k, j) = at(k, j).scaled(c);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols(); ++c) std::swap(at(i, c), at(j, c));
    std::swap(target_.twists[i], target_.twists[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows(); ++r) std::swap(at(r, i), at(r, j));
    std::swap(source_.twists[i], source_.twists[j]);
  }
  void delete_row(std::size_t i) {
    std::vector<Polynomial> e;
    for (std::size_t r = 0; r < rows(); ++r)
      if (r != i)
        for (std::size_t c = 0; c < cols(); ++c) e.push_back(at(r, c));
    target_.twists.erase(target_.twists.begin() + static_cast<std::ptrdiff_t>(i));
    entries_ = std::move(e);
  }
  void delete_col(std::size_t j) {
    std::vector<Polynomial> e;
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c)
        if (c != j) e.push_back(at(r, c));
    source_.twists.erase(source_.twists.begin() + static_cast<std::ptrdiff_t>(j));
    entries_ = std::move(e);
  }

  std::vector<Polynomial> column(std::size_t j) const {
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < rows(); ++r) out.push_back(at(r, j));
    return out;
  }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
  }

 private:
  MonomialOrder order_;
  GradedFreeModule source_, target_;
  std::vector<Polynomial> entries_;
};

// a o b, where b: F -> G and a: G -> H.
inline GradedMap compose(const GradedMap& a, const GradedMap& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "ranks do not chain");
  std::vector<Polynomial> e;
  e.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s(a.order());
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) s += a.at(i, k) * b.at(k, j);
      e.push_back(std::move(s));
    }
  return GradedMap(a.order(), b.source(), a.target(), std::move(e));
}

inline bool compose_zero(const GradedMap& a, const GradedMap& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "ranks do not chain");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s(a.order());
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) s += a.at(i, k) * b.at(k, j);
      if (!s.is_zero()) return false;
    }
  return true;
}

inline bool entries_in_maximal_ideal(const GradedMap& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& t : m.at(i, j).terms())
        if (t.mono.is_one()) return false;
  return true;
}

inline std::string pretty(const GradedMap& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = to_string(m.at(i, j));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
      os << (j + 1 < m.cols() ? " | " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace mcres
