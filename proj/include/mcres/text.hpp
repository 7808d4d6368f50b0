#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "mcres/element.hpp"

namespace mcres {

// Canonical rendering, e.g. "X1^2 - X0*X2". Terms follow the polynomial's
// order, so the text is stable and parses back to the same value.
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = t.coef < Rational(0);
    Rational a = neg ? -t.coef : t.coef;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += t.mono.str();
    }
  }
  return s;
}

using ParamEnv = std::map<std::string, std::int64_t, std::less<>>;
// Named polynomials usable as atoms, e.g. "xi" or "psi0" in matrix templates.
using NamedPolys = std::map<std::string, Polynomial, std::less<>>;

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view src, const MonomialOrder& order, const ParamEnv* env,
             const NamedPolys* named = nullptr)
      : src_(src), order_(order), env_(env), named_(named) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  std::int64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, src_[pos_] - '0', &v))
        fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(src_.substr(start, pos_ - start));
  }
  std::int64_t param(const std::string& name) {
    if (env_) {
      auto it = env_->find(name);
      if (it != env_->end()) return it->second;
    }
    fail("unknown parameter '" + name + "'");
  }

  // Integer expressions inside exponents: sums of integers, parameters and
  // integer multiples of parameters.
  std::int64_t int_term() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t k = number();
      if (eat('*')) return k * (std::isdigit(static_cast<unsigned char>(peek())) ? number() : param(ident()));
      return k;
    }
    if (eat('(')) {
      std::int64_t v = int_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    return param(ident());
  }
  std::int64_t int_expr() {
    std::int64_t sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    std::int64_t v = sign * int_term();
    for (;;) {
      if (eat('+')) v += int_term();
      else if (eat('-')) v -= int_term();
      else return v;
    }
  }
  std::int64_t exponent() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (eat('(')) {
      std::int64_t v = int_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    return param(ident());
  }

  Polynomial factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t n = number();
      std::int64_t d = 1;
      if (eat('/')) d = number();
      return Polynomial::constant(order_, Rational(n, d));
    }
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) {
        std::int64_t k = exponent();
        if (k < 0) fail("negative power");
        Polynomial r = Polynomial::constant(order_, 1);
        for (std::int64_t i = 0; i < k; ++i) r = r * p;
        return r;
      }
      return p;
    }
    std::string name = ident();
    if (named_) {
      auto it = named_->find(name);
      if (it != named_->end()) {
        if (peek() == '^') fail("powers of named polynomials need parentheses");
        return it->second;
      }
    }
    int v = -1;
    for (int i = 0; i < kNumVars; ++i)
      if (name == var_name(i)) v = i;
    if (v < 0) fail("unknown variable '" + name + "'");
    std::int64_t k = 1;
    if (eat('^')) k = exponent();
    if (k < 0) fail("negative exponent");
    if (k > (1 << 28)) fail("exponent too large");
    return Polynomial::monomial(order_, 1, Monomial::var(v, static_cast<std::int32_t>(k)));
  }
  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  Polynomial expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  const MonomialOrder& order_;
  const ParamEnv* env_;
  const NamedPolys* named_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view src, const MonomialOrder& order,
                                   const ParamEnv* env = nullptr) {
  return detail::PolyParser(src, order, env).parse();
}

inline Polynomial parse_polynomial(std::string_view src, const MonomialOrder& order,
                                   const ParamEnv& env, const NamedPolys& named) {
  return detail::PolyParser(src, order, &env, &named).parse();
}

}  // namespace mcres
