#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcres/groebner.hpp"
#include "mcres/semigroup.hpp"
#include "mcres/text.hpp"
#include "mcres/toric.hpp"

#ifndef MCRES_DATA_DIR
#define MCRES_DATA_DIR "data"
#endif

namespace mcres {

struct CaseParameters {
  int r = 0, rp = 0;
  std::int64_t lambda = 0, mu = 0, nu = 0, q = 0, qp = 0, v = 0, w = 0;
  bool W_nonempty = false;

  ParamEnv env() const {
    return {{"r", r}, {"rp", rp}, {"lambda", lambda}, {"mu", mu}, {"nu", nu},
            {"q", q}, {"qp", qp}, {"v", v}, {"w", w}};
  }
  std::string str() const {
    return "r=" + std::to_string(r) + " r'=" + std::to_string(rp) +
           " lambda=" + std::to_string(lambda) + " mu=" + std::to_string(mu) +
           " nu=" + std::to_string(nu) + " q=" + std::to_string(q) + " q'=" + std::to_string(qp) +
           " v=" + std::to_string(v) + " w=" + std::to_string(w) +
           " W=" + (W_nonempty ? "nonempty" : "empty");
  }
  friend bool operator==(const CaseParameters&, const CaseParameters&) = default;
};

inline void to_json(nlohmann::json& j, const CaseParameters& p) {
  j = nlohmann::json{{"r", p.r},   {"rp", p.rp}, {"lambda", p.lambda}, {"mu", p.mu},
                     {"nu", p.nu}, {"q", p.q},   {"qp", p.qp},         {"v", p.v},
                     {"w", p.w},   {"W_nonempty", p.W_nonempty}};
}

struct BettiTriple {
  std::int64_t b0 = 0, b1 = 0, b2 = 0;
  std::vector<std::int64_t> vec() const { return {b0, b1, b2}; }
  std::string str() const {
    return "[" + std::to_string(b0) + "," + std::to_string(b1) + "," + std::to_string(b2) + "]";
  }
  friend bool operator==(const BettiTriple&, const BettiTriple&) = default;
  friend auto operator<=>(const BettiTriple&, const BettiTriple&) = default;
};

// The eight triples allowed by the classification.
inline const std::vector<BettiTriple>& known_triples() {
  static const std::vector<BettiTriple> t{{3, 3, 1}, {4, 5, 2}, {4, 6, 3}, {5, 5, 1},
                                          {5, 6, 2}, {5, 7, 3}, {6, 8, 3}, {6, 9, 4}};
  return t;
}

// ---------------------------------------------------------------------------
// Generator templates

namespace detail {

inline Polynomial mono_poly(const MonomialOrder& o, std::int64_t e0, std::int64_t e1,
                            std::int64_t e2, std::int64_t ey) {
  for (auto e : {e0, e1, e2, ey})
    if (e < 0) throw Error(ErrorKind::DegreeImbalance, "negative exponent in a template");
  Monomial m;
  m.e = {static_cast<std::int32_t>(e0), static_cast<std::int32_t>(e1),
         static_cast<std::int32_t>(e2), static_cast<std::int32_t>(ey), 0};
  return Polynomial::monomial(o, 1, m);
}

inline Polynomial x_index(const MonomialOrder& o, int i) {
  return Polynomial::monomial(o, 1, Monomial::var(i));
}

}  // namespace detail

// Named generators xi, phi0, phi1, psi0, psi1, theta (the psi family only
// when W is nonempty), in that order.
inline std::vector<std::pair<std::string, Polynomial>> patil_named_generators(
    const CaseParameters& p, const SequenceSpec& spec) {
  using detail::mono_poly;
  using detail::x_index;
  if ((p.r != 1 && p.r != 2) || (p.rp != 1 && p.rp != 2))
    throw Error(ErrorKind::PreconditionViolated, "r and r' must lie in {1,2}");
  auto o = MonomialOrder::grevlex(spec.grading());
  std::vector<std::pair<std::string, Polynomial>> out;
  out.emplace_back("xi", mono_poly(o, 0, 2, 0, 0) - mono_poly(o, 1, 0, 1, 0));
  for (int i = 0; i <= 2 - p.r; ++i)
    out.emplace_back("phi" + std::to_string(i),
                     x_index(o, p.r + i) * mono_poly(o, 0, 0, p.q, 0) -
                         mono_poly(o, p.lambda - 1, 0, 0, p.w) * x_index(o, i));
  if (p.W_nonempty)
    for (int j = 0; j <= 2 - p.rp; ++j)
      out.emplace_back("psi" + std::to_string(j),
                       x_index(o, p.rp + j) * mono_poly(o, 0, 0, p.qp, p.v - p.w) -
                           mono_poly(o, p.nu - 1, 0, 0, 0) * x_index(o, j));
  // X_{r-r'} X2^(q-q') when r' < r, else X_{2+r-r'} X2^(q-q'-1); the second
  // branch collapses to X2^(q-q') when r = r'.
  Polynomial tail = p.rp < p.r   ? mono_poly(o, p.mu, 1, p.q - p.qp, 0)
                    : p.rp == p.r ? mono_poly(o, p.mu, 0, p.q - p.qp, 0)
                                  : mono_poly(o, p.mu, 1, p.q - p.qp - 1, 0);
  out.emplace_back("theta", mono_poly(o, 0, 0, 0, p.v) - tail);

  for (const auto& [name, f] : out)
    if (!is_homogeneous(f, spec.grading()))
      throw Error(ErrorKind::DegreeImbalance,
                  name + " = " + to_string(f) + " is not homogeneous for " + spec.str());
  return out;
}

inline std::vector<Polynomial> patil_generators(const CaseParameters& p, const SequenceSpec& spec) {
  std::vector<Polynomial> out;
  for (auto& [name, f] : patil_named_generators(p, spec)) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------
// Parameter extraction

namespace detail {

inline bool only_vars(const Monomial& m, std::initializer_list<int> allowed) {
  for (int i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    bool ok = false;
    for (int a : allowed) ok = ok || a == i;
    if (!ok) return false;
  }
  return true;
}

// Calls f(a, b) for both orientations of a binomial's two monomials.
template <class F>
bool match_binomial(const Polynomial& g, F&& f) {
  if (g.size() != 2) return false;
  const Monomial& a = g.terms()[0].mono;
  const Monomial& b = g.terms()[1].mono;
  return f(a, b) || f(b, a);
}

}  // namespace detail

// Reads the invariants off the reduced basis of the toric ideal:
//   phi0 = X1 X2^q - X0^lambda Y^w (r = 1) or X2^(q+1) - X0^lambda Y^w (r = 2),
//   theta = Y^v - X0^mu X1^e X2^b,
//   psi-type elements have one monomial carrying Y together with X1 or X2
//   and the other a power of X0 times at most X1.
// Every reading is cross-checked before it is returned.
inline CaseParameters extract_parameters(const ToricIdeal& ideal) {
  using detail::match_binomial;
  using detail::only_vars;
  const auto& G = ideal.generators;
  const SequenceSpec& spec = ideal.spec;
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorKind::TemplateMismatch, spec.str() + ": " + why);
  };

  CaseParameters p;
  bool have_phi = false, have_theta = false;
  std::int64_t theta_e1 = 0, theta_b = 0;
  for (const auto& g : G) {
    match_binomial(g, [&](const Monomial& a, const Monomial& b) {
      if (have_phi) return false;
      if (!only_vars(a, {X1, X2}) || a[X1] > 1 || a[X2] == 0) return false;
      if (!only_vars(b, {X0, Y}) || b[X0] == 0 || b[Y] == 0) return false;
      p.r = a[X1] == 1 ? 1 : 2;
      p.q = a[X2] - (p.r == 2 ? 1 : 0);
      p.lambda = b[X0];
      p.w = b[Y];
      have_phi = true;
      return true;
    });
    match_binomial(g, [&](const Monomial& a, const Monomial& b) {
      if (have_theta) return false;
      if (!only_vars(a, {Y}) || a[Y] == 0) return false;
      if (!only_vars(b, {X0, X1, X2})) return false;
      p.v = a[Y];
      p.mu = b[X0];
      theta_e1 = b[X1];
      theta_b = b[X2];
      have_theta = true;
      return true;
    });
    match_binomial(g, [&](const Monomial& a, const Monomial& b) {
      if (!only_vars(a, {X1, X2, Y}) || a[Y] == 0 || a[X1] + a[X2] == 0) return false;
      if (!only_vars(b, {X0, X1}) || b[X0] == 0 || b[X1] > 1) return false;
      p.W_nonempty = true;
      return true;
    });
  }
  if (!have_phi) {
    if (std::gcd(spec.m0, spec.d()) != 1)
      throw mismatch("gcd(m0, m1-m0) > 1, so the phi-type element carries no power of Y");
    throw mismatch("no phi0-shaped element in the reduced basis");
  }
  if (!have_theta) throw mismatch("no theta-shaped element in the reduced basis");
  if (theta_e1 > 1) throw mismatch("theta tail has X1^" + std::to_string(theta_e1));

  if (theta_e1 == 1) {
    p.rp = p.r == 2 ? 1 : 2;
    p.qp = p.q - theta_b - (p.r == 1 ? 1 : 0);
  } else {
    p.rp = p.r;
    p.qp = p.q - theta_b;
  }
  p.nu = p.lambda + p.mu + (p.r > p.rp ? 1 : 0);

  if (p.qp < 0 || p.qp > p.q) throw mismatch("q' outside [0, q]");
  if (p.w < 1 || p.w >= p.v) throw mismatch("w outside [1, v-1]");
  if (p.r == 1 && p.rp == 2 && p.mu == 0 && p.q - p.qp == 1)
    throw mismatch("mu = 0 together with q - q' = 1 in the r=1, r'=2 shape");
  if (p.r == 1 && p.rp == 1 && p.W_nonempty && p.lambda == 1 && p.mu == 0)
    throw mismatch("lambda = 1 together with mu = 0 in the r=r'=1 shape");
  if (p.v != min_multiple_in(spec.n, spec.gamma1()))
    throw mismatch("v disagrees with the least multiple of n in <m0,m1,m2>");

  std::vector<Polynomial> tmpl;
  try {
    tmpl = patil_generators(p, spec);
  } catch (const Error& e) {
    throw mismatch(std::string("template generators: ") + e.what());
  }
  for (const auto& f : tmpl)
    if (!ideal_member(f, G)) throw mismatch(to_string(f) + " is not in the ideal");
  auto tg = buchberger(tmpl, BuchbergerOptions{.record_transcript = false}).elements;
  for (const auto& g : G)
    if (!ideal_member(g, tg)) throw mismatch(to_string(g) + " is not generated by the templates");
  return p;
}

// ---------------------------------------------------------------------------
// Tables

struct Condition {
  std::string var;  // mu, lambda, qp, q-qp
  std::string op;   // == or !=
  std::int64_t value = 0;

  bool holds(const CaseParameters& p) const {
    std::int64_t x = 0;
    if (var == "mu") x = p.mu;
    else if (var == "lambda") x = p.lambda;
    else if (var == "qp") x = p.qp;
    else if (var == "q-qp") x = p.q - p.qp;
    else throw Error(ErrorKind::DataError, "unknown condition variable '" + var + "'");
    if (op == "==") return x == value;
    if (op == "!=") return x != value;
    throw Error(ErrorKind::DataError, "unknown condition operator '" + op + "'");
  }
};

// c * param * weight summed over terms; param "one" stands for 1.
struct ShiftFormula {
  struct Term {
    std::int64_t coef;
    std::string param;
    std::string weight;
  };
  std::string text;
  std::vector<Term> terms;

  std::int64_t evaluate(const CaseParameters& p, const SequenceSpec& s) const {
    auto env = p.env();
    std::int64_t total = 0;
    for (const auto& t : terms) {
      std::int64_t a = 1;
      if (t.param != "one") {
        auto it = env.find(t.param);
        if (it == env.end()) throw Error(ErrorKind::DataError, "unknown parameter " + t.param);
        a = it->second;
      }
      std::int64_t wt = t.weight == "m0" ? s.m0
                        : t.weight == "m1" ? s.m1
                        : t.weight == "m2" ? s.m2
                        : t.weight == "n"  ? s.n
                                           : throw Error(ErrorKind::DataError, "bad weight " + t.weight);
      total += t.coef * a * wt;
    }
    return total;
  }
};

struct CaseRecord {
  std::string label;
  int family = 0;
  bool W_nonempty = false;
  int r = 0;
  std::optional<int> rp;
  std::vector<Condition> conditions;
  std::string verbatim;
  BettiTriple triple;
  std::vector<ShiftFormula> s, p, q;

  bool matches(const CaseParameters& x) const {
    if (x.W_nonempty != W_nonempty || x.r != r) return false;
    if (rp && *rp != x.rp) return false;
    for (const auto& c : conditions)
      if (!c.holds(x)) return false;
    return true;
  }
};

struct BettiCell {
  bool W_nonempty = false;
  int r = 0, rp = 0;
  std::vector<Condition> conditions;
  std::string verbatim;
  BettiTriple triple;

  bool matches(const CaseParameters& x) const {
    if (x.W_nonempty != W_nonempty || x.r != r || x.rp != rp) return false;
    for (const auto& c : conditions)
      if (!c.holds(x)) return false;
    return true;
  }
};

struct CaseId {
  std::string label;
  int family = 0;
  friend bool operator==(const CaseId&, const CaseId&) = default;
};

class CaseTables {
 public:
  static CaseTables load(const std::string& dir) {
    CaseTables t;
    for_each_record(dir + "/betti_cells.jsonl", [&](const nlohmann::json& j) {
      BettiCell c;
      c.W_nonempty = j.at("W_nonempty").get<bool>();
      c.r = j.at("r").get<int>();
      c.rp = j.at("rp").get<int>();
      c.conditions = conditions(j.at("conditions"));
      c.verbatim = j.at("verbatim").get<std::string>();
      c.triple = triple(j.at("triple"));
      t.cells_.push_back(std::move(c));
    });
    for_each_record(dir + "/graded_shifts.jsonl", [&](const nlohmann::json& j) {
      CaseRecord c;
      c.label = j.at("case").get<std::string>();
      c.family = j.at("family").get<int>();
      c.W_nonempty = j.at("W_nonempty").get<bool>();
      c.r = j.at("r").get<int>();
      if (!j.at("rp").is_null()) c.rp = j.at("rp").get<int>();
      c.conditions = conditions(j.at("conditions"));
      c.verbatim = j.at("verbatim").get<std::string>();
      c.triple = triple(j.at("triple"));
      c.s = shifts(j.at("s"));
      c.p = shifts(j.at("p"));
      c.q = shifts(j.at("q"));
      t.cases_.push_back(std::move(c));
    });
    if (t.cells_.empty() || t.cases_.empty())
      throw Error(ErrorKind::DataError, "empty tables in " + dir);
    return t;
  }

  // Tables from $MCRES_DATA_DIR if set, else the build-time data directory.
  static const CaseTables& builtin() {
    static const CaseTables t = [] {
      const char* env = std::getenv("MCRES_DATA_DIR");
      return load(env && *env ? env : MCRES_DATA_DIR);
    }();
    return t;
  }

  const std::vector<BettiCell>& cells() const { return cells_; }
  const std::vector<CaseRecord>& cases() const { return cases_; }

  const CaseRecord& record(const std::string& label) const {
    for (const auto& c : cases_)
      if (c.label == label) return c;
    throw Error(ErrorKind::CaseUnmatched, "no case labelled '" + label + "'");
  }

 private:
  template <class F>
  static void for_each_record(const std::string& path, F&& f) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::DataError, "cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        f(nlohmann::json::parse(line));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::DataError, path + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  static std::vector<Condition> conditions(const nlohmann::json& j) {
    std::vector<Condition> out;
    for (const auto& c : j)
      out.push_back({c.at("var").get<std::string>(), c.at("op").get<std::string>(),
                     c.at("value").get<std::int64_t>()});
    return out;
  }
  static BettiTriple triple(const nlohmann::json& j) {
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(), j.at(2).get<std::int64_t>()};
  }
  static std::vector<ShiftFormula> shifts(const nlohmann::json& j) {
    std::vector<ShiftFormula> out;
    for (const auto& s : j) {
      ShiftFormula f;
      f.text = s.at("text").get<std::string>();
      for (const auto& t : s.at("terms"))
        f.terms.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<std::string>(),
                           t.at(2).get<std::string>()});
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<BettiCell> cells_;
  std::vector<CaseRecord> cases_;
};

inline CaseId case_id(const CaseParameters& p, const CaseTables& tables = CaseTables::builtin()) {
  const CaseRecord* hit = nullptr;
  for (const auto& c : tables.cases()) {
    if (!c.matches(p)) continue;
    if (hit)
      throw Error(ErrorKind::CaseUnmatched,
                  "cases " + hit->label + " and " + c.label + " both match " + p.str());
    hit = &c;
  }
  if (!hit) throw Error(ErrorKind::CaseUnmatched, "no case matches " + p.str());
  return {hit->label, hit->family};
}

// The first table cell whose conditions hold. Cells keep their file order,
// which settles the one overlap (mu != 0 with q = q' = 0 in the r=2, r'=1
// column) in favour of the q' = 0 row.
inline BettiTriple betti_lookup(const CaseParameters& p,
                                const CaseTables& tables = CaseTables::builtin()) {
  for (const auto& c : tables.cells())
    if (c.matches(p)) return c.triple;
  throw Error(ErrorKind::CaseUnmatched, "no table cell for " + p.str());
}

struct GradedShifts {
  std::vector<std::int64_t> s, p, q;
};

inline GradedShifts graded_shifts(const CaseId& id, const CaseParameters& params,
                                  const SequenceSpec& spec,
                                  const CaseTables& tables = CaseTables::builtin()) {
  const CaseRecord& rec = tables.record(id.label);
  GradedShifts out;
  for (const auto& f : rec.s) out.s.push_back(f.evaluate(params, spec));
  for (const auto& f : rec.p) out.p.push_back(f.evaluate(params, spec));
  for (const auto& f : rec.q) out.q.push_back(f.evaluate(params, spec));
  return out;
}

}  // namespace mcres
