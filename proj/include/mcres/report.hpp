#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mcres/closed_form.hpp"
#include "mcres/patil.hpp"
#include "mcres/resolution.hpp"
#include "mcres/semigroup.hpp"
#include "mcres/toric.hpp"

namespace mcres {

// K(z) / prod(1 - z^w) against the indicator series of the semigroup, up to N.
inline bool hilbert_identity_holds(const SequenceSpec& spec, const IntSeries& K, std::int64_t N) {
  auto lhs = hilbert_series_truncation(K, {spec.m0, spec.m1, spec.m2, spec.n}, N);
  return lhs == gamma_series_truncation(spec, N);
}

inline IntSeries numerator_from_shifts(const std::vector<std::vector<std::int64_t>>& levels) {
  IntSeries k{{0, 1}};
  std::int64_t sign = -1;
  for (const auto& lv : levels) {
    for (auto t : lv) k[t] += sign;
    sign = -sign;
  }
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

struct VerifyOptions {
  bool full = true;  // instantiate and check the closed-form matrices
  std::int64_t truncate = 500;
  bool timing = true;
};

// Unset means "not applicable" (e.g. no parameters could be read off).
struct Flags {
  std::optional<bool> gb_ok, compose_ok, minimal_ok, hilbert_ok, closed_form_agrees;

  std::vector<std::optional<bool>> all() const {
    return {gb_ok, compose_ok, minimal_ok, hilbert_ok, closed_form_agrees};
  }
  bool any_false() const {
    for (auto f : all())
      if (f && !*f) return true;
    return false;
  }
  bool all_true() const {
    for (auto f : all())
      if (!f || !*f) return false;
    return true;
  }
};

struct Discrepancy {
  std::string kind;  // shift_table, betti_lookup, closed_form, template_mismatch, invalid_sequence
  std::string case_label;
  std::string component;
  std::vector<std::int64_t> table, computed;
  std::optional<bool> computed_hilbert_ok, table_hilbert_ok;
  std::string note;

  // A shift-table record counts as certified when the computed twists pass
  // the Hilbert identity; the tabulated ones failing it is extra evidence.
  bool certified() const { return computed_hilbert_ok.value_or(false); }

  static Discrepancy noted(std::string kind, std::string note, std::string case_label = {}) {
    Discrepancy d;
    d.kind = std::move(kind);
    d.note = std::move(note);
    d.case_label = std::move(case_label);
    return d;
  }
};

struct AnalysisReport {
  std::array<std::int64_t, 4> seq{};
  bool valid = false;
  std::optional<CaseParameters> params;
  std::optional<std::string> case_label;
  std::optional<BettiTriple> betti_lookup;
  std::optional<BettiTriple> betti_computed;
  std::vector<std::array<std::int64_t, 3>> graded_betti;  // [i, degree, count]
  IntSeries hilbert;
  Flags flags;
  std::vector<Discrepancy> discrepancies;
  std::optional<double> ms_elapsed;

  int exit_code() const {
    if (!valid) return 1;
    return flags.any_false() ? 2 : 0;
  }
};

namespace detail {

inline std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<std::vector<std::int64_t>> twist_levels(const FreeResolution& res) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& m : res.maps) out.push_back(sorted(m.source().twists));
  return out;
}

inline bool complex_ok(const FreeResolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    if (!compose_zero(res.maps[i], res.maps[i + 1])) return false;
  return true;
}

inline BettiTriple triple_of(const FreeResolution& res) {
  auto r = res.betti_totals();
  r.resize(3, 0);
  return {static_cast<std::int64_t>(r[0]), static_cast<std::int64_t>(r[1]),
          static_cast<std::int64_t>(r[2])};
}

inline void compare_shifts(AnalysisReport& rep, const SequenceSpec& spec,
                           const FreeResolution& res, std::int64_t N) {
  auto shifts = graded_shifts(CaseId{*rep.case_label, 0}, *rep.params, spec);
  auto got = twist_levels(res);
  got.resize(3);
  std::vector<std::vector<std::int64_t>> table{sorted(shifts.s), sorted(shifts.p),
                                               sorted(shifts.q)};
  bool table_ok = hilbert_identity_holds(spec, numerator_from_shifts(table), N);
  const char* names[3] = {"s", "p", "q"};
  for (int k = 0; k < 3; ++k) {
    if (table[k] == got[k]) continue;
    Discrepancy d;
    d.kind = "shift_table";
    d.case_label = *rep.case_label;
    d.component = names[k];
    d.table = table[k];
    d.computed = got[k];
    d.computed_hilbert_ok = rep.flags.hilbert_ok;
    d.table_hilbert_ok = table_ok;
    rep.discrepancies.push_back(std::move(d));
  }
}

inline void run_pipeline(AnalysisReport& rep, const SequenceSpec& spec, const VerifyOptions& opt);

}  // namespace detail

inline AnalysisReport analyze(std::int64_t m0, std::int64_t m1, std::int64_t m2, std::int64_t n,
                              const VerifyOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.seq = {m0, m1, m2, n};
  SequenceSpec spec;
  try {
    spec = validate_sequence(m0, m1, m2, n);
  } catch (const Error& e) {
    rep.discrepancies.push_back(Discrepancy::noted("invalid_sequence", e.what()));
    return rep;
  }
  rep.valid = true;
  try {
    detail::run_pipeline(rep, spec, opt);
  } catch (const Error& e) {
    rep.flags.compose_ok = false;
    rep.discrepancies.push_back(Discrepancy::noted("internal_error", e.what()));
  }
  if (opt.timing)
    rep.ms_elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace detail {

inline void run_pipeline(AnalysisReport& rep, const SequenceSpec& spec, const VerifyOptions& opt) {
  auto tk = toric_kernel(spec);
  auto res = minimalize(build_resolution(tk.generators));
  rep.betti_computed = detail::triple_of(res);
  rep.graded_betti.push_back({0, 0, 1});
  for (const auto& [key, count] : betti_table(res).entries)
    rep.graded_betti.push_back({static_cast<std::int64_t>(key.first) + 1, key.second, count});
  rep.hilbert = hilbert_numerator(res);

  auto b = *rep.betti_computed;
  rep.flags.compose_ok = detail::complex_ok(res);
  rep.flags.minimal_ok = is_minimal(res) && res.length() <= 3 && b.b0 - b.b1 + b.b2 == 1;
  rep.flags.hilbert_ok = hilbert_identity_holds(spec, rep.hilbert, opt.truncate);

  try {
    rep.params = extract_parameters(tk);
  } catch (const Error& e) {
    rep.discrepancies.push_back(Discrepancy::noted("template_mismatch", e.what()));
  }

  if (rep.params) {
    const auto& p = *rep.params;
    rep.flags.gb_ok = is_groebner(patil_generators(p, spec));
    rep.betti_lookup = betti_lookup(p);
    bool lookup_ok = *rep.betti_lookup == b;
    if (!lookup_ok) {
      Discrepancy d;
      d.kind = "betti_lookup";
      d.table = rep.betti_lookup->vec();
      d.computed = b.vec();
      rep.discrepancies.push_back(std::move(d));
    }
    try {
      rep.case_label = case_id(p).label;
    } catch (const Error& e) {
      rep.discrepancies.push_back(Discrepancy::noted("case_unmatched", e.what()));
    }
    if (rep.case_label) {
      detail::compare_shifts(rep, spec, res, opt.truncate);
      if (opt.full) {
        try {
          auto cf = closed_form_resolution(p, spec);
          bool ok = lookup_ok && detail::complex_ok(cf) && is_minimal(cf) &&
                    hilbert_numerator(cf) == rep.hilbert &&
                    detail::twist_levels(cf) == detail::twist_levels(res);
          rep.flags.closed_form_agrees = ok;
          if (!ok)
            rep.discrepancies.push_back(Discrepancy::noted(
                "closed_form", "closed-form complex disagrees with the computed resolution",
                *rep.case_label));
        } catch (const Error& e) {
          rep.flags.closed_form_agrees = false;
          rep.discrepancies.push_back(Discrepancy::noted("closed_form", e.what(), *rep.case_label));
        }
      }
    } else if (opt.full) {
      rep.flags.closed_form_agrees = false;
    }
  }
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const Discrepancy& d) {
  j = nlohmann::json{{"kind", d.kind}};
  if (!d.case_label.empty()) j["case"] = d.case_label;
  if (!d.component.empty()) j["component"] = d.component;
  if (!d.table.empty()) j["table"] = d.table;
  if (!d.computed.empty()) j["computed"] = d.computed;
  if (d.computed_hilbert_ok) j["computed_hilbert_ok"] = *d.computed_hilbert_ok;
  if (d.table_hilbert_ok) j["table_hilbert_ok"] = *d.table_hilbert_ok;
  if (d.kind == "shift_table") j["certified"] = d.certified();
  if (!d.note.empty()) j["note"] = d.note;
}

inline nlohmann::json report_json(const AnalysisReport& r) {
  using nlohmann::json;
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json j;
  j["seq"] = r.seq;
  j["valid"] = r.valid;
  j["params"] = r.params ? json(*r.params) : json(nullptr);
  j["case"] = r.case_label ? json(*r.case_label) : json(nullptr);
  j["betti_lookup"] = r.betti_lookup ? json(r.betti_lookup->vec()) : json(nullptr);
  j["betti_computed"] = r.betti_computed ? json(r.betti_computed->vec()) : json(nullptr);
  j["graded_betti"] = r.graded_betti;
  json h = json::array();
  for (const auto& [d, c] : r.hilbert) h.push_back({d, c});
  j["hilbert_numerator"] = h;
  j["flags"] = {{"gb_ok", opt(r.flags.gb_ok)},
                {"compose_ok", opt(r.flags.compose_ok)},
                {"minimal_ok", opt(r.flags.minimal_ok)},
                {"hilbert_ok", opt(r.flags.hilbert_ok)},
                {"closed_form_agrees", opt(r.flags.closed_form_agrees)}};
  j["discrepancies"] = r.discrepancies;
  j["ms_elapsed"] = r.ms_elapsed ? json(*r.ms_elapsed) : json(nullptr);
  return j;
}

// Valid tuples with m2 <= max_m2 and n <= max_n, ascending in (m0, d, n).
inline std::vector<SequenceSpec> sweep_tuples(std::int64_t max_m2, std::int64_t max_n) {
  std::vector<SequenceSpec> out;
  for (std::int64_t m0 = 1; m0 + 2 <= max_m2; ++m0)
    for (std::int64_t d = 1; m0 + 2 * d <= max_m2; ++d)
      for (std::int64_t n = 1; n <= max_n; ++n) {
        try {
          out.push_back(validate_sequence(m0, m0 + d, m0 + 2 * d, n));
        } catch (const Error&) {
        }
      }
  return out;
}

// Results come back in input order whatever the thread count.
inline std::vector<AnalysisReport> analyze_all(const std::vector<SequenceSpec>& specs,
                                               VerifyOptions opt, unsigned threads = 1) {
  std::vector<AnalysisReport> out(specs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
      const auto& s = specs[i];
      out[i] = analyze(s.m0, s.m1, s.m2, s.n, opt);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return out;
}

}  // namespace mcres
