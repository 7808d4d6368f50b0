#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcres/mcres.hpp"

using namespace mcres;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInvalid = 1, kFailed = 2;

std::string series_str(const IntSeries& k) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : k) {
    std::int64_t a = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (d == 0 || a != 1) os << a;
    if (d > 0) os << "z^" << d;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string opt_str(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; }

void print_report(const AnalysisReport& r) {
  std::cout << "sequence      (" << r.seq[0] << "," << r.seq[1] << "," << r.seq[2] << "," << r.seq[3]
            << ")\n";
  if (!r.valid) {
    std::cout << "invalid       " << r.discrepancies.front().note << "\n";
    return;
  }
  std::cout << "parameters    " << (r.params ? r.params->str() : "unavailable") << "\n";
  std::cout << "case          " << r.case_label.value_or("-") << "\n";
  std::cout << "betti lookup  " << (r.betti_lookup ? r.betti_lookup->str() : "-") << "\n";
  std::cout << "betti         " << (r.betti_computed ? r.betti_computed->str() : "-") << "\n";
  std::cout << "graded        ";
  for (const auto& g : r.graded_betti)
    if (g[0] > 0) std::cout << "F" << g[0] << ":" << g[1] << (g[2] > 1 ? "x" + std::to_string(g[2]) : "") << " ";
  std::cout << "\nK(z)          " << series_str(r.hilbert) << "\n";
  std::cout << "flags         gb_ok=" << opt_str(r.flags.gb_ok)
            << " compose_ok=" << opt_str(r.flags.compose_ok)
            << " minimal_ok=" << opt_str(r.flags.minimal_ok)
            << " hilbert_ok=" << opt_str(r.flags.hilbert_ok)
            << " closed_form_agrees=" << opt_str(r.flags.closed_form_agrees) << "\n";
  for (const auto& d : r.discrepancies) {
    std::cout << "discrepancy   " << d.kind;
    if (!d.case_label.empty()) std::cout << " case " << d.case_label;
    if (!d.component.empty()) {
      std::cout << " " << d.component << " table " << json(d.table).dump() << " computed "
                << json(d.computed).dump() << (d.certified() ? " (certified)" : " (uncertified)");
    }
    if (!d.note.empty()) std::cout << " " << d.note;
    std::cout << "\n";
  }
  if (r.ms_elapsed) std::cout << "elapsed       " << *r.ms_elapsed << " ms\n";
}

VerifyOptions verify_options(const std::string& level, std::int64_t truncate) {
  VerifyOptions o;
  o.full = level != "fast";
  o.truncate = truncate;
  return o;
}

int cmd_analyze(const std::vector<std::int64_t>& seq, bool as_json, const VerifyOptions& opt) {
  auto r = analyze(seq[0], seq[1], seq[2], seq[3], opt);
  if (as_json)
    std::cout << report_json(r).dump() << "\n";
  else
    print_report(r);
  return r.exit_code();
}

int cmd_sweep(std::int64_t max_m2, std::int64_t max_n, const std::string& out, unsigned threads,
              VerifyOptions opt) {
  opt.timing = false;
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot open " << out << " for writing\n";
    return kInvalid;
  }
  auto specs = sweep_tuples(max_m2, max_n);
  auto reports = analyze_all(specs, opt, threads);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    f << report_json(r).dump() << "\n";
    failed += r.flags.any_false();
  }
  if (!f) {
    std::cerr << "write failed on " << out << "\n";
    return kInvalid;
  }
  std::cout << "wrote " << reports.size() << " records to " << out;
  if (failed) std::cout << ", " << failed << " with a failed check";
  std::cout << "\n";
  return failed ? kFailed : kOk;
}

int cmd_census(const std::string& in) {
  std::ifstream f(in);
  if (!f) {
    std::cerr << "cannot open " << in << "\n";
    return kInvalid;
  }
  std::map<std::vector<std::int64_t>, std::size_t> triples;
  std::map<std::string, std::size_t> cases, digest;
  std::size_t records = 0, mismatches = 0, uncertified = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(f, line); ++lineno) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      std::cerr << in << ":" << lineno << ": " << e.what() << "\n";
      return kInvalid;
    }
    ++records;
    if (j.value("betti_computed", json()).is_array())
      ++triples[j["betti_computed"].get<std::vector<std::int64_t>>()];
    if (j.value("case", json()).is_string()) ++cases[j["case"].get<std::string>()];
    for (const auto& d : j.value("discrepancies", json::array())) {
      std::string kind = d.value("kind", "");
      if (kind == "template_mismatch") ++mismatches;
      std::string key = kind;
      if (d.contains("case")) key += " " + d["case"].get<std::string>();
      if (d.contains("component")) key += " " + d["component"].get<std::string>();
      ++digest[key];
      if (kind == "shift_table" && !d.value("certified", false)) ++uncertified;
    }
  }
  std::set<std::vector<std::int64_t>> known;
  for (const auto& t : known_triples()) known.insert(t.vec());
  bool outside = false;
  std::cout << "records " << records << "\n";
  for (const auto& [t, c] : triples) {
    bool ok = known.count(t);
    outside = outside || !ok;
    std::cout << "triple " << json(t).dump() << " " << c << (ok ? "" : "  NOT IN THE KNOWN SET") << "\n";
  }
  for (const auto& [k, c] : cases) std::cout << "case " << k << " " << c << "\n";
  if (records) std::cout << "template mismatches " << mismatches << " of " << records << "\n";
  for (const auto& [k, c] : digest) std::cout << "discrepancy " << k << " " << c << "\n";
  if (uncertified) std::cout << "uncertified shift discrepancies " << uncertified << "\n";
  return outside || uncertified ? kFailed : kOk;
}

int cmd_hilbert(const std::vector<std::int64_t>& seq, std::int64_t truncate) {
  SequenceSpec spec;
  try {
    spec = validate_sequence(seq[0], seq[1], seq[2], seq[3]);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  auto res = minimalize(build_resolution(toric_kernel(spec).generators));
  auto K = hilbert_numerator(res);
  bool ok = hilbert_identity_holds(spec, K, truncate);
  std::cout << "K(z) = " << series_str(K) << "\n";
  std::cout << "K(z)/prod(1-z^w) vs semigroup series up to degree " << truncate << ": "
            << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kFailed;
}

void print_maps(const FreeResolution& res) {
  const char* names[3] = {"A", "B", "C"};
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    std::cout << (i < 3 ? names[i] : "map") << " (" << res.maps[i].rows() << "x"
              << res.maps[i].cols() << "), twists " << json(detail::sorted(res.maps[i].source().twists)).dump()
              << "\n"
              << pretty(res.maps[i]);
  }
}

int cmd_matrices(const std::vector<std::int64_t>& seq) {
  SequenceSpec spec;
  try {
    spec = validate_sequence(seq[0], seq[1], seq[2], seq[3]);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  auto tk = toric_kernel(spec);
  auto res = minimalize(build_resolution(tk.generators));
  std::cout << "computed minimal resolution\n";
  print_maps(res);
  FreeResolution cf;
  try {
    auto p = extract_parameters(tk);
    std::cout << "\nclosed form, case " << case_id(p).label << " (" << p.str() << ")\n";
    cf = closed_form_resolution(p, spec);
  } catch (const Error& e) {
    std::cout << "\nno closed form: " << e.what() << "\n";
    return kOk;
  }
  print_maps(cf);
  bool ranks = cf.ranks() == res.ranks();
  bool degrees = detail::twist_levels(cf) == detail::twist_levels(res);
  std::cout << "\nranks " << (ranks ? "agree" : "differ") << ", graded degree multisets "
            << (degrees ? "agree" : "differ") << "\n";
  return ranks && degrees ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal graded free resolutions of monomial curves for almost arithmetic sequences"};
  app.require_subcommand(1);

  std::vector<std::int64_t> seq;
  bool as_json = false;
  std::string out, in, level = "full";
  std::int64_t max_m2 = 60, max_n = 60, truncate = 500;
  unsigned threads = 1;

  auto add_seq = [&](CLI::App* c) {
    c->add_option("--seq", seq, "m0,m1,m2,n")->delimiter(',')->expected(4)->required();
  };
  auto add_level = [&](CLI::App* c) {
    c->add_option("--verify-level", level, "fast skips the closed-form matrices")
        ->check(CLI::IsMember({"fast", "full"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one sequence");
  add_seq(analyze_cmd);
  analyze_cmd->add_flag("--json", as_json, "emit the JSON report");
  analyze_cmd->add_option("--truncate", truncate, "degree bound for the Hilbert check");
  add_level(analyze_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "analyze every valid sequence within bounds");
  sweep_cmd->add_option("--max-m2", max_m2)->required();
  sweep_cmd->add_option("--max-n", max_n)->required();
  sweep_cmd->add_option("--out", out, "JSONL output path")->required();
  sweep_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--truncate", truncate);
  add_level(sweep_cmd);

  auto* census_cmd = app.add_subcommand("census", "summarize a sweep file");
  census_cmd->add_option("--in", in, "JSONL input path")->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "check the Hilbert series identity");
  add_seq(hilbert_cmd);
  hilbert_cmd->add_option("--truncate", truncate)->check(CLI::NonNegativeNumber);

  auto* matrices_cmd = app.add_subcommand("matrices", "print computed and closed-form matrices");
  add_seq(matrices_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(seq, as_json, verify_options(level, truncate));
    if (*sweep_cmd) return cmd_sweep(max_m2, max_n, out, threads, verify_options(level, truncate));
    if (*census_cmd) return cmd_census(in);
    if (*hilbert_cmd) return cmd_hilbert(seq, truncate);
    if (*matrices_cmd) return cmd_matrices(seq);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
