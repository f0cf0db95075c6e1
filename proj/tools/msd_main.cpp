#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "msd/analysis.hpp"
#include "msd/codefile.hpp"
#include "msd/registry.hpp"
#include "msd/rng.hpp"
#include "msd/search.hpp"
#include "msd/verify.hpp"

using json = nlohmann::json;

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt_bloch(const msd::BlochVector& v) {
  return "(" + fmt6(v.x) + ", " + fmt6(v.y) + ", " + fmt6(v.z) + ")";
}

std::string correction_label(int idx) {
  return idx < 0 ? "none" : msd::octahedral_rotations()[idx].label;
}

// A code argument is either a path to a code file or a builtin name.
msd::CodeSpec load_code(const std::string& arg) {
  for (const std::string& name : msd::builtin_names())
    if (arg == name) return msd::builtin(name);
  return msd::load_code_file(arg);
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MSD_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // search layer falls back to hardware concurrency
}

json report_to_json(const msd::CodeReport& rep) {
  return json{{"fixed_point", {rep.fixed_point.x, rep.fixed_point.y, rep.fixed_point.z}},
              {"canonical_fixed_point",
               {rep.canonical_fixed_point.x, rep.canonical_fixed_point.y,
                rep.canonical_fixed_point.z}},
              {"threshold", rep.threshold},
              {"p_oct", rep.p_oct},
              {"tight", rep.tight},
              {"convergence_order", rep.convergence_order},
              {"correction", correction_label(rep.correction)},
              {"p_success_at_fixed_point", rep.p_success_at_fixed_point}};
}

int cmd_analyze(const std::string& code_arg, std::optional<double> p_flag, bool json_out,
                uint64_t seed, int samples) {
  const msd::CodeSpec spec = load_code(code_arg);
  const msd::DistillationMap map = msd::compile_map(spec);
  const auto fps = msd::discover_fixed_points(map, false, msd::mix_seed(seed, 1), 50);

  std::vector<msd::CodeReport> reports;
  size_t k = 0;
  for (const auto& [fp, corr] : fps) {
    const msd::DistillationMap& mv = corr < 0 ? map : map.with_correction(corr);
    reports.push_back(msd::analyze_fixed_point(mv, fp, samples, msd::mix_seed(seed, 2 + k++)));
  }

  if (json_out) {
    json out;
    out["code"] = code_arg;
    out["distills"] = !reports.empty();
    out["fixed_points"] = json::array();
    for (const auto& rep : reports) out["fixed_points"].push_back(report_to_json(rep));
    if (p_flag) {
      out["depolarization"] = json::array();
      for (const auto& rep : reports) {
        const msd::EvalResult ev = map.evaluate(rep.fixed_point.scaled(1.0 - *p_flag));
        out["depolarization"].push_back(json{{"p", *p_flag},
                                             {"output", {ev.out.x, ev.out.y, ev.out.z}},
                                             {"p_success", ev.p_success},
                                             {"dead", ev.dead}});
      }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "code: " << code_arg << "\n";
  if (reports.empty()) {
    std::cout << "verdict: not a distiller (no surface fixed points found)\n";
    return 0;
  }
  for (const auto& rep : reports) {
    std::cout << "fixed point: " << fmt_bloch(rep.fixed_point)
              << "  correction: " << correction_label(rep.correction) << "\n"
              << "  canonical:         " << fmt_bloch(rep.canonical_fixed_point) << "\n"
              << "  threshold:         " << fmt6(rep.threshold) << "\n"
              << "  p_oct:             " << fmt6(rep.p_oct) << "\n"
              << "  tight:             " << (rep.tight ? "true" : "false") << "\n"
              << "  convergence order: " << fmt6(rep.convergence_order) << "\n"
              << "  p_success at fp:   " << fmt6(rep.p_success_at_fixed_point) << "\n";
    if (p_flag) {
      const msd::EvalResult ev = map.evaluate(rep.fixed_point.scaled(1.0 - *p_flag));
      std::cout << "  at p=" << fmt6(*p_flag) << ": output " << fmt_bloch(ev.out)
                << ", p_success " << fmt6(ev.p_success) << (ev.dead ? " (never succeeds)" : "")
                << "\n";
    }
  }
  return 0;
}

std::string record_csv_row(const msd::SearchRecord& r) {
  std::string graph_bits;
  const int edges = r.n * (r.n - 1) / 2;
  for (int k = 0; k < edges; ++k) graph_bits += (r.canonical_graph_bits >> k) & 1 ? '1' : '0';
  std::string codeword;
  for (int i = 0; i < r.n; ++i) codeword += (r.code.codeword >> i) & 1 ? '1' : '0';
  const auto& rep = r.report;
  std::ostringstream row;
  row << r.n << ',' << graph_bits << ',' << codeword << ',' << correction_label(rep.correction)
      << ',' << fmt6(rep.fixed_point.x) << ',' << fmt6(rep.fixed_point.y) << ','
      << fmt6(rep.fixed_point.z) << ',' << fmt6(rep.canonical_fixed_point.x) << ','
      << fmt6(rep.canonical_fixed_point.y) << ',' << fmt6(rep.canonical_fixed_point.z) << ','
      << fmt6(rep.threshold) << ',' << fmt6(rep.p_oct) << ',' << (rep.tight ? "true" : "false")
      << ',' << fmt6(rep.convergence_order) << ',' << fmt6(rep.p_success_at_fixed_point);
  return row.str();
}

int cmd_search(const std::vector<int>& n_values, const std::string& graph_mode, int samples,
               uint64_t seed, bool corrections, const std::string& out_path, bool tight_only,
               const std::string& format, int threads) {
  msd::SearchConfig cfg;
  cfg.n_values = n_values;
  if (graph_mode == "paper")
    cfg.mode = msd::SearchConfig::Mode::paper_faithful;
  else if (graph_mode == "all")
    cfg.mode = msd::SearchConfig::Mode::all;
  else if (graph_mode == "non-isomorphic")
    cfg.mode = msd::SearchConfig::Mode::non_isomorphic;
  else
    throw msd::Error("unknown graph mode '" + graph_mode + "'");
  cfg.tightness_samples = samples;
  cfg.seed = seed;
  cfg.enable_corrections = corrections;
  cfg.threads = threads;

  const auto records = msd::run_search(cfg, [](size_t done, size_t total) {
    if (done % 256 == 0 || done == total)
      std::cerr << "\rsearch: " << done << "/" << total << std::flush;
  });
  std::cerr << "\n";

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw msd::Error("cannot write to '" + out_path + "'");
    out = &file;
  }

  if (format == "csv")
    *out << "n,canonical_graph_bits,codeword,correction,fixed_x,fixed_y,fixed_z,"
            "canon_x,canon_y,canon_z,threshold,p_oct,tight,order,p_success_at_fixed_point\n";
  for (const auto& r : records) {
    if (r.failed) {
      std::cerr << "warning: code n=" << r.n << " graph=" << r.code.graph.upper_bits()
                << " w=" << r.code.codeword << " failed: " << r.error << "\n";
      continue;
    }
    if (tight_only && !r.report.tight) continue;
    if (format == "csv") {
      *out << record_csv_row(r) << "\n";
    } else {
      std::string codeword;
      for (int i = 0; i < r.n; ++i) codeword += (r.code.codeword >> i) & 1 ? '1' : '0';
      const auto& rep = r.report;
      json j = report_to_json(rep);
      j["n"] = r.n;
      j["canonical_graph_bits"] = r.canonical_graph_bits;
      j["codeword"] = codeword;
      *out << j.dump() << "\n";
    }
  }
  return 0;
}

int cmd_yield(const std::string& code_arg, const std::string& p_grid, double target_eps,
              uint64_t seed) {
  const msd::CodeSpec spec = load_code(code_arg);
  const msd::DistillationMap map = msd::compile_map(spec);
  const auto fps = msd::discover_fixed_points(map, false, msd::mix_seed(seed, 1), 50);
  if (fps.empty()) throw msd::Error("code has no fixed points; nothing to distill");

  // Target: the surface fixed point with the largest threshold.
  msd::BlochVector target;
  double best_thr = -1.0;
  for (const auto& [fp, corr] : fps) {
    if (corr >= 0 || fp.norm() < 1.0 - 1e-6) continue;
    const double thr = msd::threshold(map, fp);
    if (thr > best_thr) {
      best_thr = thr;
      target = fp;
    }
  }
  if (best_thr < 0.0) throw msd::Error("code has no surface fixed point; nothing to distill");

  double start = 0, stop = 0, step = 0;
  if (std::sscanf(p_grid.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0)
    throw msd::Error("--p-grid must be start:stop:step with positive step");

  std::cout << "p,yield,log_yield,rounds,above_threshold\n";
  for (double p = start; p <= stop + 1e-12; p += step) {
    try {
      const msd::YieldResult y = msd::yield(map, target, p, target_eps);
      std::cout << fmt6(p) << ',' << y.value << ',' << fmt6(y.log_value) << ',' << y.rounds
                << ",false\n";
    } catch (const msd::Error&) {
      std::cout << fmt6(p) << ",0,,0,true\n";
    }
  }
  return 0;
}

int cmd_verify(bool extended, uint64_t seed, int samples, int threads) {
  msd::VerifyOptions opt;
  opt.extended = extended;
  opt.seed = seed;
  opt.tightness_samples = samples;
  opt.threads = threads;
  opt.log = &std::cerr;
  const auto results = msd::run_verification(opt);

  size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.description
              << "  [expected: " << r.expected << "; computed: " << r.computed << "]\n";
    if (r.pass) ++passed;
  }
  std::cout << passed << "/" << results.size() << " claims passed\n";
  return msd::all_passed(results) ? 0 : 2;
}

int cmd_encode(const std::string& code_arg) {
  const msd::CodeSpec spec = load_code(code_arg);
  if (!std::holds_alternative<msd::CwsCode>(spec.body))
    throw msd::Error("no graph form available for a stabilizer-format code");
  std::cout << msd::emit_encoding_circuit(std::get<msd::CwsCode>(spec.body));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"Small-code magic state distillation toolkit"};
  app.require_subcommand(1);

  int threads_flag = 0;
  app.add_option("--threads", threads_flag, "worker thread count (default: machine parallelism)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze a code file or builtin code");
  std::string analyze_code;
  analyze->add_option("code", analyze_code, "code file path or builtin name")->required();
  double analyze_p = -1.0;
  auto* p_opt = analyze->add_option("--p", analyze_p, "also report one round at this depolarizing rate");
  bool analyze_json = false;
  analyze->add_flag("--json", analyze_json, "JSON output");
  uint64_t analyze_seed = 1;
  analyze->add_option("--seed", analyze_seed, "RNG seed");
  int analyze_samples = 1000;
  analyze->add_option("--samples", analyze_samples, "tightness sample count");

  // search
  auto* search = app.add_subcommand("search", "exhaustive sweep over (graph, codeword) codes");
  std::vector<int> search_n;
  search->add_option("--n", search_n, "qubit counts (2..6)")->required()->delimiter(',');
  std::string search_mode = "paper";
  search->add_option("--graph-mode", search_mode, "paper | all | non-isomorphic");
  int search_samples = 1000;
  search->add_option("--samples", search_samples, "tightness sample count");
  uint64_t search_seed = 1;
  search->add_option("--seed", search_seed, "RNG seed");
  bool search_corrections = false;
  search->add_flag("--corrections", search_corrections, "try inter-round Clifford corrections");
  std::string search_out;
  search->add_option("--out", search_out, "output path (default stdout)");
  bool search_tight_only = false;
  search->add_flag("--tight-only", search_tight_only, "emit only tight codes");
  std::string search_format = "csv";
  search->add_option("--format", search_format, "csv | jsonl");

  // yield
  auto* yield_cmd = app.add_subcommand("yield", "yield curve over a depolarizing grid");
  std::string yield_code;
  yield_cmd->add_option("code", yield_code, "code file path or builtin name")->required();
  std::string yield_grid = "0.01:0.25:0.01";
  yield_cmd->add_option("--p-grid", yield_grid, "start:stop:step");
  double yield_eps = 1e-10;
  yield_cmd->add_option("--target-eps", yield_eps, "target infidelity");
  uint64_t yield_seed = 1;
  yield_cmd->add_option("--seed", yield_seed, "RNG seed");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  bool verify_extended = false;
  verify->add_flag("--extended", verify_extended, "include the n=6 sweep claims");
  uint64_t verify_seed = 20250824;
  verify->add_option("--seed", verify_seed, "RNG seed");
  int verify_samples = 1000;
  verify->add_option("--samples", verify_samples, "tightness sample count");

  // encode
  auto* encode = app.add_subcommand("encode", "emit the graph-state encoding circuit");
  std::string encode_code;
  encode->add_option("code", encode_code, "cws code file path or builtin name")->required();

  try {
    app.parse(argc, argv);
    const int threads = resolve_threads(threads_flag);
    if (analyze->parsed())
      return cmd_analyze(analyze_code,
                         p_opt->count() ? std::optional<double>(analyze_p) : std::nullopt,
                         analyze_json, analyze_seed, analyze_samples);
    if (search->parsed())
      return cmd_search(search_n, search_mode, search_samples, search_seed, search_corrections,
                        search_out, search_tight_only, search_format, threads);
    if (yield_cmd->parsed()) return cmd_yield(yield_code, yield_grid, yield_eps, yield_seed);
    if (verify->parsed()) return cmd_verify(verify_extended, verify_seed, verify_samples, threads);
    if (encode->parsed()) return cmd_encode(encode_code);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const msd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
