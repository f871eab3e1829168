// Copyright 2026 The SoftEx Model Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "softex/batch_io.hpp"
#include "softex/error_stats.hpp"
#include "softex/errors.hpp"
#include "softex/expu.hpp"
#include "softex/gelu.hpp"
#include "softex/mesh.hpp"
#include "softex/minimax.hpp"
#include "softex/perf_model.hpp"
#include "softex/report.hpp"
#include "softex/softmax.hpp"

namespace softex::cli {

namespace {

std::string DefaultPath(const std::string& file) {
  const char* dir = std::getenv(kOutDirEnv);
  if (dir == nullptr || *dir == '\0') return file;
  return (std::filesystem::path(dir) / file).string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string Num(double v) { return format_number(v); }
std::string Num(std::uint64_t v) { return format_number(v); }

std::string CommandLine(int argc, const char* const* argv) {
  // argv[0] is left out so reports do not depend on the install path.
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void ErrorRecord(std::ostream& err, const std::string& kind, const std::string& message) {
  const nlohmann::json j = {{"error", kind}, {"message", message}};
  err << j.dump() << "\n";
}

struct ExpAccuracyOpts {
  std::uint64_t n = 10000000;
  double lo = -88.7;
  double hi = 88.7;
};

struct SoftmaxOpts {
  std::uint32_t rows = 1000;
  std::uint32_t cols = 1024;
  std::uint32_t lanes = 16;
  std::string input;
};

struct GeluSweepOpts {
  std::vector<int> bits = {8, 9, 10, 11, 12, 13, 14};
  std::vector<int> terms = {1, 2, 3, 4, 5, 6};
  std::size_t grid = 100001;
  double x_end = 2.8;
};

struct FitGeluOpts {
  int terms = 4;
  double x_end = 2.8;
  std::string metric = "relative";
  std::string r0 = "minus_rmax";
};

struct FitExppOpts {
  std::uint64_t trials = 1000000;
};

struct LatencyOpts {
  std::vector<std::uint64_t> lens = {128, 256, 512, 1024, 2048};
  std::vector<std::uint32_t> lanes = {4, 8, 16, 32, 64};
  std::uint64_t n_w = 4;
  std::string config;
};

struct MeshOpts {
  std::vector<std::uint32_t> n = {1, 2, 3, 4, 5, 6, 7, 8};
  std::uint64_t trials = 1u << 16;
  std::string config;
};

void RunExpAccuracy(const RunConfig& rc, const ExpAccuracyOpts& o, const ReportMeta& meta,
                    std::ostream& out) {
  const ExpComparison c = compare_exponentials(o.lo, o.hi, o.n, rc.seed);
  std::vector<CsvRow> rows = {
      {"exps", Num(c.exps.n), Num(c.exps.mre), Num(c.exps.max_re)},
      {"expp", Num(c.expp.n), Num(c.expp.mre), Num(c.expp.max_re)},
  };
  emit_report(rows, {"function", "n", "mre", "max_re"}, rc.out, meta);
  out << "exps mre " << c.exps.mre << " max " << c.exps.max_re << "\n"
      << "expp mre " << c.expp.mre << " max " << c.expp.max_re << "\n";
}

void RunSoftmaxBench(const RunConfig& rc, const SoftmaxOpts& o, const ReportMeta& meta,
                     std::ostream& out) {
  const BatchMatrix m = o.input.empty() ? normal_batch(o.rows, o.cols, rc.seed) : read_batch(o.input);
  std::vector<CsvRow> rows;
  double mre = 0.0;
  for (std::uint32_t r = 0; r < m.rows; ++r) {
    const RowReport rep = evaluate_row(r, m.row(r), o.lanes);
    mre += rep.mre;
    rows.push_back({Num(rep.row), Num(rep.mre), Num(rep.max_re), Num(rep.sum_dev)});
  }
  emit_report(rows, {"row", "mre", "max_re", "sum_dev"}, rc.out, meta);
  if (m.rows) out << "mean per-row mre " << mre / m.rows << " over " << m.rows << " rows\n";
}

std::map<int, SumExpParams> LoadOrFit(const RunConfig& rc, const std::vector<int>& terms,
                                      double x_end) {
  std::map<int, SumExpParams> sets;
  for (const std::string& path : rc.param_files) {
    SumExpParams p = sum_exp_params_from_json(ReadFile(path));
    sets[static_cast<int>(p.n_w())] = std::move(p);
  }
  for (const int n : terms) {
    if (sets.count(n)) continue;
    MinimaxProblem pr;
    pr.n_terms = n;
    pr.x_end = x_end;
    sets[n] = solve_minimax(pr).params;
  }
  return sets;
}

void RunGeluSweep(const RunConfig& rc, const GeluSweepOpts& o, const ReportMeta& meta,
                  std::ostream& out) {
  const auto sets = LoadOrFit(rc, o.terms, o.x_end);
  const auto table = bits_terms_sweep(o.bits, o.terms, sets, o.grid);
  std::vector<CsvRow> rows;
  for (const SweepRow& r : table) {
    rows.push_back({std::to_string(r.bits), std::to_string(r.terms), Num(r.max_abs_err),
                    Num(r.mean_abs_err), Num(r.max_rel_err)});
  }
  emit_report(rows, {"bits", "terms", "max_abs_err", "mean_abs_err", "max_rel_err"}, rc.out, meta);
  out << rows.size() << " sweep rows\n";
}

void RunFitGelu(const RunConfig& rc, const FitGeluOpts& o, std::ostream& out) {
  MinimaxProblem pr;
  pr.n_terms = o.terms;
  pr.x_end = o.x_end;
  pr.metric = error_metric_from_string(o.metric);
  pr.r0_mode = r0_mode_from_string(o.r0);
  MinimaxSolution sol = solve_minimax(pr);
  const nlohmann::json meta = {{"N", pr.n_terms},
                               {"x_end", pr.x_end},
                               {"metric", to_string(pr.metric)},
                               {"r0_mode", to_string(pr.r0_mode)},
                               {"iterations", sol.iterations}};
  sol.params.fit_meta = meta.dump();
  write_text_file(rc.out, to_json(sol.params));
  write_text_file(rc.report, fit_report_json(pr, sol));
  out << "N=" << pr.n_terms << " r_max " << sol.err_max << " after " << sol.iterations
      << " exchanges\n";
}

void RunFitExpp(const RunConfig& rc, const FitExppOpts& o, const ReportMeta& meta,
                std::ostream& out) {
  const ExppFitResult fit = fit_expp_params(o.trials, rc.seed);
  write_text_file(rc.out, to_json(fit.params));
  auto row = [](const std::string& name, const ExppParams& p) {
    return CsvRow{name,
                  Num(p.alpha().value()),
                  Num(p.beta().value()),
                  Num(p.gamma1().value()),
                  Num(p.gamma2().value()),
                  Num(expp_fit_objective(p))};
  };
  const std::vector<CsvRow> rows = {row("seed", analytic_expp_seed()),
                                    row("published", ExppParams::Published()),
                                    row("fitted", fit.params)};
  emit_report(rows, {"tuple", "alpha", "beta", "gamma1", "gamma2", "mre"}, rc.report, meta);
  out << "fitted mre " << fit.mre << " (seed " << fit.seed_mre << ", " << fit.accepted
      << " improvements)\n";
}

void RunLatencySweep(const RunConfig& rc, const LatencyOpts& o, const ReportMeta& meta,
                     std::ostream& out) {
  const SoftexConfig cfg = o.config.empty() ? SoftexConfig{} : softex_config_from_json(ReadFile(o.config));
  std::vector<CsvRow> rows;
  for (const Kernel k : {Kernel::kSoftmax, Kernel::kSumExp}) {
    for (const LatencyRow& r : lane_sweep(o.lens, o.lanes, cfg, k, o.n_w)) {
      rows.push_back({std::to_string(r.lanes), Num(r.len), r.kernel, Num(r.cycles),
                      Num(r.throughput_elems_per_cycle)});
    }
  }
  emit_report(rows, {"lanes", "len", "kernel", "cycles", "throughput_elems_per_cycle"}, rc.out,
              meta);
  out << rows.size() << " latency rows\n";
}

void RunMeshSim(const RunConfig& rc, const MeshOpts& o, const ReportMeta& meta,
                std::ostream& out) {
  MeshConfig cfg = o.config.empty() ? MeshConfig{} : mesh_config_from_json(ReadFile(o.config));
  cfg.trials = o.trials;
  cfg.seed = rc.seed;
  std::vector<CsvRow> rows;
  for (const MeshReport& r : mesh_sweep(o.n, cfg, WorkloadSpec{})) {
    rows.push_back({std::to_string(r.n), Num(r.aggregate_gops), Num(r.per_cluster_gops),
                    Num(r.noc_slowdown_fraction), Num(r.required_dram_bandwidth)});
    out << "n=" << r.n << " slowdown " << r.noc_slowdown_fraction << "\n";
  }
  emit_report(rows, {"n", "aggregate_gops", "per_cluster_gops", "slowdown", "bandwidth_gbps"},
              rc.out, meta);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bit-accurate model of the SoftEx softmax/GELU datapath", "softex"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  RunConfig rc;
  ExpAccuracyOpts exp_o;
  SoftmaxOpts sm_o;
  GeluSweepOpts gs_o;
  FitGeluOpts fg_o;
  FitExppOpts fe_o;
  LatencyOpts lat_o;
  MeshOpts mesh_o;

  // Each subcommand keeps its own seed so defaults do not overwrite each other.
  std::map<const CLI::App*, std::uint64_t> seeds;
  auto common = [&rc, &seeds](CLI::App* sub, std::uint64_t seed, const std::string& out_file) {
    seeds[sub] = seed;
    sub->add_option("--seed", seeds[sub], "Run seed");
    sub->add_option("--out", rc.out, "Output file (default $SOFTEX_OUT_DIR/" + out_file + ")");
  };

  auto* exp = app.add_subcommand("exp-accuracy", "Error statistics of exps and expp vs exp");
  exp->add_option("--n", exp_o.n, "Uniform samples");
  exp->add_option("--lo", exp_o.lo, "Lower end of the input range");
  exp->add_option("--hi", exp_o.hi, "Upper end of the input range");

  auto* sm = app.add_subcommand("softmax-bench", "Per-row softmax accuracy on Bf16 score vectors");
  sm->add_option("--rows", sm_o.rows, "Synthetic standard-normal rows");
  sm->add_option("--cols", sm_o.cols, "Row length");
  sm->add_option("--lanes", sm_o.lanes, "Datapath lanes");
  sm->add_option("--input", sm_o.input, "Bf16 batch file instead of synthetic rows")->check(CLI::ExistingFile);

  auto* gs = app.add_subcommand("gelu-sweep", "GELU error over accumulator bits x term counts");
  gs->add_option("--bits", gs_o.bits, "Accumulator widths")->delimiter(',');
  gs->add_option("--terms", gs_o.terms, "Term counts")->delimiter(',');
  gs->add_option("--grid", gs_o.grid, "Grid points on [-6, 6]");
  gs->add_option("--x-end", gs_o.x_end, "Fit range end for sets fitted on the fly");
  gs->add_option("--params", rc.param_files, "Parameter JSON files; missing term counts are fitted")
      ->check(CLI::ExistingFile);

  auto* fg = app.add_subcommand("fit-gelu", "Minimax sum-of-exponentials fit of Q(x)");
  fg->add_option("--terms", fg_o.terms, "Number of exponential terms");
  fg->add_option("--x-end", fg_o.x_end, "Truncation point of the fit range");
  fg->add_option("--metric", fg_o.metric, "relative or absolute")
      ->check(CLI::IsMember({"relative", "absolute"}));
  fg->add_option("--r0", fg_o.r0, "Boundary condition at x=0: minus_rmax or zero")
      ->check(CLI::IsMember({"minus_rmax", "zero"}));
  fg->add_option("--report", rc.report, "Fit report file (default $SOFTEX_OUT_DIR/fit_report_N<terms>.json)");

  auto* fe = app.add_subcommand("fit-expp", "Monte Carlo search of the mantissa-correction constants");
  fe->add_option("--trials", fe_o.trials, "Search trials");
  fe->add_option("--report", rc.report, "Comparison CSV (default $SOFTEX_OUT_DIR/expp_fit.csv)");

  auto* lat = app.add_subcommand("latency-sweep", "Cycle model over vector lengths and lane counts");
  lat->add_option("--lens", lat_o.lens, "Vector lengths")->delimiter(',');
  lat->add_option("--lanes", lat_o.lanes, "Lane counts")->delimiter(',');
  lat->add_option("--n-w", lat_o.n_w, "Sum-of-exponentials terms");
  lat->add_option("--config", lat_o.config, "Latency config JSON")->check(CLI::ExistingFile);

  auto* mesh = app.add_subcommand("mesh-sim", "Monte Carlo mesh scaling model");
  mesh->add_option("--n", mesh_o.n, "Mesh sides")->delimiter(',');
  mesh->add_option("--trials", mesh_o.trials, "Monte Carlo trials");
  mesh->add_option("--config", mesh_o.config, "Mesh config JSON")->check(CLI::ExistingFile);

  common(exp, 7, "exp_accuracy.csv");
  common(sm, 7, "softmax_bench.csv");
  common(gs, 7, "gelu_sweep.csv");
  common(fg, 0, "gelu_params_N<terms>.json");
  common(fe, 1, "expp_params.json");
  common(lat, 0, "latency_sweep.csv");
  common(mesh, 1, "mesh_sim.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    ErrorRecord(err, "usage", e.what());
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  rc.subcommand = sub->get_name();
  rc.seed = seeds.at(sub);
  const ReportMeta meta{CommandLine(argc, argv), rc.seed};

  try {
    if (sub == exp) {
      if (rc.out.empty()) rc.out = DefaultPath("exp_accuracy.csv");
      RunExpAccuracy(rc, exp_o, meta, out);
    } else if (sub == sm) {
      if (rc.out.empty()) rc.out = DefaultPath("softmax_bench.csv");
      RunSoftmaxBench(rc, sm_o, meta, out);
    } else if (sub == gs) {
      if (rc.out.empty()) rc.out = DefaultPath("gelu_sweep.csv");
      RunGeluSweep(rc, gs_o, meta, out);
    } else if (sub == fg) {
      const std::string suffix = "_N" + std::to_string(fg_o.terms) + ".json";
      if (rc.out.empty()) rc.out = DefaultPath("gelu_params" + suffix);
      if (rc.report.empty()) rc.report = DefaultPath("fit_report" + suffix);
      RunFitGelu(rc, fg_o, out);
    } else if (sub == fe) {
      if (rc.out.empty()) rc.out = DefaultPath("expp_params.json");
      if (rc.report.empty()) rc.report = DefaultPath("expp_fit.csv");
      RunFitExpp(rc, fe_o, meta, out);
    } else if (sub == lat) {
      if (rc.out.empty()) rc.out = DefaultPath("latency_sweep.csv");
      RunLatencySweep(rc, lat_o, meta, out);
    } else if (sub == mesh) {
      if (rc.out.empty()) rc.out = DefaultPath("mesh_sim.csv");
      RunMeshSim(rc, mesh_o, meta, out);
    }
  } catch (const ConvergenceError& e) {
    ErrorRecord(err, "convergence", e.what());
    return kExitConvergence;
  } catch (const IoError& e) {
    ErrorRecord(err, "io", e.what());
    return kExitIo;
  } catch (const IngestError& e) {
    ErrorRecord(err, "ingest", e.what());
    return kExitIo;
  } catch (const ConfigError& e) {
    ErrorRecord(err, "config", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    ErrorRecord(err, "domain", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    ErrorRecord(err, "internal", e.what());
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace softex::cli
