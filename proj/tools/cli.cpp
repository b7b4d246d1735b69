// Copyright 2026 The qbochner Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qbochner/bochner.hpp"
#include "qbochner/error.hpp"
#include "qbochner/estimate.hpp"
#include "qbochner/io.hpp"
#include "qbochner/measures.hpp"
#include "qbochner/process.hpp"
#include "qbochner/random.hpp"
#include "qbochner/stone.hpp"

namespace qbochner::cli {
namespace {

using io::Json;

constexpr const char* kSchemaSummary = R"(usage: qbochner <subcommand> [options]

subcommands:
  synth        --mu FILE | --gamma FILE  --times LIST  [--out CSV]
  check-pd     --mu FILE | --gamma FILE  [--grids auto|LIST;LIST...] [--tol X] [--seed N] [--out JSON]
  pushforward  --in GAMMA.json --out MU.json
  lift         --in MU.json --out GAMMA.json [--tol X]
  estimate     --samples CSV --grid LIST --out MU.json [--max-iters N] [--tol X] [--prune X] [--step fixed|backtracking]
  simulate     --gamma FILE --times LIST --paths M --seed N [--threads K] [--out CSV]
               [--lags LIST] [--autocov-out CSV] [--summary JSON]
  stone-demo   (--generator FILE | --random N) [--alpha FILE] [--seed N] [--times LIST] [--out JSON]

file schemas:
  Gamma  {"atoms": [{"x": [x1,x2,x3], "w": w}, ...]}
  mu     {"atoms": [{"r": r, "v": [q0,q1,q2,q3]}, ...]}
  matrix row-major nested arrays of [q0,q1,q2,q3]; vector: array of [q0,q1,q2,q3]
  CSV    samples/phi: t,q0,q1,q2,q3   ensemble: path,t,q0,q1,q2,q3   autocov: lag,q0,q1,q2,q3
  LIST   comma separated numbers; "a,b,...,z" continues the progression a, b up to z
exit codes: 0 success, 1 validation failure, 2 usage error
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json with_provenance(Json payload, const Json& config) {
  payload["tool_version"] = kToolVersion;
  payload["config"] = config;
  return payload;
}

std::string provenance_line(const Json& config) {
  return Json{{"tool_version", kToolVersion}, {"config", config}}.dump();
}

void emit_json(const std::string& path, const Json& j, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_json_file(path, j);
  }
}

void emit_text(const std::string& path, const std::function<void(std::ostream&)>& writer, std::ostream& out) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  writer(f);
}

std::vector<double> number_list(const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(std::string("missing ") + what);
  return io::parse_number_list(text);
}

struct MeasureSource {
  std::string mu_path;
  std::string gamma_path;

  PDFunctionSpec load() const {
    if (mu_path.empty() == gamma_path.empty()) throw UsageError("exactly one of --mu or --gamma is required");
    if (!mu_path.empty()) return PDFunctionSpec::FromSlice(io::slice_from_json(io::read_json_file(mu_path)));
    return PDFunctionSpec::FromGamma(io::gamma_from_json(io::read_json_file(gamma_path)));
  }

  Json config() const {
    Json c;
    if (!mu_path.empty()) c["mu"] = mu_path;
    if (!gamma_path.empty()) c["gamma"] = gamma_path;
    return c;
  }
};

QMatrixd random_generator(Eigen::Index n, CounterRng& rng) {
  QMatrixd b(n, n);
  for (Eigen::Index i = 0; i < b.size(); ++i)
    b.data()[i] = Quaterniond(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  return b - adjoint(b);
}

QVectord random_vector(Eigen::Index n, CounterRng& rng) {
  QVectord x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Quaterniond(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  return x;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic positive definite functions, slice measures, and stationary processes", "qbochner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::function<int()> action;

  // synth
  MeasureSource synth_src;
  std::string synth_times, synth_out;
  auto* synth = app.add_subcommand("synth", "Evaluate phi from a measure on a time list (CSV t,q0..q3)");
  synth->add_option("--mu", synth_src.mu_path, "slice measure JSON");
  synth->add_option("--gamma", synth_src.gamma_path, "Gamma JSON");
  synth->add_option("--times", synth_times, "time list")->required();
  synth->add_option("--out", synth_out, "output CSV (default stdout)");
  synth->callback([&] {
    action = [&] {
      const PDFunctionSpec phi = synth_src.load();
      const auto times = number_list(synth_times, "--times");
      std::vector<FitSample> samples;
      for (double t : times) samples.push_back({t, phi(t)});
      Json config = synth_src.config();
      config["subcommand"] = "synth";
      config["times"] = synth_times;
      emit_text(synth_out, [&](std::ostream& os) { io::write_samples_csv(os, samples, provenance_line(config)); }, out);
      return 0;
    };
  });

  // check-pd
  MeasureSource pd_src;
  std::string pd_grids = "auto", pd_out;
  double pd_tol = 0.0;
  std::uint64_t pd_seed = 20260101;
  auto* check = app.add_subcommand("check-pd", "Certify positive definiteness on finite grids");
  check->add_option("--mu", pd_src.mu_path, "slice measure JSON");
  check->add_option("--gamma", pd_src.gamma_path, "Gamma JSON");
  check->add_option("--grids", pd_grids, "'auto' or grids separated by ';'");
  check->add_option("--tol", pd_tol, "PSD margin (<= 0: 1e-9 * phi(0) * n)");
  check->add_option("--seed", pd_seed, "seed for --grids auto");
  check->add_option("--out", pd_out, "report JSON (default stdout)");
  check->callback([&] {
    action = [&] {
      const PDFunctionSpec phi = pd_src.load();
      std::vector<TimeGrid> grids;
      if (pd_grids == "auto") {
        grids = random_grids(pd_seed, 8, 12, 10.0);
      } else {
        std::istringstream is(pd_grids);
        std::string part;
        while (std::getline(is, part, ';'))
          if (!part.empty()) grids.push_back(io::parse_number_list(part));
      }
      if (grids.empty()) throw UsageError("--grids produced no grids");
      const PdReport rep = check_positive_definite(phi, grids, pd_tol);
      Json config = pd_src.config();
      config["subcommand"] = "check-pd";
      config["grids"] = pd_grids;
      config["tol"] = pd_tol;
      config["seed"] = pd_seed;
      Json grid_reports = Json::array();
      for (std::size_t g = 0; g < grids.size(); ++g) {
        Json entry{{"times", grids[g]}};
        if (g < rep.grids.size()) {
          entry["n"] = rep.grids[g].n;
          entry["min_eigenvalue"] = rep.grids[g].min_eigenvalue;
          entry["tol"] = rep.grids[g].tol;
          entry["pass"] = rep.grids[g].pass;
        }
        grid_reports.push_back(entry);
      }
      Json payload{{"pass", rep.pass},
                   {"symmetric", rep.symmetric},
                   {"symmetry_error", rep.symmetry_error},
                   {"min_eigenvalue", rep.min_eigenvalue},
                   {"grid_seed", pd_seed},
                   {"grids", grid_reports}};
      emit_json(pd_out, with_provenance(payload, config), out);
      if (!rep.symmetric) err << "check-pd: phi(-t) != conj(phi(t)) (error " << rep.symmetry_error << ")\n";
      return rep.pass ? 0 : 1;
    };
  });

  // pushforward
  std::string pf_in, pf_out;
  auto* pf = app.add_subcommand("pushforward", "Gamma -> slice measure");
  pf->add_option("--in", pf_in, "Gamma JSON")->required();
  pf->add_option("--out", pf_out, "slice measure JSON (default stdout)");
  pf->callback([&] {
    action = [&] {
      const SliceMeasure mu = pushforward(io::gamma_from_json(io::read_json_file(pf_in)));
      const Json config{{"subcommand", "pushforward"}, {"in", pf_in}};
      emit_json(pf_out, with_provenance(io::to_json(mu), config), out);
      return 0;
    };
  });

  // lift
  std::string lift_in, lift_out;
  double lift_tol = 1e-12;
  auto* lf = app.add_subcommand("lift", "Slice measure -> a Gamma whose push-forward reproduces it");
  lf->add_option("--in", lift_in, "slice measure JSON")->required();
  lf->add_option("--out", lift_out, "Gamma JSON (default stdout)");
  lf->add_option("--tol", lift_tol, "cone tolerance");
  lf->callback([&] {
    action = [&] {
      const ImaginaryAtomicMeasure gamma = lift(io::slice_from_json(io::read_json_file(lift_in)), lift_tol);
      const Json config{{"subcommand", "lift"}, {"in", lift_in}, {"tol", lift_tol}};
      emit_json(lift_out, with_provenance(io::to_json(gamma), config), out);
      return 0;
    };
  });

  // estimate
  std::string est_samples, est_grid, est_out, est_step = "fixed";
  FitConfig fit_cfg;
  auto* est = app.add_subcommand("estimate", "Fit a slice measure on a radius grid to samples of phi");
  est->add_option("--samples", est_samples, "samples CSV t,q0,q1,q2,q3")->required();
  est->add_option("--grid", est_grid, "radius grid list")->required();
  est->add_option("--out", est_out, "slice measure JSON (default stdout)");
  est->add_option("--max-iters", fit_cfg.max_iters, "iteration cap");
  est->add_option("--tol", fit_cfg.tol_residual, "relative step-size stopping tolerance");
  est->add_option("--prune", fit_cfg.prune_threshold, "drop atoms with Re below this");
  est->add_option("--step", est_step, "fixed | backtracking")->check(CLI::IsMember({"fixed", "backtracking"}));
  est->callback([&] {
    action = [&] {
      std::ifstream in(est_samples);
      if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + est_samples);
      const auto samples = io::read_samples_csv(in);
      fit_cfg.radius_grid = number_list(est_grid, "--grid");
      fit_cfg.step_rule = est_step == "backtracking" ? StepRule::Backtracking : StepRule::Fixed;
      const FitResult res = fit(samples, fit_cfg);
      const Json config{{"subcommand", "estimate"}, {"samples", est_samples}, {"grid", est_grid},
                        {"max_iters", fit_cfg.max_iters}, {"tol", fit_cfg.tol_residual},
                        {"prune", fit_cfg.prune_threshold}, {"step", est_step}};
      Json payload = io::to_json(res.measure);
      payload["residual_rms"] = res.residual_rms;
      payload["iterations"] = res.iterations;
      payload["converged"] = res.converged;
      payload["lipschitz"] = res.lipschitz;
      emit_json(est_out, with_provenance(payload, config), out);
      return 0;
    };
  });

  // simulate
  std::string sim_gamma, sim_times, sim_out, sim_lags, sim_autocov_out, sim_summary;
  std::size_t sim_paths = 1000;
  std::uint64_t sim_seed = 1;
  unsigned sim_threads = 1;
  auto* sim = app.add_subcommand("simulate", "Simulate a stationary process with spectral measure Gamma");
  sim->add_option("--gamma", sim_gamma, "Gamma JSON")->required();
  sim->add_option("--times", sim_times, "time grid (t >= 0)")->required();
  sim->add_option("--paths", sim_paths, "number of paths");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--threads", sim_threads, "worker threads (results do not depend on it)");
  sim->add_option("--out", sim_out, "ensemble CSV (default: not written)");
  sim->add_option("--lags", sim_lags, "lags for the autocovariance estimate");
  sim->add_option("--autocov-out", sim_autocov_out, "autocovariance CSV");
  sim->add_option("--summary", sim_summary, "summary JSON (default stdout)");
  sim->callback([&] {
    action = [&] {
      ProcessSpec spec;
      spec.gamma = io::gamma_from_json(io::read_json_file(sim_gamma));
      spec.times = number_list(sim_times, "--times");
      spec.n_paths = sim_paths;
      spec.seed = sim_seed;
      spec.threads = sim_threads;
      const ProcessEnsemble ens = simulate(spec);
      const Json config{{"subcommand", "simulate"}, {"gamma", sim_gamma}, {"times", sim_times},
                        {"paths", sim_paths}, {"seed", sim_seed}, {"lags", sim_lags}};
      if (!sim_out.empty())
        emit_text(sim_out, [&](std::ostream& os) { io::write_ensemble_csv(os, ens, provenance_line(config)); }, out);
      Json payload{{"n_paths", sim_paths},
                   {"n_times", spec.times.size()},
                   {"mc_tolerance_5", mc_tolerance(sim_paths, 5.0)},
                   {"mc_tolerance_10", mc_tolerance(sim_paths, 10.0)}};
      if (!sim_lags.empty()) {
        const auto points = autocov_estimate(ens, io::parse_number_list(sim_lags));
        Json rows = Json::array();
        for (const auto& p : points) {
          const Quaterniond exact = synth_from_gamma(spec.gamma, p.lag);
          rows.push_back({{"lag", p.lag}, {"estimate", io::to_json(p.value)}, {"exact", io::to_json(exact)},
                          {"error", (p.value - exact).norm()}, {"pairs", p.pairs}});
        }
        payload["autocovariance"] = rows;
        if (!sim_autocov_out.empty())
          emit_text(sim_autocov_out,
                    [&](std::ostream& os) { io::write_autocov_csv(os, points, provenance_line(config)); }, out);
      }
      emit_json(sim_summary, with_provenance(payload, config), out);
      return 0;
    };
  });

  // stone-demo
  std::string st_gen, st_alpha, st_times = "0,0.5,...,10", st_out;
  Eigen::Index st_random = 0;
  std::uint64_t st_seed = 7;
  auto* st = app.add_subcommand("stone-demo", "Compare <U(t)a,a> with phi synthesized from the extracted measure");
  st->add_option("--generator", st_gen, "anti-self-adjoint matrix JSON");
  st->add_option("--random", st_random, "use a random n x n anti-self-adjoint generator");
  st->add_option("--alpha", st_alpha, "vector JSON (default: random)");
  st->add_option("--seed", st_seed, "seed for random generator / vector");
  st->add_option("--times", st_times, "time list");
  st->add_option("--out", st_out, "report JSON (default stdout)");
  st->callback([&] {
    action = [&] {
      if (st_gen.empty() == (st_random <= 0)) throw UsageError("exactly one of --generator or --random is required");
      CounterRng rng(st_seed);
      const QMatrixd a = st_gen.empty() ? random_generator(st_random, rng) : io::qmatrix_from_json(io::read_json_file(st_gen));
      const QVectord alpha = st_alpha.empty() ? random_vector(a.rows(), rng) : io::qvector_from_json(io::read_json_file(st_alpha));
      const StoneReport rep = stone_roundtrip(a, alpha, number_list(st_times, "--times"));
      const UnitaryGroupFD group(a);
      const GroupLawReport law = group_law_audit(group, 20, st_seed);
      Json per_time = Json::array();
      for (std::size_t k = 0; k < rep.times.size(); ++k)
        per_time.push_back({{"t", rep.times[k]}, {"deviation", rep.deviations[k]}});
      const Json config{{"subcommand", "stone-demo"}, {"generator", st_gen}, {"random", st_random},
                        {"alpha", st_alpha}, {"seed", st_seed}, {"times", st_times}};
      Json payload{{"generator", io::to_json(a)},
                   {"alpha", io::to_json(alpha)},
                   {"radii", rep.system.radii},
                   {"measure", io::to_json(rep.measure)},
                   {"deviations", per_time},
                   {"max_deviation", rep.max_deviation},
                   {"bound", rep.bound},
                   {"within_bound", rep.within_bound},
                   {"group_law_deviation", law.max_group_deviation},
                   {"unitarity_deviation", law.max_unitarity_deviation}};
      emit_json(st_out, with_provenance(payload, config), out);
      return rep.within_bound ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << kSchemaSummary;
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << kSchemaSummary;
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace qbochner::cli
