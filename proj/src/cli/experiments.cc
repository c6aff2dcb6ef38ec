// Copyright 2026 The optdyn Authors.
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

#include "optdyn/cli/experiments.h"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "optdyn/cli/artifacts.h"
#include "optdyn/cli/svg_plot.h"
#include "optdyn/metrics.h"

namespace optdyn::cli {

void ParallelFor(size_t n, int threads,
                 const std::function<void(size_t)>& fn) {
  const size_t workers =
      std::min(n, static_cast<size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RunOutcome RunExperiment(const ExperimentConfig& config,
                         const std::filesystem::path& out_dir) {
  if (!config.svg.empty() && config.report_csv.empty()) {
    throw ConfigError("svg output needs report_csv, which it is drawn from");
  }
  const MatrixGame game = config.BuildGame();
  RunOutcome out{RunDynamics(game, config.dynamics), {}, {}};
  const Trajectory& traj = out.trajectory;

  std::optional<PhaseReport> landmarks;
  std::optional<HardnessPrediction> prediction;
  if (config.game_kind == GameKind::kADelta) {
    landmarks = DetectPhasesGlobal(traj, config.delta, config.gap_threshold);
    const Regularizer& reg = config.dynamics.algorithm == Algorithm::kOgda
                                 ? Regularizer::SqEuclid()
                                 : config.dynamics.regularizer;
    if (config.dynamics.eta <= 1.0 / (4.0 * reg.lipschitz_L())) {
      prediction =
          PredictBadBlock(reg, config.dynamics.eta, config.delta, config.c3);
    }
  } else if (config.game_kind == GameKind::kADxDy) {
    landmarks = DetectPhasesInitial(traj, config.delta_x, config.delta_y,
                                    config.gap_threshold);
  }
  out.summary = SummaryJson(config, traj, landmarks, prediction);

  if (!config.csv.empty()) {
    WriteTextFile(out_dir / config.csv, TrajectoryCsv(traj));
    out.artifacts.push_back(out_dir / config.csv);
  }
  if (!config.report_csv.empty()) {
    WriteTextFile(out_dir / config.report_csv,
                  ConvergenceCsv(MakeConvergenceReport(traj)));
    out.artifacts.push_back(out_dir / config.report_csv);
  }
  if (!config.json.empty()) {
    WriteTextFile(out_dir / config.json, out.summary.dump(2) + "\n");
    out.artifacts.push_back(out_dir / config.json);
  }
  if (!config.svg.empty()) {
    PlotOptions plot;
    plot.title = fmt::format("{} / {}, eta = {}", config.algorithm_name,
                             config.dynamics.regularizer.Name(),
                             config.dynamics.eta);
    plot.band_threshold = config.gap_threshold;
    RenderSvgFromCsv(out_dir / config.report_csv, out_dir / config.svg, plot);
    out.artifacts.push_back(out_dir / config.svg);
  }
  return out;
}

int64_t DefaultFigure1Horizon(const Regularizer& reg, double delta) {
  return static_cast<int64_t>(
      std::ceil(20.0 * (1.0 + FDelta(reg, delta)) / delta));
}

std::vector<Figure1Panel> Figure1Panels(const Figure1Options& o) {
  std::vector<Figure1Panel> panels = {
      {"ogda", Algorithm::kOgda, Regularizer::SqEuclid(), o.ogda_horizon},
      {"oftrl_logbarrier", Algorithm::kOftrl, Regularizer::LogBarrier(), 0},
      {"oftrl_entropy", Algorithm::kOftrl, Regularizer::Entropy(), 0},
      {"oftrl_tsallis", Algorithm::kOftrl, Regularizer::Tsallis(o.tsallis_beta),
       0},
      {"oftrl_sqeuclid", Algorithm::kOftrl, Regularizer::SqEuclid(), 0},
  };
  for (Figure1Panel& p : panels) {
    if (p.horizon == 0) p.horizon = DefaultFigure1Horizon(p.regularizer, o.delta);
    const auto it = o.horizons.find(p.name);
    if (it != o.horizons.end()) p.horizon = it->second;
    if (p.horizon < 1) throw DomainError("figure1: horizon must be >= 1");
  }
  return panels;
}

std::vector<PanelOutcome> RunFigure1(const Figure1Options& o,
                                     const std::filesystem::path& out_dir) {
  const MatrixGame game = MakeADelta(o.delta);
  for (const auto& [name, h] : o.horizons) {
    bool known = false;
    for (const Figure1Panel& p : Figure1Panels(Figure1Options{})) {
      known = known || p.name == name;
    }
    if (!known) throw DomainError("figure1: unknown panel '" + name + "'");
  }
  const std::vector<Figure1Panel> panels = Figure1Panels(o);
  std::vector<std::optional<PanelOutcome>> results(panels.size());

  ParallelFor(panels.size(), o.threads, [&](size_t k) {
    const Figure1Panel& p = panels[k];
    DynamicsConfig cfg;
    cfg.algorithm = p.algorithm;
    cfg.regularizer = p.regularizer;
    cfg.eta = o.eta;
    cfg.horizon = p.horizon;
    const Trajectory traj = RunDynamics(game, cfg);
    const PhaseReport phases = DetectPhasesGlobal(traj, o.delta, o.gap_threshold);
    std::optional<BadRun> longest;
    for (const BadRun& r : phases.bad_runs) {
      if (!longest || r.length() > longest->length()) longest = r;
    }
    results[k] = PanelOutcome{p,
                              traj.summary.gap_sum /
                                  static_cast<double>(p.horizon),
                              traj.summary.last_gap, traj.summary.best_gap,
                              longest};
    if (!out_dir.empty()) {
      const auto csv = out_dir / ("figure1_" + p.name + ".csv");
      WriteTextFile(csv, ConvergenceCsv(MakeConvergenceReport(traj)));
      PlotOptions plot;
      plot.title = fmt::format("{}, delta = {}, eta = {}, T = {}", p.name,
                               o.delta, o.eta, p.horizon);
      plot.band_threshold = o.gap_threshold;
      RenderSvgFromCsv(csv, out_dir / ("figure1_" + p.name + ".svg"), plot);
    }
  });

  std::vector<PanelOutcome> out;
  for (auto& r : results) out.push_back(*r);
  if (!out_dir.empty()) {
    nlohmann::json j;
    j["delta"] = o.delta;
    j["eta"] = o.eta;
    j["gap_threshold"] = o.gap_threshold;
    for (const PanelOutcome& r : out) {
      nlohmann::json panel = {{"algorithm", AlgorithmName(r.panel.algorithm)},
                              {"regularizer", r.panel.regularizer.Name()},
                              {"horizon", r.panel.horizon},
                              {"final_avg_regret", r.final_avg_regret},
                              {"final_gap", r.final_gap},
                              {"best_gap", r.best_gap}};
      if (r.longest_bad_run) {
        panel["longest_bad_run"] = {{"start", r.longest_bad_run->start},
                                    {"end", r.longest_bad_run->end},
                                    {"length", r.longest_bad_run->length()}};
      } else {
        panel["longest_bad_run"] = nullptr;
      }
      j["panels"][r.panel.name] = panel;
    }
    WriteTextFile(out_dir / "figure1_summary.json", j.dump(2) + "\n");
  }
  return out;
}

std::vector<SweepOutcome> RunSweep(const ExperimentConfig& base,
                                   const std::string& param,
                                   const std::vector<std::string>& values,
                                   int threads,
                                   const std::filesystem::path& out_dir) {
  if (values.empty()) throw ConfigError("sweep: no values given");
  std::vector<ExperimentConfig> configs;
  for (const std::string& v : values) {
    ExperimentConfig c = base;
    SetConfigValue(c, param, v);
    configs.push_back(std::move(c));
  }
  std::vector<SweepOutcome> out(values.size());
  ParallelFor(configs.size(), threads, [&](size_t k) {
    const RunOutcome r =
        RunExperiment(configs[k], out_dir / (param + "_" + values[k]));
    out[k] = SweepOutcome{values[k], r.summary};
  });
  std::string csv = param + ",best_gap,best_t,avg_gap,last_gap\n";
  for (const SweepOutcome& s : out) {
    csv += fmt::format("{},{},{},{},{}\n", s.value,
                       FormatNumber(s.summary["best_gap"].get<double>()),
                       s.summary["best_t"].get<int64_t>(),
                       FormatNumber(s.summary["avg_gap"].get<double>()),
                       FormatNumber(s.summary["last_gap"].get<double>()));
  }
  WriteTextFile(out_dir / "sweep.csv", csv);
  return out;
}

}  // namespace optdyn::cli
