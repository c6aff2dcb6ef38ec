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

#include "optdyn/cli/commands.h"

#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "optdyn/cli/artifacts.h"
#include "optdyn/cli/config.h"
#include "optdyn/cli/experiments.h"
#include "optdyn/cli/verify.h"
#include "optdyn/hardness.h"

namespace optdyn::cli {
namespace {

struct GlobalFlags {
  std::string config;
  std::string out = "out";
  int threads = 0;
  bool seedless = false;

  int Threads() const {
    if (threads > 0) return threads;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
};

ExperimentConfig RequireConfig(const GlobalFlags& g) {
  if (g.config.empty()) throw ConfigError("--config PATH is required");
  return LoadConfigFile(g.config);
}

void PrintWarnings(const DynamicsConfig& cfg, std::ostream& err) {
  for (const std::string& w : StepSizeWarnings(cfg)) {
    err << "warning: " << w << "\n";
  }
}

int CmdRun(const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = RequireConfig(g);
  PrintWarnings(cfg.dynamics, err);
  const RunOutcome r = RunExperiment(cfg, g.out);
  out << fmt::format("best_gap {} at t={}, avg_gap {}, last_gap {}\n",
                     r.summary["best_gap"].get<double>(),
                     r.summary["best_t"].get<int64_t>(),
                     r.summary["avg_gap"].get<double>(),
                     r.summary["last_gap"].get<double>());
  for (const auto& p : r.artifacts) out << "wrote " << p.string() << "\n";
  return kExitOk;
}

int CmdFigure1(const GlobalFlags& g, Figure1Options o,
               const std::vector<std::string>& horizons, std::ostream& out) {
  for (const std::string& h : horizons) {
    const auto eq = h.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--horizon expects PANEL=T, got '" + h + "'");
    }
    char* end = nullptr;
    const std::string num = h.substr(eq + 1);
    const double t = std::strtod(num.c_str(), &end);
    if (num.empty() || *end != '\0' || t < 1) {
      throw ConfigError("--horizon: bad iteration count in '" + h + "'");
    }
    o.horizons[h.substr(0, eq)] = static_cast<int64_t>(t);
  }
  o.threads = g.Threads();
  if (!(o.delta > 0.0 && o.delta < 0.5)) {
    throw ConfigError("--delta must lie in (0, 1/2)");
  }
  const auto panels = RunFigure1(o, g.out);
  out << fmt::format("{:<18} {:>8} {:>16} {:>12} {:>20}\n", "panel", "T",
                     "avg regret", "last gap", "longest gap>=thr run");
  for (const PanelOutcome& p : panels) {
    const std::string run =
        p.longest_bad_run ? fmt::format("[{},{}]", p.longest_bad_run->start,
                                        p.longest_bad_run->end)
                          : "none";
    out << fmt::format("{:<18} {:>8} {:>16.6g} {:>12.4g} {:>20}\n",
                       p.panel.name, p.panel.horizon, p.final_avg_regret,
                       p.final_gap, run);
  }
  out << "wrote " << (std::filesystem::path(g.out) / "figure1_*").string()
      << "\n";
  return kExitOk;
}

int CmdSweep(const GlobalFlags& g, const std::string& param,
             const std::vector<std::string>& values, std::ostream& out) {
  const ExperimentConfig base = RequireConfig(g);
  const auto results = RunSweep(base, param, values, g.Threads(), g.out);
  for (const SweepOutcome& s : results) {
    out << fmt::format("{}={}: best_gap {} avg_gap {} last_gap {}\n", param,
                       s.value, s.summary["best_gap"].get<double>(),
                       s.summary["avg_gap"].get<double>(),
                       s.summary["last_gap"].get<double>());
  }
  out << "wrote " << (std::filesystem::path(g.out) / "sweep.csv").string()
      << "\n";
  return kExitOk;
}

struct PredictFlags {
  std::string regularizer = "entropy";
  double beta = 0.5;
  double eta = 0.1;
  double delta = 0.01;
  double c3 = kDefaultC3;
};

int CmdPredict(const GlobalFlags& g, PredictFlags p, std::ostream& out) {
  if (!g.config.empty()) {
    const ExperimentConfig cfg = LoadConfigFile(g.config);
    if (cfg.game_kind != GameKind::kADelta) {
      throw ConfigError("predict needs game = a_delta");
    }
    const Regularizer reg = cfg.dynamics.algorithm == Algorithm::kOgda
                                ? Regularizer::SqEuclid()
                                : cfg.dynamics.regularizer;
    out << PredictionJson(PredictBadBlock(reg, cfg.dynamics.eta, cfg.delta,
                                          cfg.c3))
               .dump(2)
        << "\n";
    return kExitOk;
  }
  const Regularizer reg = Regularizer::Parse(p.regularizer, p.beta);
  out << PredictionJson(PredictBadBlock(reg, p.eta, p.delta, p.c3)).dump(2)
      << "\n";
  return kExitOk;
}

int CmdVerify(const GlobalFlags& g, const std::string& suite,
              std::ostream& out) {
  VerifyOptions o;
  o.out_dir = g.out;
  o.threads = g.Threads();
  const SuiteReport r = RunSuite(suite, o);
  for (const CheckResult& c : r.checks) out << FormatCheck(c) << "\n";
  const auto passed = std::count_if(r.checks.begin(), r.checks.end(),
                                    [](const CheckResult& c) { return c.pass; });
  out << fmt::format("suite {}: {}/{} passed\n", suite, passed,
                     r.checks.size());
  return r.AllPass() ? kExitOk : kExitNumeric;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{
      "Optimistic learning dynamics in two-player zero-sum matrix games."};
  app.footer(ConfigKeysHelp());
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config, "Experiment config file");
  app.add_option("--out", g.out, "Output directory")->capture_default_str();
  app.add_option("--threads", g.threads,
                 "Worker threads for figure1/sweep/verify (default: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--seedless", g.seedless,
               "Accepted for compatibility; every computation is "
               "deterministic");

  auto* run = app.add_subcommand("run", "Run one configured experiment");

  Figure1Options fig;
  std::vector<std::string> fig_horizons;
  auto* figure1 = app.add_subcommand(
      "figure1", "OGDA and OFTRL panels on A_delta with red bad regions");
  figure1->add_option("--delta", fig.delta, "delta of A_delta")
      ->capture_default_str();
  figure1->add_option("--eta", fig.eta, "Step size")->capture_default_str();
  figure1->add_option("--beta", fig.tsallis_beta, "Tsallis parameter")
      ->capture_default_str();
  figure1->add_option("--ogda-horizon", fig.ogda_horizon, "OGDA iterations")
      ->capture_default_str();
  figure1->add_option("--horizon", fig_horizons,
                      "Override a panel horizon, PANEL=T (panels: ogda, "
                      "oftrl_logbarrier, oftrl_entropy, oftrl_tsallis, "
                      "oftrl_sqeuclid)");
  figure1->add_option("--gap-threshold", fig.gap_threshold,
                      "Gap that marks the red region")
      ->capture_default_str();

  std::string sweep_param;
  std::vector<std::string> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "Vary one config key over values");
  sweep->add_option("--param", sweep_param, "Config key to vary")->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")
      ->required()
      ->delimiter(',');

  PredictFlags pf;
  auto* predict = app.add_subcommand(
      "predict", "Bad-block prediction for OFTRL on A_delta");
  predict->add_option("--regularizer", pf.regularizer)->capture_default_str();
  predict->add_option("--beta", pf.beta)->capture_default_str();
  predict->add_option("--eta", pf.eta)->capture_default_str();
  predict->add_option("--delta", pf.delta)->capture_default_str();
  predict->add_option("--c3", pf.c3)->capture_default_str();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->check(CLI::IsMember(SuiteNames()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return CmdRun(g, out, err);
    if (*figure1) return CmdFigure1(g, fig, fig_horizons, out);
    if (*sweep) return CmdSweep(g, sweep_param, sweep_values, out);
    if (*predict) return CmdPredict(g, pf, out);
    if (*verify) return CmdVerify(g, suite, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace optdyn::cli
