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

#ifndef OPTDYN_CLI_EXPERIMENTS_H_
#define OPTDYN_CLI_EXPERIMENTS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "optdyn/cli/config.h"
#include "optdyn/dynamics.h"
#include "optdyn/hardness.h"

namespace optdyn::cli {

// Runs fn(0..n-1) on up to `threads` workers. The first exception thrown by
// any task is rethrown after all workers stop.
void ParallelFor(size_t n, int threads, const std::function<void(size_t)>& fn);

struct RunOutcome {
  Trajectory trajectory;
  nlohmann::json summary;
  std::vector<std::filesystem::path> artifacts;
};

// Runs one configured experiment and writes its artifacts under out_dir.
// Nothing is written when the run fails.
RunOutcome RunExperiment(const ExperimentConfig& config,
                         const std::filesystem::path& out_dir);

struct Figure1Panel {
  std::string name;
  Algorithm algorithm;
  Regularizer regularizer;
  int64_t horizon;
};

struct Figure1Options {
  double delta = 0.01;
  double eta = 0.1;
  double tsallis_beta = 0.5;
  int64_t ogda_horizon = 10000;
  // Keyed by panel name; replaces the default horizon.
  std::map<std::string, int64_t> horizons;
  double gap_threshold = 0.1;
  int threads = 1;
};

// ceil(20 (1 + f_R(delta)) / delta): a fixed multiple of the time scale on
// which the OFTRL lower-bound argument operates for this regularizer.
int64_t DefaultFigure1Horizon(const Regularizer& reg, double delta);

// OGDA plus OFTRL with log barrier, entropy, Tsallis and squared Euclidean
// regularizers.
std::vector<Figure1Panel> Figure1Panels(const Figure1Options& options);

struct PanelOutcome {
  Figure1Panel panel;
  double final_avg_regret;
  double final_gap;
  double best_gap;
  std::optional<BadRun> longest_bad_run;
};

// Writes figure1_<panel>.csv/.svg and figure1_summary.json when out_dir is
// non-empty.
std::vector<PanelOutcome> RunFigure1(const Figure1Options& options,
                                     const std::filesystem::path& out_dir);

struct SweepOutcome {
  std::string value;
  nlohmann::json summary;
};

// One run per value of `param`, each in out_dir/<param>_<value>/, plus
// out_dir/sweep.csv. All configurations are validated before any run.
std::vector<SweepOutcome> RunSweep(const ExperimentConfig& base,
                                   const std::string& param,
                                   const std::vector<std::string>& values,
                                   int threads,
                                   const std::filesystem::path& out_dir);

}  // namespace optdyn::cli

#endif  // OPTDYN_CLI_EXPERIMENTS_H_
