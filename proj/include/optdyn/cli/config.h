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

#ifndef OPTDYN_CLI_CONFIG_H_
#define OPTDYN_CLI_CONFIG_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "optdyn/dynamics.h"
#include "optdyn/game.h"

namespace optdyn::cli {

// Malformed or invalid configuration. `line` is 0 when the problem is not
// tied to a single line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class GameKind { kADelta, kADxDy, kExplicit };

struct ExperimentConfig {
  GameKind game_kind = GameKind::kADelta;
  double delta = 0.01;
  double delta_x = 0.01;
  double delta_y = 0.3;
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;
  EntryRange range;

  // As written in the file ("omwu" is kept for the echo).
  std::string algorithm_name = "omwu";
  // Empty selects the algorithm's default (entropy, or sqeuclid for OGDA).
  std::string regularizer_name;
  double beta = 0.5;
  // Resolved from the fields above.
  DynamicsConfig dynamics;

  // Output file names, relative to the output directory. Empty disables.
  std::string csv = "trajectory.csv";
  std::string report_csv = "convergence.csv";
  std::string json = "summary.json";
  std::string svg;
  double gap_threshold = 0.1;
  double c3 = 0.5;

  MatrixGame BuildGame() const;
};

// Flat "key = value" text, one pair per line, '#' starts a comment.
// Unknown or repeated keys are errors.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfigFile(const std::string& path);

// Applies a single key/value on top of `config` and revalidates; used by
// sweeps.
void SetConfigValue(ExperimentConfig& config, const std::string& key,
                    const std::string& value);

nlohmann::json ConfigToJson(const ExperimentConfig& config);

// Documentation of every key, for --help.
std::string ConfigKeysHelp();

std::string GameKindName(GameKind kind);

}  // namespace optdyn::cli

#endif  // OPTDYN_CLI_CONFIG_H_
