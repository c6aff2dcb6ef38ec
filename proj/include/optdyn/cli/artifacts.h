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

#ifndef OPTDYN_CLI_ARTIFACTS_H_
#define OPTDYN_CLI_ARTIFACTS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "optdyn/cli/config.h"
#include "optdyn/dynamics.h"
#include "optdyn/hardness.h"
#include "optdyn/metrics.h"

namespace optdyn::cli {

// 17 significant digits, so values round-trip and files are reproducible.
std::string FormatNumber(double v);

// Columns: t, x0..x{d1-1}, y0..y{d2-1}, gap.
std::string TrajectoryCsv(const Trajectory& traj);
// Columns: t, last_gap, random_avg, best.
std::string ConvergenceCsv(const ConvergenceReport& report);
// Columns: t, <column>.
std::string SeriesCsv(const std::vector<SeriesPoint>& series,
                      const std::string& column);

nlohmann::json PhaseReportJson(const PhaseReport& report);
nlohmann::json PredictionJson(const HardnessPrediction& p);

// Summary keys: config, best_gap, best_t, avg_gap, last_gap, gap_sum,
// final_iterate, landmarks, prediction, warnings.
nlohmann::json SummaryJson(const ExperimentConfig& config,
                           const Trajectory& traj,
                           const std::optional<PhaseReport>& landmarks,
                           const std::optional<HardnessPrediction>& prediction);

// Writes through a temporary file so readers never see a partial file.
void WriteTextFile(const std::filesystem::path& path,
                   const std::string& content);

}  // namespace optdyn::cli

#endif  // OPTDYN_CLI_ARTIFACTS_H_
