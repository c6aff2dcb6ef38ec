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

#include "optdyn/cli/artifacts.h"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace optdyn::cli {
namespace {

nlohmann::json Landmark(const std::optional<int64_t>& t) {
  return t ? nlohmann::json(*t) : nlohmann::json(nullptr);
}

// JSON has no infinities.
nlohmann::json Finite(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string FormatNumber(double v) { return fmt::format("{:.17g}", v); }

std::string TrajectoryCsv(const Trajectory& traj) {
  std::string out = "t";
  for (int i = 0; i < traj.game.rows(); ++i) out += fmt::format(",x{}", i);
  for (int j = 0; j < traj.game.cols(); ++j) out += fmt::format(",y{}", j);
  out += ",gap\n";
  for (const IterateRecord& r : traj.records) {
    out += std::to_string(r.t);
    for (double v : r.x) out += "," + FormatNumber(v);
    for (double v : r.y) out += "," + FormatNumber(v);
    out += "," + FormatNumber(r.gap) + "\n";
  }
  return out;
}

std::string ConvergenceCsv(const ConvergenceReport& report) {
  std::string out = "t,last_gap,random_avg,best\n";
  for (size_t k = 0; k < report.last_gap.size(); ++k) {
    out += fmt::format("{},{},{},{}\n", report.last_gap[k].t,
                       FormatNumber(report.last_gap[k].value),
                       FormatNumber(report.random_avg[k].value),
                       FormatNumber(report.best[k].value));
  }
  return out;
}

std::string SeriesCsv(const std::vector<SeriesPoint>& series,
                      const std::string& column) {
  std::string out = "t," + column + "\n";
  for (const SeriesPoint& p : series) {
    out += fmt::format("{},{}\n", p.t, FormatNumber(p.value));
  }
  return out;
}

nlohmann::json PhaseReportJson(const PhaseReport& report) {
  nlohmann::json j;
  j["T1"] = Landmark(report.t1);
  j["T2"] = Landmark(report.t2);
  j["Ty"] = Landmark(report.ty);
  j["Tm"] = Landmark(report.tm);
  j["Tx"] = Landmark(report.tx);
  nlohmann::json runs = nlohmann::json::array();
  for (const BadRun& r : report.bad_runs) {
    runs.push_back({{"start", r.start},
                    {"end", r.end},
                    {"length", r.length()},
                    {"min_gap", r.min_gap}});
  }
  j["bad_runs"] = runs;
  return j;
}

nlohmann::json PredictionJson(const HardnessPrediction& p) {
  return {{"regularizer", p.regularizer.Name()},
          {"eta", p.eta},
          {"delta", p.delta},
          {"c3", p.c3},
          {"L", p.lipschitz_L},
          {"f_R", p.f_r},
          {"c1", p.c1},
          {"T_h", p.t_h},
          {"T_upper", p.t_upper},
          {"block_length", p.block_length}};
}

nlohmann::json SummaryJson(const ExperimentConfig& config,
                           const Trajectory& traj,
                           const std::optional<PhaseReport>& landmarks,
                           const std::optional<HardnessPrediction>& prediction) {
  const TrajectorySummary& s = traj.summary;
  nlohmann::json j;
  j["config"] = ConfigToJson(config);
  j["best_gap"] = s.best_gap;
  j["best_t"] = s.best_t;
  j["avg_gap"] = s.gap_sum / static_cast<double>(traj.config.horizon);
  j["last_gap"] = s.last_gap;
  j["gap_sum"] = s.gap_sum;
  j["log_min_probability"] = Finite(s.min_log_prob);
  j["final_iterate"] = {{"t", s.final_iterate.t},
                        {"x", s.final_iterate.x},
                        {"y", s.final_iterate.y}};
  j["landmarks"] = landmarks ? PhaseReportJson(*landmarks) : nullptr;
  j["prediction"] = prediction ? PredictionJson(*prediction) : nullptr;
  j["warnings"] = StepSizeWarnings(traj.config);
  return j;
}

void WriteTextFile(const std::filesystem::path& path,
                   const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace optdyn::cli
