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

#ifndef OPTDYN_CLI_SVG_PLOT_H_
#define OPTDYN_CLI_SVG_PLOT_H_

#include <filesystem>
#include <string>
#include <vector>

namespace optdyn::cli {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  // Throws std::runtime_error if the column is missing.
  size_t Column(const std::string& name) const;
};

CsvTable ParseCsv(const std::string& text);
CsvTable ReadCsv(const std::filesystem::path& path);

struct PlotOptions {
  std::string title;
  std::string x_column = "t";
  std::string y_column = "random_avg";
  std::string y_label = "average social dynamic regret";
  // Rows whose band column is >= band_threshold are shaded red.
  std::string band_column = "last_gap";
  double band_threshold = 0.1;
  bool log_x = true;
  int width = 720;
  int height = 420;
};

// Self-contained SVG line plot.
std::string RenderSvg(const CsvTable& table, const PlotOptions& options);

// Plots are always derived from a CSV that was already written.
void RenderSvgFromCsv(const std::filesystem::path& csv,
                      const std::filesystem::path& svg,
                      const PlotOptions& options);

}  // namespace optdyn::cli

#endif  // OPTDYN_CLI_SVG_PLOT_H_
