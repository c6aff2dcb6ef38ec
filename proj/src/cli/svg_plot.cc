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

#include "optdyn/cli/svg_plot.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "optdyn/cli/artifacts.h"

namespace optdyn::cli {
namespace {

constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

size_t CsvTable::Column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw std::runtime_error("CSV has no column '" + name + "'");
  }
  return static_cast<size_t>(it - header.begin());
}

CsvTable ParseCsv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  table.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& cell : split(line)) {
      row.push_back(std::strtod(cell.c_str(), nullptr));
    }
    if (row.size() != table.header.size()) {
      throw std::runtime_error("ragged CSV row");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCsv(ss.str());
}

std::string RenderSvg(const CsvTable& table, const PlotOptions& o) {
  const size_t cx = table.Column(o.x_column);
  const size_t cy = table.Column(o.y_column);
  const bool banded = std::find(table.header.begin(), table.header.end(),
                                o.band_column) != table.header.end();
  const size_t cb = banded ? table.Column(o.band_column) : 0;

  const double w = o.width, h = o.height;
  const double pw = w - kLeft - kRight, ph = h - kTop - kBottom;
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = 0.0, y_hi = -INFINITY;
  for (const auto& r : table.rows) {
    x_lo = std::min(x_lo, r[cx]);
    x_hi = std::max(x_hi, r[cx]);
    y_lo = std::min(y_lo, r[cy]);
    y_hi = std::max(y_hi, r[cy]);
  }
  if (table.rows.empty()) {
    x_lo = 1;
    x_hi = 10;
    y_hi = 1;
  }
  if (o.log_x) x_lo = std::max(x_lo, 1.0);
  if (x_hi <= x_lo) x_hi = x_lo + 1;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1;
  y_hi = y_lo + 1.05 * (y_hi - y_lo);

  auto fx = [&](double x) {
    if (o.log_x) {
      const double lx = std::log10(std::max(x, 1.0));
      return kLeft + pw * (lx - std::log10(x_lo)) /
                         (std::log10(x_hi) - std::log10(x_lo));
    }
    return kLeft + pw * (x - x_lo) / (x_hi - x_lo);
  };
  auto fy = [&](double y) { return kTop + ph * (1.0 - (y - y_lo) / (y_hi - y_lo)); };

  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      o.width, o.height, o.width, o.height);

  if (banded) {
    size_t k = 0;
    const size_t n = table.rows.size();
    while (k < n) {
      if (table.rows[k][cb] < o.band_threshold) {
        ++k;
        continue;
      }
      const size_t start = k;
      while (k < n && table.rows[k][cb] >= o.band_threshold) ++k;
      const double a = fx(table.rows[start][cx]);
      const double b = fx(table.rows[k - 1][cx]);
      s += fmt::format(
          "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
          "fill=\"red\" fill-opacity=\"0.25\"/>\n",
          a, kTop, std::max(b - a, 0.75), ph);
    }
  }

  // Axes and ticks.
  s += fmt::format(
      "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">"
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>"
      "<line x1=\"{0:.2f}\" y1=\"{3:.2f}\" x2=\"{0:.2f}\" y2=\"{1:.2f}\"/></g>\n",
      kLeft, kTop + ph, kLeft + pw, kTop);
  s += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  if (o.log_x) {
    for (int e = static_cast<int>(std::floor(std::log10(x_lo)));
         e <= static_cast<int>(std::ceil(std::log10(x_hi))); ++e) {
      const double t = std::pow(10.0, e);
      if (t < x_lo || t > x_hi) continue;
      s += fmt::format(
          "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
          "stroke=\"black\"/><text x=\"{0:.2f}\" y=\"{3:.2f}\" "
          "text-anchor=\"middle\">1e{4}</text>\n",
          fx(t), kTop + ph, kTop + ph + 5, kTop + ph + 18, e);
    }
  } else {
    for (int k = 0; k <= 5; ++k) {
      const double t = x_lo + (x_hi - x_lo) * k / 5.0;
      s += fmt::format(
          "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
          "stroke=\"black\"/><text x=\"{0:.2f}\" y=\"{3:.2f}\" "
          "text-anchor=\"middle\">{4:.0f}</text>\n",
          fx(t), kTop + ph, kTop + ph + 5, kTop + ph + 18, t);
    }
  }
  for (int k = 0; k <= 5; ++k) {
    const double v = y_lo + (y_hi - y_lo) * k / 5.0;
    s += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
        "stroke=\"black\"/><text x=\"{3:.2f}\" y=\"{4:.2f}\" "
        "text-anchor=\"end\">{5:.3g}</text>\n",
        kLeft - 5, fy(v), kLeft, kLeft - 8, fy(v) + 4, v);
  }
  s += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
      kLeft + pw / 2, h - 10, Escape(o.x_column + (o.log_x ? " (log)" : "")));
  s += fmt::format(
      "<text transform=\"translate(15,{:.2f}) rotate(-90)\" "
      "text-anchor=\"middle\">{}</text>\n",
      kTop + ph / 2, Escape(o.y_label));
  s += fmt::format(
      "<text x=\"{:.2f}\" y=\"22\" text-anchor=\"middle\" "
      "font-size=\"14\">{}</text>\n",
      kLeft + pw / 2, Escape(o.title));
  s += "</g>\n";

  // Keep the min and max per pixel column so long series stay small.
  std::map<int, std::pair<double, double>> columns;
  for (const auto& r : table.rows) {
    if (o.log_x && r[cx] < 1.0) continue;
    const int px = static_cast<int>(std::lround(fx(r[cx]) * 2.0));
    const double py = fy(r[cy]);
    auto [it, fresh] = columns.emplace(px, std::make_pair(py, py));
    if (!fresh) {
      it->second.first = std::min(it->second.first, py);
      it->second.second = std::max(it->second.second, py);
    }
  }
  s += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" "
       "points=\"";
  for (const auto& [px, yy] : columns) {
    s += fmt::format("{:.2f},{:.2f} ", px / 2.0, yy.first);
    if (yy.second != yy.first) {
      s += fmt::format("{:.2f},{:.2f} ", px / 2.0, yy.second);
    }
  }
  s += "\"/>\n</svg>\n";
  return s;
}

void RenderSvgFromCsv(const std::filesystem::path& csv,
                      const std::filesystem::path& svg,
                      const PlotOptions& options) {
  WriteTextFile(svg, RenderSvg(ReadCsv(csv), options));
}

}  // namespace optdyn::cli
