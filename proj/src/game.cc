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

#include "optdyn/game.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace optdyn {
namespace {

constexpr double kNashGapTolerance = 1e-10;

// Entries of A_{dx,dy} without precondition checks.
std::array<double, 4> ADxDyEntries(double dx, double dy) {
  return {(1.0 - dy) / (1.0 - dx), (1.0 - dx - dy) / (1.0 - dx), 0.0, 1.0};
}

}  // namespace

MatrixGame::MatrixGame(int rows, int cols, std::vector<double> entries,
                       EntryRange range)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), range_(range) {
  if (rows_ < 2 || cols_ < 2) {
    throw DomainError("MatrixGame: need at least 2 actions per player, got " +
                      std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (entries_.size() != static_cast<size_t>(rows_) * cols_) {
    throw DomainError("MatrixGame: expected " + std::to_string(rows_ * cols_) +
                      " entries, got " + std::to_string(entries_.size()));
  }
  if (!(range_.lo <= range_.hi) || !std::isfinite(range_.lo) ||
      !std::isfinite(range_.hi)) {
    throw DomainError("MatrixGame: declared range must be a finite interval");
  }
  for (size_t k = 0; k < entries_.size(); ++k) {
    const double v = entries_[k];
    if (!std::isfinite(v) || v < range_.lo || v > range_.hi) {
      throw DomainError("MatrixGame: entry (" + std::to_string(k / cols_) +
                        "," + std::to_string(k % cols_) + ") = " +
                        std::to_string(v) + " outside declared range [" +
                        std::to_string(range_.lo) + "," +
                        std::to_string(range_.hi) + "]");
    }
  }
}

MatrixGame MatrixGame::FromRows(const std::vector<std::vector<double>>& rows,
                                EntryRange range) {
  if (rows.empty()) throw DomainError("MatrixGame: no rows");
  const size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DomainError("MatrixGame: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return MatrixGame(static_cast<int>(rows.size()), static_cast<int>(cols),
                    std::move(flat), range);
}

void MatrixGame::LossX(std::span<const double> y, std::span<double> out) const {
  for (int i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < cols_; ++j) acc += entries_[i * cols_ + j] * y[j];
    out[i] = acc;
  }
}

void MatrixGame::LossY(std::span<const double> x, std::span<double> out) const {
  for (int j = 0; j < cols_; ++j) {
    double acc = 0.0;
    for (int i = 0; i < rows_; ++i) acc += entries_[i * cols_ + j] * x[i];
    out[j] = -acc;
  }
}

std::vector<double> MatrixGame::LossX(std::span<const double> y) const {
  std::vector<double> out(rows_);
  LossX(y, out);
  return out;
}

std::vector<double> MatrixGame::LossY(std::span<const double> x) const {
  std::vector<double> out(cols_);
  LossY(x, out);
  return out;
}

void CheckSimplex(std::span<const double> p, const char* what) {
  if (p.empty()) throw DomainError(std::string(what) + ": empty vector");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string(what) + ": negative or non-finite entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw DomainError(std::string(what) + ": entries sum to " +
                      std::to_string(sum));
  }
}

SimplexPoint::SimplexPoint(std::vector<double> probs)
    : probs_(std::move(probs)) {
  CheckSimplex(probs_, "SimplexPoint");
}

SimplexPoint SimplexPoint::Uniform(int dim) {
  if (dim < 1) throw DomainError("SimplexPoint::Uniform: dim < 1");
  return SimplexPoint(std::vector<double>(dim, 1.0 / dim));
}

MatrixGame MakeADelta(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("MakeADelta: delta must lie in (0, 1/2), got " +
                      std::to_string(delta));
  }
  return MatrixGame(2, 2, {0.5 + delta, 0.5, 0.0, 1.0});
}

MatrixGame MakeADxDy(double delta_x, double delta_y) {
  if (!(delta_x > 0.0 && delta_x <= delta_y && delta_y <= 1.0 - delta_x)) {
    throw DomainError("MakeADxDy: need 0 < delta_x <= delta_y <= 1 - delta_x");
  }
  const auto e = ADxDyEntries(delta_x, delta_y);
  return MatrixGame(2, 2, {e[0], e[1], e[2], e[3]});
}

double DualityGap(const MatrixGame& game, std::span<const double> x,
                  std::span<const double> y) {
  if (x.size() != static_cast<size_t>(game.rows()) ||
      y.size() != static_cast<size_t>(game.cols())) {
    throw DomainError("DualityGap: strategy dimensions do not match the game");
  }
  // Best responses are pure, so both optimizations reduce to coordinate
  // extremes of the payoff vectors.
  double best_col = -INFINITY;
  for (int j = 0; j < game.cols(); ++j) {
    double v = 0.0;
    for (int i = 0; i < game.rows(); ++i) v += game(i, j) * x[i];
    best_col = std::max(best_col, v);
  }
  double best_row = INFINITY;
  for (int i = 0; i < game.rows(); ++i) {
    double v = 0.0;
    for (int j = 0; j < game.cols(); ++j) v += game(i, j) * y[j];
    best_row = std::min(best_row, v);
  }
  return best_col - best_row;
}

double DualityGap(const MatrixGame& game, const SimplexPoint& x,
                  const SimplexPoint& y) {
  return DualityGap(game, x.probs(), y.probs());
}

NashPoint2x2 SolveNash2x2(const MatrixGame& game) {
  if (!game.IsTwoByTwo()) throw DomainError("SolveNash2x2: game is not 2x2");
  const double a = game(0, 0), b = game(0, 1), c = game(1, 0), d = game(1, 1);
  const double den = a - b - c + d;

  // x0 makes the column player indifferent, y0 makes the row player
  // indifferent.
  std::optional<double> x_ind, y_ind;
  if (den != 0.0) {
    const double x0 = (d - c) / den;
    const double y0 = (d - b) / den;
    if (x0 >= 0.0 && x0 <= 1.0) x_ind = x0;
    if (y0 >= 0.0 && y0 <= 1.0) y_ind = y0;
  }

  auto make = [&](double x0, double y0) {
    const std::vector<double> x = {x0, 1.0 - x0};
    const std::vector<double> y = {y0, 1.0 - y0};
    return std::make_pair(x, y);
  };

  std::vector<std::pair<double, double>> candidates;
  if (x_ind && y_ind && *x_ind > 0.0 && *x_ind < 1.0 && *y_ind > 0.0 &&
      *y_ind < 1.0) {
    candidates.emplace_back(*x_ind, *y_ind);
  }
  // Boundary search: pure profiles plus the pure-vs-mixed indifference lines.
  // A degenerate game (den == 0) leaves a player free; try uniform first.
  std::vector<double> xs, ys;
  if (den == 0.0) {
    xs.push_back(0.5);
    ys.push_back(0.5);
  }
  xs.insert(xs.end(), {1.0, 0.0});
  ys.insert(ys.end(), {1.0, 0.0});
  if (x_ind) xs.push_back(*x_ind);
  if (y_ind) ys.push_back(*y_ind);
  for (double x0 : xs) {
    for (double y0 : ys) candidates.emplace_back(x0, y0);
  }

  for (const auto& [x0, y0] : candidates) {
    auto [x, y] = make(x0, y0);
    if (DualityGap(game, x, y) <= kNashGapTolerance) {
      const bool mixed = x0 > 0.0 && x0 < 1.0 && y0 > 0.0 && y0 < 1.0;
      const double value = x0 * (a * y0 + b * (1.0 - y0)) +
                           (1.0 - x0) * (c * y0 + d * (1.0 - y0));
      return NashPoint2x2{SimplexPoint(x), SimplexPoint(y), 1.0 - x0, y0,
                          mixed, value};
    }
  }
  throw NumericError("SolveNash2x2: no candidate passed the gap check", 0.0);
}

void ValidateEquilibrium(const MatrixGame& game, const SimplexPoint& x,
                         const SimplexPoint& y, double tolerance) {
  const double gap = DualityGap(game, x, y);
  if (gap > tolerance) {
    throw DomainError("ValidateEquilibrium: duality gap " +
                      std::to_string(gap) + " exceeds tolerance");
  }
}

std::string Relabeling::ToString() const {
  std::string out;
  auto add = [&out](const char* s) {
    if (!out.empty()) out += "+";
    out += s;
  };
  if (swap_players) add("swap_players");
  if (swap_rows) add("swap_rows");
  if (swap_cols) add("swap_cols");
  return out.empty() ? "identity" : out;
}

MatrixGame Relabel(const MatrixGame& game, const Relabeling& relabeling) {
  int rows = game.rows(), cols = game.cols();
  std::vector<double> m(game.entries().begin(), game.entries().end());
  EntryRange range = game.declared_range();
  if (relabeling.swap_players) {
    std::vector<double> t(m.size());
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) t[j * rows + i] = -m[i * cols + j];
    }
    m = std::move(t);
    std::swap(rows, cols);
    range = {-range.hi, -range.lo};
  }
  if (relabeling.swap_rows) {
    for (int i = 0; i < rows / 2; ++i) {
      std::swap_ranges(m.begin() + i * cols, m.begin() + (i + 1) * cols,
                       m.begin() + (rows - 1 - i) * cols);
    }
  }
  if (relabeling.swap_cols) {
    for (int i = 0; i < rows; ++i) {
      std::reverse(m.begin() + i * cols, m.begin() + (i + 1) * cols);
    }
  }
  return MatrixGame(rows, cols, std::move(m), range);
}

void RelabelStrategies(const Relabeling& relabeling, std::vector<double>& x,
                       std::vector<double>& y) {
  if (relabeling.swap_players) std::swap(x, y);
  if (relabeling.swap_rows) std::reverse(x.begin(), x.end());
  if (relabeling.swap_cols) std::reverse(y.begin(), y.end());
}

Decomposition2x2 Decompose2x2(const MatrixGame& game) {
  if (!game.IsTwoByTwo()) throw DomainError("Decompose2x2: game is not 2x2");
  if (!SolveNash2x2(game).fully_mixed) {
    throw DomainError("Decompose2x2: game has no fully mixed equilibrium");
  }
  constexpr double kOrder = 1e-12;
  for (int mask = 0; mask < 8; ++mask) {
    const Relabeling r{(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0};
    const MatrixGame g = Relabel(game, r);
    const NashPoint2x2 ne = SolveNash2x2(g);
    if (!ne.fully_mixed) continue;
    const double dx = ne.delta_x, dy = ne.delta_y;
    if (dx > dy + kOrder || dy > 1.0 - dx + kOrder) continue;
    const double b1 = g(1, 0);
    const double b2 = g(1, 1) - g(1, 0);
    if (!(b2 > 0.0)) continue;
    const auto base = ADxDyEntries(dx, dy);
    double err = 0.0;
    for (int k = 0; k < 4; ++k) {
      err = std::max(err, std::abs(b1 + b2 * base[k] - g.entries()[k]));
    }
    if (err <= 1e-10 * std::max(1.0, std::abs(b2))) {
      return Decomposition2x2{b1, b2, dx, dy, r};
    }
  }
  throw DomainError("Decompose2x2: no relabeling yields the canonical form");
}

}  // namespace optdyn
