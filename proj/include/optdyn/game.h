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

#ifndef OPTDYN_GAME_H_
#define OPTDYN_GAME_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace optdyn {

// Invalid argument or violated precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative solver failed to reach its tolerance. `iteration` is the
// dynamics step at which the failure happened, or -1 outside a run.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual,
               int64_t iteration = -1)
      : std::runtime_error(what), residual_(residual), iteration_(iteration) {}

  double residual() const { return residual_; }
  int64_t iteration() const { return iteration_; }

 private:
  double residual_;
  int64_t iteration_;
};

struct EntryRange {
  double lo = 0.0;
  double hi = 1.0;
};

// Loss matrix of a two-player zero-sum game. The row player (x) pays
// x^T A y; the column player (y) receives it. Immutable once built.
class MatrixGame {
 public:
  // `entries` is row-major with rows * cols values, each inside `range`.
  MatrixGame(int rows, int cols, std::vector<double> entries,
             EntryRange range = {});

  static MatrixGame FromRows(const std::vector<std::vector<double>>& rows,
                             EntryRange range = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const EntryRange& declared_range() const { return range_; }
  std::span<const double> entries() const { return entries_; }

  double operator()(int i, int j) const { return entries_[i * cols_ + j]; }

  // out = A y  (loss vector of the x-player).
  void LossX(std::span<const double> y, std::span<double> out) const;
  // out = -A^T x  (loss vector of the y-player).
  void LossY(std::span<const double> x, std::span<double> out) const;

  std::vector<double> LossX(std::span<const double> y) const;
  std::vector<double> LossY(std::span<const double> x) const;

  bool IsTwoByTwo() const { return rows_ == 2 && cols_ == 2; }

 private:
  int rows_;
  int cols_;
  std::vector<double> entries_;
  EntryRange range_;
};

// Probability vector. Construction validates nonnegativity and that the
// entries sum to one within 1e-12.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> probs);
  static SimplexPoint Uniform(int dim);

  std::span<const double> probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

inline constexpr double kSimplexTolerance = 1e-12;

// Throws DomainError when `p` is not a probability vector.
void CheckSimplex(std::span<const double> p, const char* what);

// Equilibrium of a 2x2 game. For fully mixed equilibria the coordinates
// follow x* = (1 - delta_x, delta_x) and y* = (delta_y, 1 - delta_y); for
// boundary equilibria delta_x = x*[1] and delta_y = y*[0] as well.
struct NashPoint2x2 {
  SimplexPoint x_star;
  SimplexPoint y_star;
  double delta_x;
  double delta_y;
  bool fully_mixed;
  double game_value;
};

// A_delta = [[1/2 + delta, 1/2], [0, 1]] for delta in (0, 1/2).
MatrixGame MakeADelta(double delta);

// A_{dx,dy} = [[(1-dy)/(1-dx), (1-dx-dy)/(1-dx)], [0, 1]] for
// 0 < dx <= dy <= 1 - dx.
MatrixGame MakeADxDy(double delta_x, double delta_y);

// max_j (A^T x)[j] - min_i (A y)[i].
double DualityGap(const MatrixGame& game, std::span<const double> x,
                  std::span<const double> y);
double DualityGap(const MatrixGame& game, const SimplexPoint& x,
                  const SimplexPoint& y);

NashPoint2x2 SolveNash2x2(const MatrixGame& game);

// Accepts a user-supplied equilibrium for games where no solver exists.
// Throws DomainError if its duality gap exceeds `tolerance`.
void ValidateEquilibrium(const MatrixGame& game, const SimplexPoint& x,
                         const SimplexPoint& y, double tolerance = 1e-8);

// Relabelings that bring a 2x2 game into the canonical orientation.
// Applied in order: exchange players (A -> -A^T), reverse the x-player's
// actions (rows), reverse the y-player's actions (columns).
struct Relabeling {
  bool swap_players = false;
  bool swap_rows = false;
  bool swap_cols = false;

  bool IsIdentity() const { return !swap_players && !swap_rows && !swap_cols; }
  std::string ToString() const;
};

MatrixGame Relabel(const MatrixGame& game, const Relabeling& relabeling);

// Maps a strategy pair of the original game to the relabeled game.
void RelabelStrategies(const Relabeling& relabeling, std::vector<double>& x,
                       std::vector<double>& y);

// game == b1 * ones + b2 * MakeADxDy(delta_x, delta_y) after `relabeling`.
struct Decomposition2x2 {
  double b1;
  double b2;
  double delta_x;
  double delta_y;
  Relabeling relabeling;
};

// Requires a fully mixed equilibrium; throws DomainError otherwise.
Decomposition2x2 Decompose2x2(const MatrixGame& game);

}  // namespace optdyn

#endif  // OPTDYN_GAME_H_
