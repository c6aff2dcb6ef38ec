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

#ifndef OPTDYN_METRICS_H_
#define OPTDYN_METRICS_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "optdyn/dynamics.h"
#include "optdyn/game.h"

namespace optdyn {

struct SeriesPoint {
  int64_t t;
  double value;
};

// Last-iterate gap, running mean and running min, at the recorded t.
struct ConvergenceReport {
  std::vector<SeriesPoint> last_gap;
  std::vector<SeriesPoint> random_avg;
  std::vector<SeriesPoint> best;
};

ConvergenceReport MakeConvergenceReport(const Trajectory& traj);
// Same series for a plain gap sequence indexed from t = 1.
ConvergenceReport MakeConvergenceReport(std::span<const double> gaps);

enum class Player { kX, kY };

// Per-iteration view used by the full-resolution metrics.
struct IterateView {
  int64_t t;
  std::span<const double> x, y;
  std::span<const double> loss_x, loss_y;
  double gap;
};

// Visits iterates 1..upto at stride 1, from the records when they are at
// full resolution and by deterministic replay otherwise.
void ForEachFullResolution(const Trajectory& traj, int64_t upto,
                           const std::function<void(const IterateView&)>& fn);

// One summand of the social dynamic regret: both players' regret against
// their pure best responses at a single iteration.
double SocialRegretTerm(std::span<const double> x, std::span<const double> y,
                        std::span<const double> loss_x,
                        std::span<const double> loss_y);

// sum_{t<=T} <l_x, x - br_x> + <l_y, y - br_y> with pure best responses.
double SocialDynamicRegret(const Trajectory& traj, int64_t horizon);

// Static regret on [start, end] (1-based, inclusive) against the best pure
// action for the interval's summed loss.
double IntervalRegret(const Trajectory& traj, int64_t start, int64_t end,
                      Player player);

// sum_{t=start+1}^{end} max over the strategy product of
// |<F(z^t) - F(z^{t-1}), z>|.
double Variation(const Trajectory& traj, int64_t start, int64_t end);

// The loss-difference maximum used by Variation for one step.
double VariationTerm(std::span<const double> dloss_x,
                     std::span<const double> dloss_y);

struct LyapunovSeries {
  std::vector<SeriesPoint> theta;  // t = 2..T
  std::vector<SeriesPoint> zeta;   // t = 2..T-1
  SimplexPoint x_star;
  SimplexPoint y_star;
  // max over t of Theta^{t+1} - Theta^t + (15/16) zeta^t (<= 0 when the
  // descent inequality holds).
  double max_descent_violation = -std::numeric_limits<double>::infinity();
  int64_t worst_descent_t = 0;
  // max over t of eta <F(z^t), z^t - z*> - (Theta^t - Theta^{t+1} -
  // (15/16) zeta^t).
  double max_one_sided_violation = -std::numeric_limits<double>::infinity();
  // sum_{t>=2} ||z^{t+1} - z^t||_1^2.
  double path_sq_sum = 0.0;
};

// KL divergence from log-probabilities; 0 log 0 = 0.
double KlFromLogs(std::span<const double> p, std::span<const double> log_p,
                  std::span<const double> log_q);

// Requires an entropy run (OFTRL or OOMD). z* is validated with gap <= 1e-8.
LyapunovSeries ComputeLyapunov(const Trajectory& traj,
                               const SimplexPoint& x_star,
                               const SimplexPoint& y_star);

// log of the smallest coordinate of z^t and the auxiliary point over all t.
double LogMinProbability(const Trajectory& traj);

}  // namespace optdyn

#endif  // OPTDYN_METRICS_H_
