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

#ifndef OPTDYN_HARDNESS_H_
#define OPTDYN_HARDNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optdyn/dynamics.h"
#include "optdyn/regularizers.h"

namespace optdyn {

// Empirical thresholds. The theory only asserts that such constants exist;
// these defaults are not derived from it.
inline constexpr double kDefaultC2 = 0.05;
inline constexpr double kDefaultC3 = 0.5;

struct HardnessPrediction {
  Regularizer regularizer;
  double eta;
  double delta;
  double c3;
  double lipschitz_L;
  double f_r;
  double c1;            // 1/2 - F_{1,R}(1/(20L))
  int64_t t_h;          // floor(c1 / (2 eta L delta))
  double t_upper;       // (8 + 2 L f_R(delta)) / (c1 c3 eta L delta)
  double block_length;  // c1^2 / (80 eta L delta)
};

double HardnessC1(const Regularizer& reg);

// Requires 0 < delta < 1/2, 0 < eta <= 1/(4L), 0 < c3 <= 1/2.
HardnessPrediction PredictBadBlock(const Regularizer& reg, double eta,
                                   double delta, double c3 = kDefaultC3);

// Maximal run of consecutive iterations with gap >= threshold, 1-based.
struct BadRun {
  int64_t start;
  int64_t end;
  double min_gap;

  int64_t length() const { return end - start + 1; }
};

// Earliest longest run; absent when no entry reaches the threshold.
std::optional<BadRun> LongestBadRun(std::span<const double> gaps,
                                    double threshold);

// Streaming version of the bad-run scan.
class BadRunTracker {
 public:
  explicit BadRunTracker(double threshold);

  void Observe(int64_t t, double gap);
  // Closes an open run. Call once after the last observation.
  void Finish();

  const std::vector<BadRun>& runs() const { return runs_; }
  std::optional<BadRun> Longest() const;

 private:
  double threshold_;
  bool open_ = false;
  BadRun current_{0, 0, 0.0};
  int64_t last_t_ = 0;
  std::vector<BadRun> runs_;
};

// First-crossing landmarks. "First" means the condition holds at t and at
// no earlier iteration.
struct PhaseReport {
  std::optional<int64_t> t1;
  std::optional<int64_t> t2;
  std::optional<int64_t> ty;
  std::optional<int64_t> tm;
  std::optional<int64_t> tx;
  std::vector<BadRun> bad_runs;
};

// Streaming detector for the A_delta landmarks: T1 = first t with
// x[0] >= 1/(1+delta), T2 = first t > T1 with y[0] >= 1/(2(1+delta)).
class GlobalPhaseDetector {
 public:
  GlobalPhaseDetector(double delta, double gap_threshold);

  void Observe(int64_t t, std::span<const double> x,
               std::span<const double> y, double gap);
  PhaseReport Finish();
  // Landmarks seen so far; bad runs are filled in by Finish().
  const PhaseReport& report() const { return report_; }

 private:
  double x_level_;
  double y_level_;
  PhaseReport report_;
  BadRunTracker runs_;
};

// Streaming detector for A_{dx,dy}: Ty = first t with y[0] < dy,
// Tm = Ty + ceil(2/eta), Tx = first t with x[0] > 1 - dx (reported when
// dy < 1/2), T1 = first t with x[0] >= 1 - dx.
class InitialPhaseDetector {
 public:
  InitialPhaseDetector(double delta_x, double delta_y, double eta,
                       double gap_threshold);

  void Observe(int64_t t, std::span<const double> x,
               std::span<const double> y, double gap);
  PhaseReport Finish();
  const PhaseReport& report() const { return report_; }

 private:
  double delta_x_;
  double delta_y_;
  double eta_;
  PhaseReport report_;
  BadRunTracker runs_;
};

// Both replay the trajectory at stride 1 when the records are subsampled.
PhaseReport DetectPhasesGlobal(const Trajectory& traj, double delta,
                               double gap_threshold = 0.1);
PhaseReport DetectPhasesInitial(const Trajectory& traj, double delta_x,
                                double delta_y, double gap_threshold = 0.1);

}  // namespace optdyn

#endif  // OPTDYN_HARDNESS_H_
