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

#include "optdyn/hardness.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "optdyn/metrics.h"

namespace optdyn {

double HardnessC1(const Regularizer& reg) {
  return 0.5 - FEta(reg, 1.0, 1.0 / (20.0 * reg.lipschitz_L()));
}

HardnessPrediction PredictBadBlock(const Regularizer& reg, double eta,
                                   double delta, double c3) {
  const double lip = reg.lipschitz_L();
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("PredictBadBlock: delta must lie in (0, 1/2)");
  }
  if (!(eta > 0.0 && eta <= 1.0 / (4.0 * lip))) {
    throw DomainError("PredictBadBlock: eta must lie in (0, 1/(4L)] = (0, " +
                      std::to_string(1.0 / (4.0 * lip)) + "]");
  }
  if (!(c3 > 0.0 && c3 <= 0.5)) {
    throw DomainError("PredictBadBlock: c3 must lie in (0, 1/2]");
  }
  HardnessPrediction p{reg, eta, delta, c3, lip, FDelta(reg, delta),
                       HardnessC1(reg), 0, 0.0, 0.0};
  const double scale = eta * lip * delta;
  p.t_h = static_cast<int64_t>(std::floor(p.c1 / (2.0 * scale)));
  p.t_upper = (8.0 + 2.0 * lip * p.f_r) / (p.c1 * c3 * scale);
  p.block_length = p.c1 * p.c1 / (80.0 * scale);
  return p;
}

BadRunTracker::BadRunTracker(double threshold) : threshold_(threshold) {
  if (!(threshold > 0.0)) {
    throw DomainError("BadRunTracker: threshold must be positive");
  }
}

void BadRunTracker::Observe(int64_t t, double gap) {
  if (gap >= threshold_) {
    if (open_) {
      current_.end = t;
      current_.min_gap = std::min(current_.min_gap, gap);
    } else {
      open_ = true;
      current_ = BadRun{t, t, gap};
    }
  } else if (open_) {
    runs_.push_back(current_);
    open_ = false;
  }
  last_t_ = t;
}

void BadRunTracker::Finish() {
  if (open_) {
    runs_.push_back(current_);
    open_ = false;
  }
}

std::optional<BadRun> BadRunTracker::Longest() const {
  std::optional<BadRun> best;
  for (const BadRun& r : runs_) {
    if (!best || r.length() > best->length()) best = r;
  }
  return best;
}

std::optional<BadRun> LongestBadRun(std::span<const double> gaps,
                                    double threshold) {
  BadRunTracker tracker(threshold);
  for (size_t k = 0; k < gaps.size(); ++k) {
    tracker.Observe(static_cast<int64_t>(k) + 1, gaps[k]);
  }
  tracker.Finish();
  return tracker.Longest();
}

GlobalPhaseDetector::GlobalPhaseDetector(double delta, double gap_threshold)
    : x_level_(1.0 / (1.0 + delta)),
      y_level_(1.0 / (2.0 * (1.0 + delta))),
      runs_(gap_threshold) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("GlobalPhaseDetector: delta must lie in (0, 1/2)");
  }
}

void GlobalPhaseDetector::Observe(int64_t t, std::span<const double> x,
                                  std::span<const double> y, double gap) {
  if (!report_.t1 && x[0] >= x_level_) {
    report_.t1 = t;
  } else if (report_.t1 && !report_.t2 && y[0] >= y_level_) {
    report_.t2 = t;
  }
  runs_.Observe(t, gap);
}

PhaseReport GlobalPhaseDetector::Finish() {
  runs_.Finish();
  report_.bad_runs = runs_.runs();
  return report_;
}

InitialPhaseDetector::InitialPhaseDetector(double delta_x, double delta_y,
                                           double eta, double gap_threshold)
    : delta_x_(delta_x), delta_y_(delta_y), eta_(eta), runs_(gap_threshold) {
  if (!(delta_x > 0.0 && delta_x <= delta_y && delta_y <= 1.0 - delta_x)) {
    throw DomainError(
        "InitialPhaseDetector: need 0 < delta_x <= delta_y <= 1 - delta_x");
  }
}

void InitialPhaseDetector::Observe(int64_t t, std::span<const double> x,
                                   std::span<const double> y, double gap) {
  if (!report_.t1 && x[0] >= 1.0 - delta_x_) report_.t1 = t;
  if (delta_y_ < 0.5) {
    if (!report_.ty && y[0] < delta_y_) {
      report_.ty = t;
      report_.tm = t + static_cast<int64_t>(std::ceil(2.0 / eta_));
    }
    if (!report_.tx && x[0] > 1.0 - delta_x_) report_.tx = t;
  }
  runs_.Observe(t, gap);
}

PhaseReport InitialPhaseDetector::Finish() {
  runs_.Finish();
  report_.bad_runs = runs_.runs();
  return report_;
}

namespace {

void RequireTwoByTwo(const Trajectory& traj, const char* what) {
  if (!traj.game.IsTwoByTwo()) {
    throw DomainError(std::string(what) + ": requires a 2x2 game");
  }
}

}  // namespace

PhaseReport DetectPhasesGlobal(const Trajectory& traj, double delta,
                               double gap_threshold) {
  RequireTwoByTwo(traj, "DetectPhasesGlobal");
  GlobalPhaseDetector det(delta, gap_threshold);
  if (traj.records.empty()) return det.Finish();
  ForEachFullResolution(traj, traj.config.horizon, [&](const IterateView& v) {
    det.Observe(v.t, v.x, v.y, v.gap);
  });
  return det.Finish();
}

PhaseReport DetectPhasesInitial(const Trajectory& traj, double delta_x,
                                double delta_y, double gap_threshold) {
  RequireTwoByTwo(traj, "DetectPhasesInitial");
  InitialPhaseDetector det(delta_x, delta_y, traj.config.eta, gap_threshold);
  if (traj.records.empty()) return det.Finish();
  ForEachFullResolution(traj, traj.config.horizon, [&](const IterateView& v) {
    det.Observe(v.t, v.x, v.y, v.gap);
  });
  return det.Finish();
}

}  // namespace optdyn
