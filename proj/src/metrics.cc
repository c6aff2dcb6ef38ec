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

#include "optdyn/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "optdyn/regularizers.h"

namespace optdyn {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double MinOf(std::span<const double> v) {
  return *std::min_element(v.begin(), v.end());
}

double MaxOf(std::span<const double> v) {
  return *std::max_element(v.begin(), v.end());
}

void CheckRange(const Trajectory& traj, int64_t start, int64_t end,
                const char* what) {
  if (start < 1 || start > end || end > traj.config.horizon) {
    throw DomainError(std::string(what) + ": interval [" +
                      std::to_string(start) + "," + std::to_string(end) +
                      "] outside [1," + std::to_string(traj.config.horizon) +
                      "]");
  }
}

std::vector<double> Logs(std::span<const double> p) {
  std::vector<double> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = std::log(p[i]);
  return out;
}

}  // namespace

ConvergenceReport MakeConvergenceReport(const Trajectory& traj) {
  ConvergenceReport r;
  for (const IterateRecord& rec : traj.records) {
    r.last_gap.push_back({rec.t, rec.gap});
    r.random_avg.push_back({rec.t, rec.gap_sum / static_cast<double>(rec.t)});
    r.best.push_back({rec.t, rec.best_gap});
  }
  return r;
}

ConvergenceReport MakeConvergenceReport(std::span<const double> gaps) {
  ConvergenceReport r;
  double sum = 0.0, best = INFINITY;
  for (size_t k = 0; k < gaps.size(); ++k) {
    const int64_t t = static_cast<int64_t>(k) + 1;
    sum += gaps[k];
    best = std::min(best, gaps[k]);
    r.last_gap.push_back({t, gaps[k]});
    r.random_avg.push_back({t, sum / static_cast<double>(t)});
    r.best.push_back({t, best});
  }
  return r;
}

void ForEachFullResolution(const Trajectory& traj, int64_t upto,
                           const std::function<void(const IterateView&)>& fn) {
  const bool full = traj.config.EffectiveStride() == 1 &&
                    static_cast<int64_t>(traj.records.size()) ==
                        traj.config.horizon;
  if (full) {
    for (const IterateRecord& r : traj.records) {
      if (r.t > upto) break;
      fn(IterateView{r.t, r.x, r.y, r.loss_x, r.loss_y, r.gap});
    }
    return;
  }
  ForEachIterate(traj.game, traj.config,
                 [&](const JointIterate& s, double gap) {
                   fn(IterateView{s.t, s.x, s.y, s.prev_loss_x,
                                  s.prev_loss_y, gap});
                   return s.t < upto;
                 });
}

double SocialRegretTerm(std::span<const double> x, std::span<const double> y,
                        std::span<const double> loss_x,
                        std::span<const double> loss_y) {
  return Dot(loss_x, x) - MinOf(loss_x) + Dot(loss_y, y) - MinOf(loss_y);
}

double SocialDynamicRegret(const Trajectory& traj, int64_t horizon) {
  CheckRange(traj, 1, horizon, "SocialDynamicRegret");
  double total = 0.0;
  ForEachFullResolution(traj, horizon, [&](const IterateView& v) {
    total += SocialRegretTerm(v.x, v.y, v.loss_x, v.loss_y);
  });
  return total;
}

double IntervalRegret(const Trajectory& traj, int64_t start, int64_t end,
                      Player player) {
  CheckRange(traj, start, end, "IntervalRegret");
  const size_t d = player == Player::kX ? traj.game.rows() : traj.game.cols();
  std::vector<double> summed(d, 0.0);
  double incurred = 0.0;
  ForEachFullResolution(traj, end, [&](const IterateView& v) {
    if (v.t < start) return;
    const auto loss = player == Player::kX ? v.loss_x : v.loss_y;
    const auto p = player == Player::kX ? v.x : v.y;
    incurred += Dot(loss, p);
    for (size_t i = 0; i < d; ++i) summed[i] += loss[i];
  });
  return incurred - MinOf(summed);
}

double VariationTerm(std::span<const double> dloss_x,
                     std::span<const double> dloss_y) {
  return std::max(std::abs(MaxOf(dloss_x) + MaxOf(dloss_y)),
                  std::abs(MinOf(dloss_x) + MinOf(dloss_y)));
}

double Variation(const Trajectory& traj, int64_t start, int64_t end) {
  CheckRange(traj, start, end, "Variation");
  std::vector<double> prev_x, prev_y, dx, dy;
  double total = 0.0;
  ForEachFullResolution(traj, end, [&](const IterateView& v) {
    if (v.t < start) return;
    if (v.t > start) {
      dx.resize(v.loss_x.size());
      dy.resize(v.loss_y.size());
      for (size_t i = 0; i < dx.size(); ++i) dx[i] = v.loss_x[i] - prev_x[i];
      for (size_t j = 0; j < dy.size(); ++j) dy[j] = v.loss_y[j] - prev_y[j];
      total += VariationTerm(dx, dy);
    }
    prev_x.assign(v.loss_x.begin(), v.loss_x.end());
    prev_y.assign(v.loss_y.begin(), v.loss_y.end());
  });
  return total;
}

double KlFromLogs(std::span<const double> p, std::span<const double> log_p,
                  std::span<const double> log_q) {
  double s = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) s += p[i] * (log_p[i] - log_q[i]);
  }
  return s;
}

LyapunovSeries ComputeLyapunov(const Trajectory& traj,
                               const SimplexPoint& x_star,
                               const SimplexPoint& y_star) {
  const DynamicsConfig& cfg = traj.config;
  if (cfg.algorithm == Algorithm::kOgda ||
      cfg.regularizer.kind() != RegKind::kEntropy) {
    throw DomainError("ComputeLyapunov: requires an entropy-regularized run");
  }
  if (x_star.size() != traj.game.rows() || y_star.size() != traj.game.cols()) {
    throw DomainError("ComputeLyapunov: equilibrium has the wrong dimension");
  }
  ValidateEquilibrium(traj.game, x_star, y_star);
  const std::vector<double> log_xs = Logs(x_star.probs());
  const std::vector<double> log_ys = Logs(y_star.probs());
  const double eta = cfg.eta;

  LyapunovSeries out{{}, {}, x_star, y_star};
  // Values carried from iteration t-1.
  JointIterate prev;
  double prev_theta = 0.0, prev_inner = 0.0;
  bool have_theta = false;

  ForEachIterate(traj.game, cfg, [&](const JointIterate& s, double) {
    if (s.log_x_hat.empty()) {
      throw DomainError("ComputeLyapunov: auxiliary points not tracked");
    }
    if (s.t >= 2) {
      const double theta =
          KlFromLogs(x_star.probs(), log_xs, s.log_x_hat) +
          KlFromLogs(y_star.probs(), log_ys, s.log_y_hat) +
          (KlFromLogs(s.x_hat, s.log_x_hat, prev.log_x) +
           KlFromLogs(s.y_hat, s.log_y_hat, prev.log_y)) /
              16.0;
      out.theta.push_back({s.t, theta});
      double step = 0.0;
      for (size_t i = 0; i < s.x.size(); ++i) step += std::abs(s.x[i] - prev.x[i]);
      for (size_t j = 0; j < s.y.size(); ++j) step += std::abs(s.y[j] - prev.y[j]);
      if (prev.t >= 2) out.path_sq_sum += step * step;
      if (have_theta) {
        // zeta^{t-1} = KL(zhat^t, z^{t-1}) + KL(z^{t-1}, zhat^{t-1}).
        const double zeta =
            KlFromLogs(s.x_hat, s.log_x_hat, prev.log_x) +
            KlFromLogs(s.y_hat, s.log_y_hat, prev.log_y) +
            KlFromLogs(prev.x, prev.log_x, prev.log_x_hat) +
            KlFromLogs(prev.y, prev.log_y, prev.log_y_hat);
        out.zeta.push_back({prev.t, zeta});
        const double descent = theta - prev_theta + 15.0 / 16.0 * zeta;
        if (descent > out.max_descent_violation) {
          out.max_descent_violation = descent;
          out.worst_descent_t = prev.t;
        }
        out.max_one_sided_violation =
            std::max(out.max_one_sided_violation, prev_inner - (-descent));
      }
      prev_theta = theta;
      have_theta = true;
    }
    // eta <F(z^t), z^t - z*>.
    prev_inner = eta * (Dot(s.prev_loss_x, s.x) - Dot(s.prev_loss_x, x_star.probs()) +
                        Dot(s.prev_loss_y, s.y) - Dot(s.prev_loss_y, y_star.probs()));
    prev = s;
    return true;
  });
  return out;
}

double LogMinProbability(const Trajectory& traj) {
  return traj.summary.min_log_prob;
}

}  // namespace optdyn
