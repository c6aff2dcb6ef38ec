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

#include "optdyn/dynamics.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace optdyn {
namespace {

constexpr int kMultiplierMaxIter = 200;
constexpr double kMultiplierResidual = 1e-13;
constexpr double kMultiplierFailure = 1e-9;

bool IsEntropy(const Regularizer& reg) {
  return reg.kind() == RegKind::kEntropy;
}

// Shifts v so that logsumexp(v) = 0 and writes exp(v) to p.
void LogNormalize(std::vector<double>& v, std::vector<double>& p) {
  const double m = *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double a : v) s += std::exp(a - m);
  const double shift = m + std::log(s);
  p.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] -= shift;
    p[i] = std::exp(v[i]);
  }
}

double Softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

// Records the losses of the current (x, y) as iteration t + 1.
void Advance(const MatrixGame& game, JointIterate& s) {
  ++s.t;
  game.LossX(s.y, s.prev_loss_x);
  game.LossY(s.x, s.prev_loss_y);
  for (size_t i = 0; i < s.cum_loss_x.size(); ++i) {
    s.cum_loss_x[i] += s.prev_loss_x[i];
  }
  for (size_t j = 0; j < s.cum_loss_y.size(); ++j) {
    s.cum_loss_y[j] += s.prev_loss_y[j];
  }
}

void ProjectInto(std::span<const double> v, std::vector<double>& out) {
  const size_t n = v.size();
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, tau = 0.0;
  for (size_t k = 0; k < n; ++k) {
    cum += u[k];
    const double t = (cum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) tau = t;
  }
  out.resize(n);
  for (size_t i = 0; i < n; ++i) out[i] = std::max(v[i] - tau, 0.0);
}

// One OOMD proximal step from `center` with loss `loss`.
void Prox(const Regularizer& reg, double eta, std::span<const double> loss,
          const std::vector<double>& center, std::vector<double>& out) {
  std::vector<double> theta(center.size());
  for (size_t i = 0; i < center.size(); ++i) {
    theta[i] = reg.DPhi(center[i]) - eta * loss[i];
  }
  MirrorArgmin(reg, theta, out);
}

void EntropyProx(double eta, std::span<const double> loss,
                 const std::vector<double>& log_center,
                 std::vector<double>& log_out, std::vector<double>& out) {
  log_out.resize(log_center.size());
  for (size_t i = 0; i < log_center.size(); ++i) {
    log_out[i] = log_center[i] - eta * loss[i];
  }
  LogNormalize(log_out, out);
}

bool TracksHat(const DynamicsConfig& config) {
  return config.algorithm != Algorithm::kOftrl ||
         IsEntropy(config.regularizer);
}

}  // namespace

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kOftrl:
      return "oftrl";
    case Algorithm::kOomd:
      return "oomd";
    case Algorithm::kOgda:
      return "ogda";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (n == "oftrl" || n == "omwu") return Algorithm::kOftrl;
  if (n == "oomd") return Algorithm::kOomd;
  if (n == "ogda") return Algorithm::kOgda;
  throw DomainError("unknown algorithm '" + name +
                    "' (expected oftrl, omwu, oomd, ogda)");
}

void DynamicsConfig::Validate() const {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("eta must be positive and finite");
  }
  if (horizon < 1) throw DomainError("horizon must be at least 1");
  if (record_stride < 0) throw DomainError("record_stride must be >= 1");
  if (use_scalar_2x2 && algorithm != Algorithm::kOftrl) {
    throw DomainError("use_scalar_2x2 applies to OFTRL only");
  }
}

int64_t DynamicsConfig::EffectiveStride() const {
  if (record_stride > 0) return record_stride;
  constexpr int64_t kAutoRecords = 100000;
  return horizon < kAutoRecords ? 1 : horizon / kAutoRecords;
}

std::vector<std::string> StepSizeWarnings(const DynamicsConfig& config) {
  std::vector<std::string> out;
  const Regularizer reg = config.algorithm == Algorithm::kOgda
                              ? Regularizer::SqEuclid()
                              : config.regularizer;
  if (IsEntropy(reg) && config.eta > 0.1) {
    out.push_back("eta = " + std::to_string(config.eta) +
                  " exceeds 1/10, the step size the OMWU best-iterate rate "
                  "assumes");
  }
  const double limit = 1.0 / (4.0 * reg.lipschitz_L());
  if (config.eta > limit) {
    out.push_back("eta = " + std::to_string(config.eta) + " exceeds 1/(4L) = " +
                  std::to_string(limit) +
                  ", the step size the bad-block lower bound assumes");
  }
  return out;
}

SimplexPoint ProjectSimplex(std::span<const double> v) {
  for (double a : v) {
    if (!std::isfinite(a)) throw DomainError("ProjectSimplex: non-finite");
  }
  std::vector<double> out;
  ProjectInto(v, out);
  return SimplexPoint(std::move(out));
}

void MirrorArgmin(const Regularizer& reg, std::span<const double> theta,
                  std::vector<double>& out, std::vector<double>* log_out) {
  const size_t n = theta.size();
  switch (reg.kind()) {
    case RegKind::kEntropy: {
      std::vector<double> lg(theta.begin(), theta.end());
      LogNormalize(lg, out);
      if (log_out != nullptr) *log_out = std::move(lg);
      return;
    }
    case RegKind::kSqEuclid:
      ProjectInto(theta, out);
      return;
    case RegKind::kLogBarrier:
    case RegKind::kTsallis:
      break;
  }
  // Coordinates p_i = DPhiInverse(u_i + nu) with u = theta - max(theta), so
  // the largest coordinate is DPhiInverse(nu). The bracket puts it at 1
  // (sum >= 1) and at most 1/n for every coordinate (sum <= 1).
  const double m = *std::max_element(theta.begin(), theta.end());
  const double dn = static_cast<double>(n);
  double lo, hi;
  if (reg.kind() == RegKind::kLogBarrier) {
    lo = -dn;
    hi = -1.0;
  } else {
    const double k = reg.beta() / (1.0 - reg.beta());
    lo = -k * std::pow(dn, 1.0 - reg.beta());
    hi = -k;
  }
  out.resize(n);
  auto fill = [&](double nu) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
      out[i] = reg.DPhiInverse(theta[i] - m + nu);
      s += out[i];
    }
    return s;
  };
  double sum = fill(hi);
  for (int it = 0; it < kMultiplierMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    sum = fill(mid);
    if (std::abs(sum - 1.0) <= kMultiplierResidual) break;
    if (sum > 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (!(std::abs(sum - 1.0) <= kMultiplierFailure)) {
    throw NumericError("MirrorArgmin: multiplier bisection did not converge",
                       sum - 1.0);
  }
  for (double& p : out) p /= sum;
}

double GapFromLosses(const JointIterate& s) {
  double best_col = -INFINITY;
  for (double v : s.prev_loss_y) best_col = std::max(best_col, -v);
  double best_row = INFINITY;
  for (double v : s.prev_loss_x) best_row = std::min(best_row, v);
  return best_col - best_row;
}

double MinLogProbability(const JointIterate& s) {
  double out = INFINITY;
  auto scan = [&out](const std::vector<double>& p,
                     const std::vector<double>& lg) {
    if (!lg.empty()) {
      for (double v : lg) out = std::min(out, v);
    } else {
      for (double v : p) out = std::min(out, std::log(v));
    }
  };
  scan(s.x, s.log_x);
  scan(s.y, s.log_y);
  if (!s.x_hat.empty()) scan(s.x_hat, s.log_x_hat);
  if (!s.y_hat.empty()) scan(s.y_hat, s.log_y_hat);
  return out;
}

JointIterate InitialIterate(const MatrixGame& game,
                            const DynamicsConfig& config) {
  const int d1 = game.rows(), d2 = game.cols();
  JointIterate s;
  s.x.assign(d1, 1.0 / d1);
  s.y.assign(d2, 1.0 / d2);
  const bool entropy = config.algorithm != Algorithm::kOgda &&
                       IsEntropy(config.regularizer);
  if (entropy) {
    s.log_x.assign(d1, -std::log(static_cast<double>(d1)));
    s.log_y.assign(d2, -std::log(static_cast<double>(d2)));
  }
  if (TracksHat(config)) {
    s.x_hat = s.x;
    s.y_hat = s.y;
    s.log_x_hat = s.log_x;
    s.log_y_hat = s.log_y;
  }
  s.cum_loss_x.assign(d1, 0.0);
  s.cum_loss_y.assign(d2, 0.0);
  s.prev_loss_x.assign(d1, 0.0);
  s.prev_loss_y.assign(d2, 0.0);
  Advance(game, s);
  return s;
}

JointIterate StepOftrl(const MatrixGame& game, JointIterate s,
                       const Regularizer& reg, double eta) {
  const size_t d1 = s.x.size(), d2 = s.y.size();
  std::vector<double> theta_x(d1), theta_y(d2);
  for (size_t i = 0; i < d1; ++i) {
    theta_x[i] = -eta * (s.cum_loss_x[i] + s.prev_loss_x[i]);
  }
  for (size_t j = 0; j < d2; ++j) {
    theta_y[j] = -eta * (s.cum_loss_y[j] + s.prev_loss_y[j]);
  }
  if (IsEntropy(reg)) {
    MirrorArgmin(reg, theta_x, s.x, &s.log_x);
    MirrorArgmin(reg, theta_y, s.y, &s.log_y);
    for (size_t i = 0; i < d1; ++i) theta_x[i] = -eta * s.cum_loss_x[i];
    for (size_t j = 0; j < d2; ++j) theta_y[j] = -eta * s.cum_loss_y[j];
    MirrorArgmin(reg, theta_x, s.x_hat, &s.log_x_hat);
    MirrorArgmin(reg, theta_y, s.y_hat, &s.log_y_hat);
  } else {
    MirrorArgmin(reg, theta_x, s.x);
    MirrorArgmin(reg, theta_y, s.y);
  }
  Advance(game, s);
  return s;
}

JointIterate StepOftrlScalar2x2(const MatrixGame& game, JointIterate s,
                                const Regularizer& reg, double eta) {
  if (!game.IsTwoByTwo() || s.x.size() != 2 || s.y.size() != 2) {
    throw DomainError("StepOftrlScalar2x2: game is not 2x2");
  }
  const double big_ex = s.cum_loss_x[0] - s.cum_loss_x[1];
  const double big_ey = s.cum_loss_y[0] - s.cum_loss_y[1];
  const double ex = big_ex + s.prev_loss_x[0] - s.prev_loss_x[1];
  const double ey = big_ey + s.prev_loss_y[0] - s.prev_loss_y[1];
  if (IsEntropy(reg)) {
    auto set = [eta](double e, std::vector<double>& p,
                     std::vector<double>& lg) {
      p = {FEta(Regularizer::Entropy(), eta, e),
           FEta(Regularizer::Entropy(), eta, -e)};
      lg = {-Softplus(eta * e), -Softplus(-eta * e)};
    };
    set(ex, s.x, s.log_x);
    set(ey, s.y, s.log_y);
    set(big_ex, s.x_hat, s.log_x_hat);
    set(big_ey, s.y_hat, s.log_y_hat);
  } else {
    const double x0 = FEta(reg, eta, ex);
    const double y0 = FEta(reg, eta, ey);
    s.x = {x0, 1.0 - x0};
    s.y = {y0, 1.0 - y0};
  }
  Advance(game, s);
  return s;
}

JointIterate StepOomd(const MatrixGame& game, JointIterate s,
                      const Regularizer& reg, double eta) {
  if (s.x_hat.size() != s.x.size() || s.y_hat.size() != s.y.size()) {
    throw DomainError("StepOomd: auxiliary point missing");
  }
  if (IsEntropy(reg)) {
    EntropyProx(eta, s.prev_loss_x, s.log_x_hat, s.log_x_hat, s.x_hat);
    EntropyProx(eta, s.prev_loss_y, s.log_y_hat, s.log_y_hat, s.y_hat);
    EntropyProx(eta, s.prev_loss_x, s.log_x_hat, s.log_x, s.x);
    EntropyProx(eta, s.prev_loss_y, s.log_y_hat, s.log_y, s.y);
  } else {
    std::vector<double> hx, hy;
    Prox(reg, eta, s.prev_loss_x, s.x_hat, hx);
    Prox(reg, eta, s.prev_loss_y, s.y_hat, hy);
    s.x_hat = std::move(hx);
    s.y_hat = std::move(hy);
    Prox(reg, eta, s.prev_loss_x, s.x_hat, s.x);
    Prox(reg, eta, s.prev_loss_y, s.y_hat, s.y);
  }
  Advance(game, s);
  return s;
}

JointIterate StepOgda(const MatrixGame& game, JointIterate s, double eta) {
  return StepOomd(game, std::move(s), Regularizer::SqEuclid(), eta);
}

JointIterate Step(const MatrixGame& game, JointIterate s,
                  const DynamicsConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kOftrl:
      return config.use_scalar_2x2
                 ? StepOftrlScalar2x2(game, std::move(s), config.regularizer,
                                      config.eta)
                 : StepOftrl(game, std::move(s), config.regularizer,
                             config.eta);
    case Algorithm::kOomd:
      return StepOomd(game, std::move(s), config.regularizer, config.eta);
    case Algorithm::kOgda:
      return StepOgda(game, std::move(s), config.eta);
  }
  return s;
}

void ForEachIterate(const MatrixGame& game, const DynamicsConfig& config,
                    const IterateCallback& callback) {
  config.Validate();
  if (config.use_scalar_2x2 && !game.IsTwoByTwo()) {
    throw DomainError("use_scalar_2x2 requires a 2x2 game");
  }
  JointIterate s = InitialIterate(game, config);
  if (!callback(s, GapFromLosses(s))) return;
  for (int64_t t = 2; t <= config.horizon; ++t) {
    try {
      s = Step(game, std::move(s), config);
    } catch (const NumericError& e) {
      throw NumericError(std::string(e.what()) + " at iteration " +
                             std::to_string(t),
                         e.residual(), t);
    }
    if (!callback(s, GapFromLosses(s))) return;
  }
}

Trajectory RunDynamics(const MatrixGame& game, const DynamicsConfig& config) {
  Trajectory traj{game, config, {}, {}};
  const int64_t stride = config.EffectiveStride();
  traj.records.reserve(static_cast<size_t>(config.horizon / stride + 2));
  TrajectorySummary& sum = traj.summary;
  sum.best_gap = INFINITY;
  sum.min_log_prob = INFINITY;
  JointIterate last;
  ForEachIterate(game, config, [&](const JointIterate& s, double gap) {
    sum.gap_sum += gap;
    if (gap < sum.best_gap) {
      sum.best_gap = gap;
      sum.best_t = s.t;
    }
    const double min_log = MinLogProbability(s);
    sum.min_log_prob = std::min(sum.min_log_prob, min_log);
    sum.last_gap = gap;
    const bool is_last = s.t == config.horizon;
    if ((s.t - 1) % stride == 0 || is_last) {
      traj.records.push_back(IterateRecord{s.t, s.x, s.y, s.prev_loss_x,
                                           s.prev_loss_y, gap, sum.best_gap,
                                           sum.best_t, sum.gap_sum, min_log});
    }
    if (is_last) last = s;
    return true;
  });
  sum.final_iterate = std::move(last);
  return traj;
}

}  // namespace optdyn
