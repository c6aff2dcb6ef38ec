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

#ifndef OPTDYN_DYNAMICS_H_
#define OPTDYN_DYNAMICS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "optdyn/game.h"
#include "optdyn/regularizers.h"

namespace optdyn {

enum class Algorithm { kOftrl, kOomd, kOgda };

std::string AlgorithmName(Algorithm algorithm);
// Accepts "oftrl", "oomd", "ogda" and "omwu" (OFTRL with the entropy; the
// caller is responsible for pairing it with Regularizer::Entropy()).
Algorithm ParseAlgorithm(const std::string& name);

struct DynamicsConfig {
  Algorithm algorithm = Algorithm::kOftrl;
  // Ignored by OGDA, which always uses SqEuclid.
  Regularizer regularizer = Regularizer::Entropy();
  double eta = 0.1;
  int64_t horizon = 1000;
  // 0 selects the default: 1 below 1e5 steps, horizon / 1e5 above.
  int64_t record_stride = 0;
  // OFTRL on 2x2 games only: run the scalar F_eta recursion instead of the
  // simplex argmin.
  bool use_scalar_2x2 = false;

  // Throws DomainError on invalid values.
  void Validate() const;
  int64_t EffectiveStride() const;
};

// Human-readable notes when eta exceeds a threshold some guarantee needs.
std::vector<std::string> StepSizeWarnings(const DynamicsConfig& config);

// State after iteration t. x, y are the played points z^t; x_hat, y_hat the
// auxiliary OOMD points (also tracked for entropy OFTRL, where they are
// the non-optimistic FTRL points). log_* hold log-probabilities for entropy
// runs and stay accurate after the linear values underflow. prev_loss is
// the loss observed at t, cum_loss the sum up to and including t.
struct JointIterate {
  int64_t t = 0;
  std::vector<double> x, y;
  std::vector<double> x_hat, y_hat;
  std::vector<double> log_x, log_y;
  std::vector<double> log_x_hat, log_y_hat;
  std::vector<double> cum_loss_x, cum_loss_y;
  std::vector<double> prev_loss_x, prev_loss_y;
};

// Uniform strategies at t = 1 with their losses.
JointIterate InitialIterate(const MatrixGame& game,
                            const DynamicsConfig& config);

JointIterate StepOftrl(const MatrixGame& game, JointIterate state,
                       const Regularizer& reg, double eta);
JointIterate StepOftrlScalar2x2(const MatrixGame& game, JointIterate state,
                                const Regularizer& reg, double eta);
JointIterate StepOomd(const MatrixGame& game, JointIterate state,
                      const Regularizer& reg, double eta);
JointIterate StepOgda(const MatrixGame& game, JointIterate state,
                      double eta);

// Dispatches on config.
JointIterate Step(const MatrixGame& game, JointIterate state,
                  const DynamicsConfig& config);

// Euclidean projection onto the probability simplex (sort and threshold).
SimplexPoint ProjectSimplex(std::span<const double> v);

// argmin over the simplex of R(p) - <theta, p>. `log_out` is filled for the
// entropy when non-null.
void MirrorArgmin(const Regularizer& reg, std::span<const double> theta,
                  std::vector<double>& out,
                  std::vector<double>* log_out = nullptr);

// max_j -loss_y[j] - min_i loss_x[i]; equals DualityGap for the iterate that
// produced the losses.
double GapFromLosses(const JointIterate& state);

// min over coordinates of log x, log y and, when present, the auxiliary
// points.
double MinLogProbability(const JointIterate& state);

struct IterateRecord {
  int64_t t = 0;
  std::vector<double> x, y;
  std::vector<double> loss_x, loss_y;
  double gap = 0.0;
  // Exact running statistics over [1, t].
  double best_gap = 0.0;
  int64_t best_t = 0;
  double gap_sum = 0.0;
  double min_log_prob = 0.0;
};

struct TrajectorySummary {
  JointIterate final_iterate;
  double last_gap = 0.0;
  double best_gap = 0.0;
  int64_t best_t = 0;
  double gap_sum = 0.0;
  double min_log_prob = 0.0;
};

struct Trajectory {
  MatrixGame game;
  DynamicsConfig config;
  std::vector<IterateRecord> records;
  TrajectorySummary summary;
};

// Called once per iteration with the state and its duality gap. Returning
// false stops the run.
using IterateCallback = std::function<bool(const JointIterate&, double)>;

// Streams all iterates 1..horizon without storing them. Numeric failures
// surface as NumericError carrying the iteration index.
void ForEachIterate(const MatrixGame& game, const DynamicsConfig& config,
                    const IterateCallback& callback);

Trajectory RunDynamics(const MatrixGame& game, const DynamicsConfig& config);

}  // namespace optdyn

#endif  // OPTDYN_DYNAMICS_H_
