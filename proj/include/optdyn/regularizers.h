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

#ifndef OPTDYN_REGULARIZERS_H_
#define OPTDYN_REGULARIZERS_H_

#include <span>
#include <string>

namespace optdyn {

enum class RegKind { kEntropy, kSqEuclid, kLogBarrier, kTsallis };

// Separable regularizer R(p) = sum_i phi(p_i) on the simplex.
class Regularizer {
 public:
  static Regularizer Entropy() { return Regularizer(RegKind::kEntropy, 0.0); }
  static Regularizer SqEuclid() {
    return Regularizer(RegKind::kSqEuclid, 0.0);
  }
  static Regularizer LogBarrier() {
    return Regularizer(RegKind::kLogBarrier, 0.0);
  }
  static Regularizer Tsallis(double beta);

  // Accepts "entropy", "sqeuclid", "logbarrier", "tsallis" (case-insensitive).
  static Regularizer Parse(const std::string& name, double beta = 0.5);

  RegKind kind() const { return kind_; }
  double beta() const { return beta_; }
  double lipschitz_L() const;
  std::string Name() const;

  // Finite at p = 0 for every kind except the log barrier.
  bool FiniteOnBoundary() const { return kind_ != RegKind::kLogBarrier; }

  double Phi(double p) const;
  double DPhi(double p) const;
  // Solves DPhi(p) = v for p >= 0. SqEuclid clips at 0; the barrier kinds
  // require v < 0.
  double DPhiInverse(double v) const;

 private:
  Regularizer(RegKind kind, double beta) : kind_(kind), beta_(beta) {}

  RegKind kind_;
  double beta_;
};

double RegValue(const Regularizer& reg, std::span<const double> x);

// D_R(x, xp). Equals KL(x, xp) for the entropy.
double Bregman(const Regularizer& reg, std::span<const double> x,
               std::span<const double> xp);

// argmin over x in [0,1] of x*e + R((x, 1-x)) / eta.
double FEta(const Regularizer& reg, double eta, double e);

// E with FEta(reg, 1, E) = x, for x in (0,1).
double F1Inverse(const Regularizer& reg, double x);

// f_R(delta) = -F1Inverse(1 / (1 + delta)), exact.
double FDelta(const Regularizer& reg, double delta);

}  // namespace optdyn

#endif  // OPTDYN_REGULARIZERS_H_
