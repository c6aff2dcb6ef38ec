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

#include "optdyn/regularizers.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "optdyn/game.h"

namespace optdyn {
namespace {

constexpr double kBisectLo = 1e-15;
constexpr double kBisectHi = 1.0 - 1e-15;
constexpr int kBisectMaxIter = 200;
constexpr double kBisectWidth = 1e-14;

void CheckInterior(const Regularizer& reg, std::span<const double> x,
                   const char* what) {
  for (double v : x) {
    if (!(v > 0.0)) {
      throw DomainError(std::string(what) + ": " + reg.Name() +
                        " requires a strictly interior point");
    }
  }
}

}  // namespace

Regularizer Regularizer::Tsallis(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("Tsallis: beta must lie in (0, 1), got " +
                      std::to_string(beta));
  }
  return Regularizer(RegKind::kTsallis, beta);
}

Regularizer Regularizer::Parse(const std::string& name, double beta) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (n == "entropy") return Entropy();
  if (n == "sqeuclid") return SqEuclid();
  if (n == "logbarrier") return LogBarrier();
  if (n == "tsallis") return Tsallis(beta);
  throw DomainError("unknown regularizer '" + name +
                    "' (expected entropy, sqeuclid, logbarrier, tsallis)");
}

double Regularizer::lipschitz_L() const {
  return kind_ == RegKind::kTsallis ? 1.0 / (2.0 * beta_) : 0.5;
}

std::string Regularizer::Name() const {
  switch (kind_) {
    case RegKind::kEntropy:
      return "entropy";
    case RegKind::kSqEuclid:
      return "sqeuclid";
    case RegKind::kLogBarrier:
      return "logbarrier";
    case RegKind::kTsallis:
      return "tsallis";
  }
  return "unknown";
}

double Regularizer::Phi(double p) const {
  switch (kind_) {
    case RegKind::kEntropy:
      return p > 0.0 ? p * std::log(p) : 0.0;
    case RegKind::kSqEuclid:
      return 0.5 * p * p;
    case RegKind::kLogBarrier:
      return -std::log(p);
    case RegKind::kTsallis:
      return -std::pow(p, beta_) / (1.0 - beta_);
  }
  return 0.0;
}

double Regularizer::DPhi(double p) const {
  switch (kind_) {
    case RegKind::kEntropy:
      return std::log(p) + 1.0;
    case RegKind::kSqEuclid:
      return p;
    case RegKind::kLogBarrier:
      return -1.0 / p;
    case RegKind::kTsallis:
      return -beta_ / (1.0 - beta_) * std::pow(p, beta_ - 1.0);
  }
  return 0.0;
}

double Regularizer::DPhiInverse(double v) const {
  switch (kind_) {
    case RegKind::kEntropy:
      return std::exp(v - 1.0);
    case RegKind::kSqEuclid:
      return std::max(v, 0.0);
    case RegKind::kLogBarrier:
      return v < 0.0 ? -1.0 / v : INFINITY;
    case RegKind::kTsallis: {
      if (!(v < 0.0)) return INFINITY;
      const double k = beta_ / (1.0 - beta_);
      return std::pow(-v / k, 1.0 / (beta_ - 1.0));
    }
  }
  return 0.0;
}

double RegValue(const Regularizer& reg, std::span<const double> x) {
  CheckSimplex(x, "RegValue");
  if (reg.kind() != RegKind::kSqEuclid) CheckInterior(reg, x, "RegValue");
  if (reg.kind() == RegKind::kTsallis) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, reg.beta());
    return (1.0 - s) / (1.0 - reg.beta());
  }
  double s = 0.0;
  for (double v : x) s += reg.Phi(v);
  return s;
}

double Bregman(const Regularizer& reg, std::span<const double> x,
               std::span<const double> xp) {
  if (x.size() != xp.size()) throw DomainError("Bregman: size mismatch");
  CheckSimplex(x, "Bregman");
  CheckSimplex(xp, "Bregman");
  if (reg.kind() != RegKind::kSqEuclid) CheckInterior(reg, xp, "Bregman");
  if (!reg.FiniteOnBoundary()) CheckInterior(reg, x, "Bregman");
  double s = 0.0;
  if (reg.kind() == RegKind::kEntropy) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0.0) s += x[i] * std::log(x[i] / xp[i]);
    }
    return std::max(s, 0.0);
  }
  for (size_t i = 0; i < x.size(); ++i) {
    s += reg.Phi(x[i]) - reg.Phi(xp[i]) - reg.DPhi(xp[i]) * (x[i] - xp[i]);
  }
  return std::max(s, 0.0);
}

double FEta(const Regularizer& reg, double eta, double e) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("FEta: eta must be positive and finite");
  }
  if (!std::isfinite(e)) throw DomainError("FEta: e must be finite");
  const double s = eta * e;
  switch (reg.kind()) {
    case RegKind::kEntropy:
      return 1.0 / (1.0 + std::exp(s));
    case RegKind::kSqEuclid:
      return std::clamp((1.0 - s) / 2.0, 0.0, 1.0);
    case RegKind::kLogBarrier:
    case RegKind::kTsallis:
      break;
  }
  // Stationarity of the scalar problem; increasing in x.
  auto g = [&](double x) { return s + reg.DPhi(x) - reg.DPhi(1.0 - x); };
  double lo = kBisectLo, hi = kBisectHi;
  for (int it = 0; it < kBisectMaxIter && hi - lo > kBisectWidth; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (gm > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double F1Inverse(const Regularizer& reg, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("F1Inverse: x must lie in (0, 1)");
  }
  switch (reg.kind()) {
    case RegKind::kEntropy:
      return std::log((1.0 - x) / x);
    case RegKind::kSqEuclid:
      return 1.0 - 2.0 * x;
    case RegKind::kLogBarrier:
      return (2.0 * x - 1.0) / (x * x - x);
    case RegKind::kTsallis: {
      const double b = reg.beta();
      return b / (1.0 - b) *
             (std::pow(x, b - 1.0) - std::pow(1.0 - x, b - 1.0));
    }
  }
  return 0.0;
}

double FDelta(const Regularizer& reg, double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("FDelta: delta must lie in (0, 1/2)");
  }
  // Closed forms avoid the cancellation in 1 - 1/(1+delta).
  switch (reg.kind()) {
    case RegKind::kEntropy:
      return -std::log(delta);
    case RegKind::kSqEuclid:
      return (1.0 - delta) / (1.0 + delta);
    case RegKind::kLogBarrier:
      return (1.0 - delta * delta) / delta;
    case RegKind::kTsallis: {
      const double b = reg.beta();
      const double x = 1.0 / (1.0 + delta);
      const double y = delta / (1.0 + delta);
      return b / (1.0 - b) * (std::pow(y, b - 1.0) - std::pow(x, b - 1.0));
    }
  }
  return 0.0;
}

}  // namespace optdyn
