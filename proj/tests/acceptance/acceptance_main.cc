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

// Acceptance checks. Prints one PASS/FAIL line per criterion. Reference
// values come from oracles written here, not from the library code under
// test.
//
// Usage: acceptance [--out DIR] [--expect-fail N]... [--only N]...
// Exit status is 0 when every criterion passes, except those named with
// --expect-fail, which must fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <fmt/ranges.h>

#include "optdyn/cli/artifacts.h"
#include "optdyn/cli/experiments.h"
#include "optdyn/dynamics.h"
#include "optdyn/game.h"
#include "optdyn/hardness.h"
#include "optdyn/metrics.h"
#include "optdyn/regularizers.h"

namespace {

namespace fs = std::filesystem;
using namespace optdyn;
using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Oracles.

// max_j (A^T x)[j] - min_i (A y)[i], straight from the entries.
double OracleGap(const MatrixGame& g, std::span<const double> x,
                 std::span<const double> y) {
  double col_max = -INFINITY, row_min = INFINITY;
  for (int j = 0; j < g.cols(); ++j) {
    double v = 0.0;
    for (int i = 0; i < g.rows(); ++i) v += g.entries()[i * g.cols() + j] * x[i];
    col_max = std::max(col_max, v);
  }
  for (int i = 0; i < g.rows(); ++i) {
    double v = 0.0;
    for (int j = 0; j < g.cols(); ++j) v += g.entries()[i * g.cols() + j] * y[j];
    row_min = std::min(row_min, v);
  }
  return col_max - row_min;
}

// Derivative of one coordinate of the regularizer.
long double PhiPrime(const Regularizer& r, long double p) {
  switch (r.kind()) {
    case RegKind::kEntropy:
      return std::log(p) + 1;
    case RegKind::kSqEuclid:
      return p;
    case RegKind::kLogBarrier:
      return -1 / p;
    case RegKind::kTsallis:
      return -r.beta() * std::pow(p, r.beta() - 1.0L) / (1 - r.beta());
  }
  return 0;
}

// argmin over [0,1] of x e + (phi(x) + phi(1-x)) / eta, by bisection on the
// increasing derivative in extended precision.
double OracleFEta(const Regularizer& r, double eta, double e) {
  auto deriv = [&](long double x) {
    return e + (PhiPrime(r, x) - PhiPrime(r, 1 - x)) / eta;
  };
  long double lo = 1e-4000L, hi = 1 - 1e-19L;
  if (r.kind() == RegKind::kSqEuclid) {
    if (deriv(0) >= 0) return 0.0;
    if (deriv(1) <= 0) return 1.0;
    lo = 0;
    hi = 1;
  }
  for (int i = 0; i < 20000 && hi - lo > 1e-19L; ++i) {
    long double mid = (lo + hi) / 2;
    (deriv(mid) > 0 ? hi : lo) = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

// KL(p, q) from log-probabilities, 0 log 0 = 0.
double OracleKl(std::span<const double> log_p, std::span<const double> log_q) {
  double s = 0.0;
  for (size_t i = 0; i < log_p.size(); ++i) {
    if (std::isinf(log_p[i])) continue;
    s += std::exp(log_p[i]) * (log_p[i] - log_q[i]);
  }
  return s;
}

// Longest run of entries >= threshold: (start, length), 1-based, earliest.
std::pair<int64_t, int64_t> OracleLongestRun(const std::vector<double>& gaps,
                                             double threshold) {
  int64_t best_start = 0, best_len = 0, start = 0;
  for (size_t i = 0; i <= gaps.size(); ++i) {
    bool bad = i < gaps.size() && gaps[i] >= threshold;
    if (bad && start == 0) start = static_cast<int64_t>(i) + 1;
    if (!bad && start != 0) {
      int64_t len = static_cast<int64_t>(i) + 1 - start;
      if (len > best_len) {
        best_len = len;
        best_start = start;
      }
      start = 0;
    }
  }
  return {best_start, best_len};
}

double LogLogSlope(const std::vector<double>& t, const std::vector<double>& v) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = static_cast<double>(t.size());
  for (size_t k = 0; k < t.size(); ++k) {
    double x = std::log(t[k]), y = std::log(v[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// Every run goes through Stream, which records the regret identity.

struct IdentityLog {
  std::mutex mu;
  int runs = 0;
  double worst = 0.0;  // max over runs of |sum gaps - SDR| / T
  std::string worst_run;
};

IdentityLog g_identity;

DynamicsConfig Config(Algorithm a, Regularizer r, double eta, int64_t t) {
  DynamicsConfig c;
  c.algorithm = a;
  c.regularizer = r;
  c.eta = eta;
  c.horizon = t;
  return c;
}

DynamicsConfig Omwu(double eta, int64_t t) {
  return Config(Algorithm::kOftrl, Regularizer::Entropy(), eta, t);
}

using Visit = std::function<void(const JointIterate&, double)>;

void Stream(const std::string& name, const MatrixGame& game,
            const DynamicsConfig& config, const Visit& visit) {
  double gap_sum = 0.0, regret = 0.0;
  ForEachIterate(game, config, [&](const JointIterate& s, double gap) {
    gap_sum += gap;
    // Regret of each player against its pure best response at t.
    const auto& lx = s.prev_loss_x;
    const auto& ly = s.prev_loss_y;
    double px = 0.0, py = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) px += lx[i] * s.x[i];
    for (size_t j = 0; j < ly.size(); ++j) py += ly[j] * s.y[j];
    regret += px - *std::min_element(lx.begin(), lx.end()) + py -
              *std::min_element(ly.begin(), ly.end());
    visit(s, gap);
    return true;
  });
  double err = std::abs(gap_sum - regret) / static_cast<double>(config.horizon);
  std::lock_guard<std::mutex> lock(g_identity.mu);
  ++g_identity.runs;
  if (err >= g_identity.worst) {
    g_identity.worst = err;
    g_identity.worst_run = name;
  }
}

// Played points of a run, flattened as x0, x1, ..., y0, y1, ... per t.
std::vector<double> Points(const std::string& name, const MatrixGame& game,
                           const DynamicsConfig& config) {
  std::vector<double> out;
  Stream(name, game, config, [&](const JointIterate& s, double) {
    out.insert(out.end(), s.x.begin(), s.x.end());
    out.insert(out.end(), s.y.begin(), s.y.end());
  });
  return out;
}

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void WriteFile(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Trajectory CSV through the library writer, so determinism covers it.
void WriteTrajectory(const fs::path& p, const MatrixGame& game,
                     DynamicsConfig config) {
  config.record_stride = 10;
  WriteFile(p, cli::TrajectoryCsv(RunDynamics(game, config)));
}

// ---------------------------------------------------------------------------
// Criteria.

Outcome C1() {
  auto start = Clock::now();
  double worst = 0.0;
  std::string where;
  for (const Regularizer& r : {Regularizer::Entropy(), Regularizer::SqEuclid(),
                               Regularizer::LogBarrier(), Regularizer::Tsallis(0.5)}) {
    for (double eta : {0.05, 0.1, 0.5}) {
      for (int i = 0; i < 1000; ++i) {
        double e = -50.0 + 100.0 * i / 999.0;
        double err = std::abs(FEta(r, eta, e) - OracleFEta(r, eta, e));
        if (err > worst) {
          worst = err;
          where = fmt::format("{} eta={} e={:.4g}", r.Name(), eta, e);
        }
      }
    }
  }
  double secs = Since(start);
  return {worst <= 1e-9 && secs < 5.0,
          fmt::format("max |F - oracle| = {:.3g} at {} (want <= 1e-9); {:.2f} s",
                      worst, where, secs)};
}

Outcome C2() {
  auto start = Clock::now();
  double worst = 0.0;
  bool bound_ok = true;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  for (double d : {0.1, 0.01, 0.001}) {
    worst = std::max(worst, rel(FDelta(Regularizer::Entropy(), d), std::log(1 / d)));
    worst = std::max(worst, rel(FDelta(Regularizer::SqEuclid(), d), (1 - d) / (1 + d)));
    worst = std::max(worst, rel(FDelta(Regularizer::LogBarrier(), d), (1 - d * d) / d));
    const double b = 0.5, x = 1 / (1 + d);
    const double exact =
        -(b / (1 - b)) * (std::pow(x, b - 1) - std::pow(1 - x, b - 1));
    const double f = FDelta(Regularizer::Tsallis(b), d);
    worst = std::max(worst, rel(f, exact));
    bound_ok = bound_ok && f <= 2 * b / (1 - b) * std::pow(1 / d, 1 - b);
  }
  double secs = Since(start);
  return {worst <= 1e-10 && bound_ok && secs < 1.0,
          fmt::format("max relative error {:.3g} (want <= 1e-10); Tsallis bound {}; "
                      "{:.3f} s",
                      worst, bound_ok ? "holds" : "violated", secs)};
}

Outcome C3(const fs::path& dir) {
  auto start = Clock::now();
  MatrixGame a = MakeADelta(0.1);
  std::vector<std::string> parts;
  bool ok = true;
  for (const Regularizer& r :
       {Regularizer::Entropy(), Regularizer::LogBarrier(), Regularizer::Tsallis(0.5)}) {
    DynamicsConfig f = Config(Algorithm::kOftrl, r, 0.1, 10000);
    DynamicsConfig m = Config(Algorithm::kOomd, r, 0.1, 10000);
    double d = MaxAbsDiff(Points("oftrl_" + r.Name(), a, f),
                          Points("oomd_" + r.Name(), a, m));
    ok = ok && d <= 1e-8;
    parts.push_back(fmt::format("{} {:.2g}", r.Name(), d));
    WriteTrajectory(dir / fmt::format("coincidence_oftrl_{}.csv", r.Name()), a, f);
    WriteTrajectory(dir / fmt::format("coincidence_oomd_{}.csv", r.Name()), a, m);
  }
  double secs = Since(start);
  return {ok && secs < 30.0,
          fmt::format("max discrepancy {} (want <= 1e-8); {:.2f} s",
                      fmt::join(parts, ", "), secs)};
}

Outcome C4(const fs::path& dir) {
  auto start = Clock::now();
  MatrixGame base = MakeADxDy(0.05, 0.3);
  std::vector<double> e(4);
  for (int k = 0; k < 4; ++k) e[k] = 0.3 + 0.5 * base.entries()[k];
  MatrixGame scaled(2, 2, e);
  double d = MaxAbsDiff(Points("reduction_scaled", scaled, Omwu(0.05, 10000)),
                        Points("reduction_base", base, Omwu(0.025, 10000)));
  WriteTrajectory(dir / "reduction_scaled.csv", scaled, Omwu(0.05, 10000));
  WriteTrajectory(dir / "reduction_base.csv", base, Omwu(0.025, 10000));
  double secs = Since(start);
  return {d <= 1e-9 && secs < 10.0,
          fmt::format("max discrepancy {:.3g} (want <= 1e-9); {:.2f} s", d, secs)};
}

Outcome C5(const fs::path& dir) {
  auto start = Clock::now();
  MatrixGame a = MakeADelta(0.1);
  const std::array<double, 2> xs{1 / 1.1, 0.1 / 1.1}, ys{1 / 2.2, 1.2 / 2.2};
  const std::array<double, 2> lxs{std::log(xs[0]), std::log(xs[1])};
  const std::array<double, 2> lys{std::log(ys[0]), std::log(ys[1])};
  // Sanity check of the equilibrium used by the potential.
  const double eq_gap = OracleGap(a, xs, ys);

  JointIterate prev;
  double prev_theta = 0.0, worst = -INFINITY;
  int64_t worst_t = 0;
  bool have = false;
  std::string csv = "t,theta,zeta\n";
  Stream("lyapunov", a, Omwu(0.1, 100000), [&](const JointIterate& s, double) {
    if (s.t >= 2) {
      double theta = OracleKl(lxs, s.log_x_hat) + OracleKl(lys, s.log_y_hat) +
                     (OracleKl(s.log_x_hat, prev.log_x) +
                      OracleKl(s.log_y_hat, prev.log_y)) / 16;
      if (have) {
        // zeta^{t-1} = KL(zhat^t, z^{t-1}) + KL(z^{t-1}, zhat^{t-1}).
        double zeta = OracleKl(s.log_x_hat, prev.log_x) +
                      OracleKl(s.log_y_hat, prev.log_y) +
                      OracleKl(prev.log_x, prev.log_x_hat) +
                      OracleKl(prev.log_y, prev.log_y_hat);
        double v = theta - prev_theta + 15.0 / 16.0 * zeta;
        if (v > worst) {
          worst = v;
          worst_t = prev.t;
        }
        if (prev.t % 100 == 0)
          csv += fmt::format("{},{},{}\n", prev.t, cli::FormatNumber(prev_theta),
                             cli::FormatNumber(zeta));
      }
      prev_theta = theta;
      have = true;
    }
    prev = s;
  });
  WriteFile(dir / "lyapunov_theta.csv", csv);
  WriteTrajectory(dir / "lyapunov_trajectory.csv", a, Omwu(0.1, 100000));
  double secs = Since(start);
  return {worst <= 1e-9 && eq_gap <= 1e-12 && secs < 30.0,
          fmt::format("max Theta(t+1) - Theta(t) + (15/16) zeta(t) = {:.3g} at t={} "
                      "(want <= 1e-9); {:.2f} s",
                      worst, worst_t, secs)};
}

Outcome C7() {
  auto start = Clock::now();
  const std::array<double, 3> deltas{0.02, 0.01, 0.005};
  std::array<std::pair<int64_t, int64_t>, 3> runs;
  std::vector<std::future<void>> jobs;
  for (size_t k = 0; k < deltas.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      MatrixGame g = MakeADelta(deltas[k]);
      std::vector<double> gaps;
      gaps.reserve(1000000);
      Stream(fmt::format("lowerbound_{}", deltas[k]), g, Omwu(0.1, 1000000),
             [&](const JointIterate& s, double) { gaps.push_back(OracleGap(g, s.x, s.y)); });
      runs[k] = OracleLongestRun(gaps, 0.1);
    }));
  }
  for (auto& j : jobs) j.get();
  const double r1 = static_cast<double>(runs[1].second) / runs[0].second;
  const double r2 = static_cast<double>(runs[2].second) / runs[1].second;
  const double c1 = 0.5 - 1 / (1 + std::exp(0.1));
  const double bound = (8 + 2 * 0.5 * std::log(1 / 0.01)) / (c1 * 0.5 * 0.1 * 0.5 * 0.01);
  double secs = Since(start);
  bool ok = r1 >= 1.3 && r1 <= 3 && r2 >= 1.3 && r2 <= 3 && runs[1].second >= 50 &&
            runs[1].first <= bound && secs < 120.0;
  return {ok, fmt::format("lengths {}, {}, {} (ratios {:.3f}, {:.3f}, want in [1.3, 3]); "
                          "delta=0.01 run starts at {} (want <= {:.4g}); {:.1f} s",
                          runs[0].second, runs[1].second, runs[2].second, r1, r2,
                          runs[1].first, bound, secs)};
}

Outcome C8() {
  auto start = Clock::now();
  cli::Figure1Options opts;  // delta 0.01, eta 0.1
  std::vector<cli::Figure1Panel> panels;
  for (const auto& p : cli::Figure1Panels(opts))
    if (p.algorithm == Algorithm::kOftrl) panels.push_back(p);
  MatrixGame g = MakeADelta(opts.delta);
  std::vector<double> avg(panels.size());
  std::vector<std::future<void>> jobs;
  for (size_t k = 0; k < panels.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      double sum = 0.0;
      Stream("figure1_" + panels[k].name, g,
             Config(Algorithm::kOftrl, panels[k].regularizer, opts.eta, panels[k].horizon),
             [&](const JointIterate& s, double) { sum += OracleGap(g, s.x, s.y); });
      avg[k] = sum / static_cast<double>(panels[k].horizon);
    }));
  }
  for (auto& j : jobs) j.get();
  auto value = [&](RegKind kind) {
    for (size_t k = 0; k < panels.size(); ++k)
      if (panels[k].regularizer.kind() == kind) return avg[k];
    return std::numeric_limits<double>::quiet_NaN();
  };
  const double sq = value(RegKind::kSqEuclid), en = value(RegKind::kEntropy);
  const double ts = value(RegKind::kTsallis), lb = value(RegKind::kLogBarrier);
  std::vector<std::string> parts;
  for (size_t k = 0; k < panels.size(); ++k)
    parts.push_back(fmt::format("{} {:.4f} (T={})", panels[k].regularizer.Name(), avg[k],
                                panels[k].horizon));
  double secs = Since(start);
  return {sq > en && en > ts && ts > lb && secs < 180.0,
          fmt::format("final average gap {} (want sqeuclid > entropy > tsallis > "
                      "logbarrier); {:.1f} s",
                      fmt::join(parts, ", "), secs)};
}

Outcome C9() {
  auto start = Clock::now();
  const std::array<double, 4> deltas{1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<double> grid;
  for (int k = 0; k <= 60; ++k) {
    double t = std::round(std::pow(10.0, 3.0 + k / 20.0));
    if (grid.empty() || t != grid.back()) grid.push_back(t);
  }
  std::array<std::vector<double>, 4> best_at;
  std::array<double, 4> ratio{};
  std::vector<std::future<void>> jobs;
  for (size_t k = 0; k < deltas.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      MatrixGame g = MakeADelta(deltas[k]);
      double best = INFINITY;
      size_t next = 0;
      Stream(fmt::format("bestiterate_{}", deltas[k]), g, Omwu(0.1, 1000000),
             [&](const JointIterate& s, double) {
               best = std::min(best, OracleGap(g, s.x, s.y));
               double t = static_cast<double>(s.t);
               if (s.t >= 1000) ratio[k] = std::max(ratio[k], best / (5 * std::pow(t, -1.0 / 6)));
               if (next < grid.size() && t == grid[next]) {
                 best_at[k].push_back(best);
                 ++next;
               }
             });
    }));
  }
  for (auto& j : jobs) j.get();
  std::vector<double> envelope(grid.size(), 0.0);
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t k = 0; k < deltas.size(); ++k)
      envelope[i] = std::max(envelope[i], best_at[k][i]);
  const double slope = LogLogSlope(grid, envelope);
  const double worst = *std::max_element(ratio.begin(), ratio.end());
  double secs = Since(start);
  return {worst <= 1.0 && slope <= -0.15 && secs < 300.0,
          fmt::format("max best(T) / (5 T^-1/6) = {:.3g} (want <= 1); envelope slope "
                      "{:.3f} (want <= -0.15); {:.1f} s",
                      worst, slope, secs)};
}

Outcome C10() {
  auto start = Clock::now();
  MatrixGame g = MakeADelta(0.01);
  double sum = 0.0, at100 = 0.0, at10000 = 0.0;
  Stream("ogda", g, Config(Algorithm::kOgda, Regularizer::SqEuclid(), 0.1, 10000),
         [&](const JointIterate& s, double) {
           sum += OracleGap(g, s.x, s.y);
           if (s.t == 100) at100 = sum / 100;
           if (s.t == 10000) at10000 = sum / 10000;
         });
  double secs = Since(start);
  return {at10000 <= at100 / 5 && secs < 10.0,
          fmt::format("average gap {:.4g} at T=100, {:.4g} at T=1e4, ratio {:.3f} "
                      "(want <= 0.2); {:.2f} s",
                      at100, at10000, at10000 / at100, secs)};
}

Outcome C11() {
  auto start = Clock::now();
  const double dx = 0.01;
  std::vector<std::string> parts;
  std::vector<double> fitted;
  bool ok = true;
  for (double dy : {0.3, 0.6}) {
    MatrixGame g = MakeADxDy(dx, dy);
    DynamicsConfig c = Omwu(0.1, 100000);
    // dy < 1/2: Tx = first t with x[0] > 1 - dx. Otherwise T1 = first t
    // with x[0] >= 1 - dx.
    int64_t landmark = 0;
    double landmark_gap = NAN, best = INFINITY, max_c = 0.0;
    Stream(fmt::format("initial_{}", dy), g, c, [&](const JointIterate& s, double) {
      double gap = OracleGap(g, s.x, s.y);
      best = std::min(best, gap);
      if (landmark != 0) return;
      double t = static_cast<double>(s.t);
      if (s.t >= 2) max_c = std::max(max_c, best * t / (std::log(t) * std::log(t)));
      bool hit = dy < 0.5 ? s.x[0] > 1 - dx : s.x[0] >= 1 - dx;
      if (hit) {
        landmark = s.t;
        landmark_gap = gap;
      }
    });
    // The library detector must report the same iteration.
    PhaseReport p = DetectPhasesInitial(RunDynamics(g, c), dx, dy);
    std::optional<int64_t> lib = dy < 0.5 ? p.tx : p.t1;
    bool agree = landmark != 0 && lib && *lib == landmark;
    ok = ok && agree && landmark_gap <= 2 * dx + 1e-9 && std::isfinite(max_c);
    fitted.push_back(max_c);
    parts.push_back(fmt::format("A_(0.01,{}) {}={} gap {:.4g} C={:.3f}{}", dy,
                                dy < 0.5 ? "Tx" : "T1", landmark, landmark_gap, max_c,
                                agree ? "" : " (detector disagrees)"));
  }
  const double spread = std::max(fitted[0], fitted[1]) / std::min(fitted[0], fitted[1]);
  double secs = Since(start);
  return {ok && spread <= 2.0 && secs < 30.0,
          fmt::format("{}; C spread {:.3f} (want <= 2); gap want <= 0.02; {:.2f} s",
                      fmt::join(parts, "; "), spread, secs)};
}

Outcome C6() {
  std::lock_guard<std::mutex> lock(g_identity.mu);
  return {g_identity.runs > 0 && g_identity.worst <= 1e-9,
          fmt::format("max |sum gaps - social dynamic regret| / T = {:.3g} over {} runs "
                      "(worst {}; want <= 1e-9)",
                      g_identity.worst, g_identity.runs, g_identity.worst_run)};
}

Outcome C12(const fs::path& first, const fs::path& second) {
  fs::remove_all(second);
  C3(second);
  C4(second);
  C5(second);
  int files = 0, same = 0;
  std::string diff;
  for (const auto& entry : fs::directory_iterator(first)) {
    ++files;
    fs::path other = second / entry.path().filename();
    if (fs::exists(other) && ReadFile(entry.path()) == ReadFile(other)) {
      ++same;
    } else if (diff.empty()) {
      diff = entry.path().filename().string();
    }
  }
  return {files > 0 && same == files,
          fmt::format("{} of {} CSV files byte-identical{}", same, files,
                      diff.empty() ? "" : " (first difference: " + diff + ")")};
}

}  // namespace

int main(int argc, char** argv) {
  fs::path out = "acceptance_out";
  std::set<int> expect_fail, only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if ((a == "--out" || a == "--expect-fail" || a == "--only") && i + 1 < argc) {
      std::string v = argv[++i];
      if (a == "--out") out = v;
      if (a == "--expect-fail") expect_fail.insert(std::atoi(v.c_str()));
      if (a == "--only") only.insert(std::atoi(v.c_str()));
    } else {
      std::fprintf(stderr, "usage: acceptance [--out DIR] [--expect-fail N]... [--only N]...\n");
      return 2;
    }
  }
  const fs::path run1 = out / "run1", run2 = out / "run2";
  fs::remove_all(run1);
  fs::create_directories(run1);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
  };
  // C6 needs every other run first and C12 needs C3-C5's files.
  const std::vector<Criterion> criteria = {
      {1, "closed-form oracle agreement", C1},
      {2, "f_R(delta) exactness and bounds", C2},
      {3, "OFTRL/OOMD coincidence", [&] { return C3(run1); }},
      {4, "reduction invariance", [&] { return C4(run1); }},
      {5, "Lyapunov descent", [&] { return C5(run1); }},
      {7, "lower-bound block", C7},
      {8, "regularizer separation", C8},
      {9, "best-iterate rate", C9},
      {10, "OGDA baseline", C10},
      {11, "initial-phase landmarks", C11},
      {6, "regret identity", C6},
      {12, "determinism", [&] { return C12(run1, run2); }},
  };

  bool ok = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool expected = expect_fail.count(c.id) > 0;
    const char* tag = o.pass ? (expected ? "XPASS" : "PASS") : (expected ? "XFAIL" : "FAIL");
    std::printf("%s C%d %s: %s\n", tag, c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (o.pass == expected) ok = false;
  }
  std::printf("%s\n", ok ? "acceptance: ok" : "acceptance: FAILED");
  return ok ? 0 : 1;
}
