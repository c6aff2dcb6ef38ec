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

#include "optdyn/cli/verify.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "optdyn/cli/artifacts.h"
#include "optdyn/cli/experiments.h"
#include "optdyn/dynamics.h"
#include "optdyn/game.h"
#include "optdyn/hardness.h"
#include "optdyn/metrics.h"
#include "optdyn/regularizers.h"

namespace optdyn::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Tracks |sum of gaps - social dynamic regret| / T across runs.
class RegretLog {
 public:
  void Add(const std::string& run, int64_t horizon, double gap_sum,
           double regret) {
    const double per_step = std::abs(gap_sum - regret) / horizon;
    std::lock_guard<std::mutex> lock(mu_);
    ++runs_;
    if (per_step >= worst_) {
      worst_ = per_step;
      worst_run_ = run;
    }
  }

  void AddTrajectory(const std::string& run, const Trajectory& traj) {
    Add(run, traj.config.horizon, traj.summary.gap_sum,
        SocialDynamicRegret(traj, traj.config.horizon));
  }

  int runs() const { return runs_; }

  CheckResult Check() const {
    CheckResult c;
    c.id = "C6";
    c.name = "regret identity";
    c.pass = runs_ > 0 && worst_ <= 1e-9;
    c.detail = fmt::format(
        "max |sum gaps - social dynamic regret| / T = {:.3g} over {} runs "
        "(worst: {}; bound 1e-9)",
        worst_, runs_, worst_run_);
    return c;
  }

 private:
  std::mutex mu_;
  int runs_ = 0;
  double worst_ = 0.0;
  std::string worst_run_ = "none";
};

// Streams one run and logs its regret identity without storing iterates.
template <typename Fn>
void StreamRun(const MatrixGame& game, const DynamicsConfig& cfg,
               const std::string& name, RegretLog& log, Fn&& fn) {
  double gaps = 0.0, regret = 0.0;
  int64_t last = 0;
  ForEachIterate(game, cfg, [&](const JointIterate& s, double gap) {
    gaps += gap;
    regret += SocialRegretTerm(s.x, s.y, s.prev_loss_x, s.prev_loss_y);
    last = s.t;
    return fn(s, gap);
  });
  log.Add(name, last, gaps, regret);
}

DynamicsConfig Omwu(double eta, int64_t horizon) {
  DynamicsConfig c;
  c.eta = eta;
  c.horizon = horizon;
  return c;
}

// Minimizer of x e + (phi(x) + phi(1-x)) / eta over [0,1], by long-double
// bisection on the derivative. Written from the regularizer formulas, not
// from FEta.
double OracleFEta(const Regularizer& reg, double eta, double e) {
  const long double b = reg.beta();
  auto dphi = [&](long double x) -> long double {
    switch (reg.kind()) {
      case RegKind::kEntropy:
        return std::log(x) + 1.0L;
      case RegKind::kSqEuclid:
        return x;
      case RegKind::kLogBarrier:
        return -1.0L / x;
      case RegKind::kTsallis:
        return -b / (1.0L - b) * std::pow(x, b - 1.0L);
    }
    return 0.0L;
  };
  long double lo = 0.0L, hi = 1.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    const long double d = e + (dphi(mid) - dphi(1.0L - mid)) / eta;
    if (d > 0.0L) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

std::array<Regularizer, 4> AllRegularizers() {
  return {Regularizer::Entropy(), Regularizer::SqEuclid(),
          Regularizer::LogBarrier(), Regularizer::Tsallis(0.5)};
}

CheckResult CheckFEtaOracle() {
  const auto start = Clock::now();
  double worst = 0.0;
  std::string where;
  for (const Regularizer& reg : AllRegularizers()) {
    for (double eta : {0.05, 0.1, 0.5}) {
      for (int k = 0; k < 1000; ++k) {
        const double e = -50.0 + 100.0 * k / 999.0;
        const double err = std::abs(FEta(reg, eta, e) - OracleFEta(reg, eta, e));
        if (err > worst) {
          worst = err;
          where = fmt::format("{}, eta={}, e={:.4g}", reg.Name(), eta, e);
        }
      }
    }
  }
  const double secs = Since(start);
  return {"C1", "F_eta vs bisection oracle", worst <= 1e-9 && secs < 5.0,
          fmt::format("max error {:.3g} at ({}); bound 1e-9, runtime < 5 s",
                      worst, where),
          secs};
}

CheckResult CheckFDelta() {
  const auto start = Clock::now();
  double worst = 0.0;
  bool bounds = true;
  const Regularizer ts = Regularizer::Tsallis(0.5);
  for (double d : {0.1, 0.01, 0.001}) {
    const std::array<std::pair<Regularizer, double>, 3> exact = {{
        {Regularizer::Entropy(), std::log(1.0 / d)},
        {Regularizer::SqEuclid(), (1.0 - d) / (1.0 + d)},
        {Regularizer::LogBarrier(), (1.0 - d * d) / d},
    }};
    for (const auto& [reg, want] : exact) {
      const double got = FDelta(reg, d);
      worst = std::max(worst, std::abs(got - want) / std::abs(want));
    }
    bounds = bounds && FDelta(Regularizer::Entropy(), d) <= std::log(1.0 / d) * (1 + 1e-15);
    bounds = bounds && FDelta(Regularizer::SqEuclid(), d) <= 1.0;
    bounds = bounds && FDelta(Regularizer::LogBarrier(), d) <= 1.0 / d;
    const double b = ts.beta();
    const double f_ts = FDelta(ts, d);
    bounds = bounds && f_ts > 0.0 &&
             f_ts <= 2.0 * b / (1.0 - b) * std::pow(1.0 / d, 1.0 - b);
  }
  const double secs = Since(start);
  return {"C2", "f_R(delta) exact values and bounds",
          worst <= 1e-10 && bounds && secs < 1.0,
          fmt::format("max relative error {:.3g} (bound 1e-10); bounds {}",
                      worst, bounds ? "hold" : "VIOLATED"),
          secs};
}

std::vector<CheckResult> SuiteOracles() {
  return {CheckFEtaOracle(), CheckFDelta()};
}

std::vector<CheckResult> SuiteCoincidence(const fs::path& dir, RegretLog& log,
                                          int threads) {
  const auto start = Clock::now();
  const MatrixGame game = MakeADelta(0.1);
  const std::array<Regularizer, 3> regs = {Regularizer::Entropy(),
                                           Regularizer::LogBarrier(),
                                           Regularizer::Tsallis(0.5)};
  std::array<double, 3> worst{};
  ParallelFor(regs.size(), threads, [&](size_t k) {
    DynamicsConfig a = Omwu(0.1, 10000);
    a.regularizer = regs[k];
    a.record_stride = 1;
    DynamicsConfig b = a;
    b.algorithm = Algorithm::kOomd;
    const Trajectory ta = RunDynamics(game, a);
    const Trajectory tb = RunDynamics(game, b);
    log.AddTrajectory("oftrl_" + regs[k].Name(), ta);
    log.AddTrajectory("oomd_" + regs[k].Name(), tb);
    std::string csv = "t,max_abs_diff\n";
    for (size_t r = 0; r < ta.records.size(); ++r) {
      double d = 0.0;
      for (size_t i = 0; i < 2; ++i) {
        d = std::max(d, std::abs(ta.records[r].x[i] - tb.records[r].x[i]));
        d = std::max(d, std::abs(ta.records[r].y[i] - tb.records[r].y[i]));
      }
      worst[k] = std::max(worst[k], d);
      const int64_t t = ta.records[r].t;
      if (t % 100 == 0 || t == 1) {
        csv += fmt::format("{},{}\n", t, FormatNumber(d));
      }
    }
    WriteTextFile(dir / ("coincidence_" + regs[k].Name() + ".csv"), csv);
  });
  const double secs = Since(start);
  const double m = *std::max_element(worst.begin(), worst.end());
  return {{"C3", "OFTRL/OOMD coincidence", m <= 1e-8 && secs < 30.0,
           fmt::format("max discrepancy over 1e4 steps: entropy {:.3g}, "
                       "logbarrier {:.3g}, tsallis(0.5) {:.3g}; bound 1e-8",
                       worst[0], worst[1], worst[2]),
           secs}};
}

std::vector<CheckResult> SuiteReduction(const fs::path& dir, RegretLog& log) {
  const auto start = Clock::now();
  const MatrixGame base = MakeADxDy(0.05, 0.3);
  std::vector<double> shifted;
  for (double v : base.entries()) shifted.push_back(0.3 + 0.5 * v);
  const MatrixGame game(2, 2, shifted);
  DynamicsConfig a = Omwu(0.05, 10000);
  a.record_stride = 1;
  DynamicsConfig b = Omwu(0.025, 10000);
  b.record_stride = 1;
  const Trajectory ta = RunDynamics(game, a);
  const Trajectory tb = RunDynamics(base, b);
  log.AddTrajectory("reduction_shifted", ta);
  log.AddTrajectory("reduction_base", tb);
  double worst = 0.0;
  for (size_t r = 0; r < ta.records.size(); ++r) {
    for (size_t i = 0; i < 2; ++i) {
      worst = std::max(worst, std::abs(ta.records[r].x[i] - tb.records[r].x[i]));
      worst = std::max(worst, std::abs(ta.records[r].y[i] - tb.records[r].y[i]));
    }
  }
  WriteTextFile(dir / "reduction_shifted.csv", TrajectoryCsv(ta));
  WriteTextFile(dir / "reduction_base.csv", TrajectoryCsv(tb));
  const double secs = Since(start);
  return {{"C4", "reduction invariance", worst <= 1e-9 && secs < 10.0,
           fmt::format("OMWU(0.05) on 0.3 + 0.5 A vs OMWU(0.025) on A, "
                       "A = A(0.05, 0.3): max discrepancy {:.3g}; bound 1e-9",
                       worst),
           secs}};
}

std::vector<CheckResult> SuiteLyapunov(const fs::path& dir, RegretLog& log) {
  const auto start = Clock::now();
  const MatrixGame game = MakeADelta(0.1);
  const Trajectory traj = RunDynamics(game, Omwu(0.1, 100000));
  log.AddTrajectory("lyapunov", traj);
  const NashPoint2x2 ne = SolveNash2x2(game);
  const LyapunovSeries ly = ComputeLyapunov(traj, ne.x_star, ne.y_star);
  std::string csv = "t,theta,zeta\n";
  for (size_t k = 0; k < ly.zeta.size(); ++k) {
    const int64_t t = ly.zeta[k].t;
    if (t % 100 == 0 || t == 2) {
      csv += fmt::format("{},{},{}\n", t, FormatNumber(ly.theta[k].value),
                         FormatNumber(ly.zeta[k].value));
    }
  }
  WriteTextFile(dir / "lyapunov.csv", csv);
  const double secs = Since(start);
  return {{"C5", "Lyapunov descent",
           ly.max_descent_violation <= 1e-9 && secs < 30.0,
           fmt::format("max of Theta(t+1) - Theta(t) + 15/16 zeta(t) over "
                       "1e5 steps = {:.3g} at t={} (bound 1e-9); one-sided "
                       "inequality slack {:.3g}",
                       ly.max_descent_violation, ly.worst_descent_t,
                       ly.max_one_sided_violation),
           secs}};
}

CheckResult CheckBadBlock(RegretLog& log, int threads) {
  const auto start = Clock::now();
  const std::array<double, 3> deltas = {0.02, 0.01, 0.005};
  std::array<std::optional<BadRun>, 3> runs;
  ParallelFor(deltas.size(), threads, [&](size_t k) {
    BadRunTracker tracker(0.1);
    StreamRun(MakeADelta(deltas[k]), Omwu(0.1, 1000000),
              fmt::format("omwu_delta_{}", deltas[k]), log,
              [&](const JointIterate& s, double gap) {
                tracker.Observe(s.t, gap);
                return true;
              });
    tracker.Finish();
    runs[k] = tracker.Longest();
  });
  const double secs = Since(start);
  for (const auto& r : runs) {
    if (!r) {
      return {"C7", "lower-bound bad block", false,
              "no run with gap >= 0.1 found", secs};
    }
  }
  const double c1 = HardnessC1(Regularizer::Entropy());
  const double d = 0.01;
  const double bound =
      (8.0 + 2.0 * 0.5 * std::log(1.0 / d)) / (c1 * 0.5 * 0.1 * 0.5 * d);
  const double r1 = static_cast<double>(runs[1]->length()) / runs[0]->length();
  const double r2 = static_cast<double>(runs[2]->length()) / runs[1]->length();
  const bool pass = r1 >= 1.3 && r1 <= 3.0 && r2 >= 1.3 && r2 <= 3.0 &&
                    runs[1]->length() >= 50 && runs[1]->start <= bound &&
                    secs < 120.0;
  return {"C7", "lower-bound bad block", pass,
          fmt::format("longest gap>=0.1 runs: delta=0.02 [{},{}] len {}, "
                      "delta=0.01 [{},{}] len {}, delta=0.005 [{},{}] len {}; "
                      "ratios {:.3f}, {:.3f} (want [1.3,3]); start bound "
                      "{:.4g}",
                      runs[0]->start, runs[0]->end, runs[0]->length(),
                      runs[1]->start, runs[1]->end, runs[1]->length(),
                      runs[2]->start, runs[2]->end, runs[2]->length(), r1, r2,
                      bound),
          secs};
}

CheckResult CheckSeparation(const fs::path& dir, int threads) {
  const auto start = Clock::now();
  Figure1Options o;
  o.threads = threads;
  const std::vector<PanelOutcome> panels = RunFigure1(o, dir);
  auto avg = [&](const std::string& name) {
    for (const PanelOutcome& p : panels) {
      if (p.panel.name == name) return p;
    }
    throw DomainError("missing panel " + name);
  };
  const PanelOutcome sq = avg("oftrl_sqeuclid"), en = avg("oftrl_entropy"),
                     ts = avg("oftrl_tsallis"), lb = avg("oftrl_logbarrier");
  const double secs = Since(start);
  const bool pass = sq.final_avg_regret > en.final_avg_regret &&
                    en.final_avg_regret > ts.final_avg_regret &&
                    ts.final_avg_regret > lb.final_avg_regret && secs < 180.0;
  return {"C8", "regularizer separation", pass,
          fmt::format("final average regret: sqeuclid {:.4f} (T={}), entropy "
                      "{:.4f} (T={}), tsallis(0.5) {:.4f} (T={}), logbarrier "
                      "{:.4f} (T={}); want sqeuclid > entropy > tsallis > "
                      "logbarrier",
                      sq.final_avg_regret, sq.panel.horizon,
                      en.final_avg_regret, en.panel.horizon,
                      ts.final_avg_regret, ts.panel.horizon,
                      lb.final_avg_regret, lb.panel.horizon),
          secs};
}

std::vector<CheckResult> SuiteLowerBound(const fs::path& dir, RegretLog& log,
                                         int threads) {
  return {CheckBadBlock(log, threads), CheckSeparation(dir, threads)};
}

// Log-spaced sample times 10^3 .. 10^6, 20 per decade.
std::vector<int64_t> RateGrid() {
  std::vector<int64_t> grid;
  for (int k = 0; k <= 60; ++k) {
    const int64_t t = std::llround(std::pow(10.0, 3.0 + k / 20.0));
    if (grid.empty() || t != grid.back()) grid.push_back(t);
  }
  return grid;
}

double LogLogSlope(const std::vector<int64_t>& t, const std::vector<double>& v) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(t.size());
  for (size_t k = 0; k < t.size(); ++k) {
    const double x = std::log(static_cast<double>(t[k]));
    const double y = std::log(v[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckResult CheckBestIterateRate(RegretLog& log, int threads) {
  const auto start = Clock::now();
  const std::array<double, 4> deltas = {1e-1, 1e-2, 1e-3, 1e-4};
  const std::vector<int64_t> grid = RateGrid();
  std::array<std::vector<double>, 4> best_at;
  std::array<double, 4> worst_ratio{};
  ParallelFor(deltas.size(), threads, [&](size_t k) {
    double best = INFINITY;
    size_t g = 0;
    StreamRun(MakeADelta(deltas[k]), Omwu(0.1, 1000000),
              fmt::format("omwu_delta_{}", deltas[k]), log,
              [&](const JointIterate& s, double gap) {
                best = std::min(best, gap);
                if (s.t >= 1000) {
                  worst_ratio[k] = std::max(
                      worst_ratio[k],
                      best / (5.0 * std::pow(static_cast<double>(s.t), -1.0 / 6.0)));
                }
                if (g < grid.size() && s.t == grid[g]) {
                  best_at[k].push_back(best);
                  ++g;
                }
                return true;
              });
  });
  std::vector<double> envelope(grid.size(), 0.0);
  for (size_t g = 0; g < grid.size(); ++g) {
    for (size_t k = 0; k < deltas.size(); ++k) {
      envelope[g] = std::max(envelope[g], best_at[k][g]);
    }
  }
  const double slope = LogLogSlope(grid, envelope);
  const double ratio = *std::max_element(worst_ratio.begin(), worst_ratio.end());
  const double secs = Since(start);
  return {"C9", "best-iterate rate", ratio <= 1.0 && slope <= -0.15 && secs < 300.0,
          fmt::format("max best(T) / (5 T^-1/6) over T >= 1e3 and delta in "
                      "{{1e-1..1e-4}} = {:.3g} (want <= 1); envelope log-log "
                      "slope {:.3f} (want <= -0.15)",
                      ratio, slope),
          secs};
}

CheckResult CheckOgda(RegretLog& log) {
  const auto start = Clock::now();
  DynamicsConfig cfg = Omwu(0.1, 10000);
  cfg.algorithm = Algorithm::kOgda;
  cfg.regularizer = Regularizer::SqEuclid();
  cfg.record_stride = 1;
  const Trajectory traj = RunDynamics(MakeADelta(0.01), cfg);
  log.AddTrajectory("ogda", traj);
  const double a100 = traj.records[99].gap_sum / 100.0;
  const double a10k = traj.summary.gap_sum / 10000.0;
  const double secs = Since(start);
  return {"C10", "OGDA baseline", a10k <= 0.2 * a100 && secs < 10.0,
          fmt::format("average gap {:.4g} at T=1e2, {:.4g} at T=1e4, ratio "
                      "{:.3f} (want <= 0.2)",
                      a100, a10k, a10k / a100),
          secs};
}

CheckResult CheckInitialPhase(RegretLog& log) {
  const auto start = Clock::now();
  struct Case {
    double dx, dy;
  };
  const std::array<Case, 2> cases = {{{0.01, 0.3}, {0.01, 0.6}}};
  std::vector<std::string> parts;
  std::vector<double> fitted;
  bool pass = true;
  for (const Case& c : cases) {
    InitialPhaseDetector det(c.dx, c.dy, 0.1, 0.1);
    // Case dy < 1/2 is judged at Tx, the other at T1.
    const bool case2 = c.dy < 0.5;
    double best = INFINITY, fit = 0.0, gap_at = NAN;
    std::optional<int64_t> landmark;
    StreamRun(MakeADxDy(c.dx, c.dy), Omwu(0.1, 100000),
              fmt::format("initial_{}_{}", c.dx, c.dy), log,
              [&](const JointIterate& s, double gap) {
                det.Observe(s.t, s.x, s.y, gap);
                best = std::min(best, gap);
                if (s.t >= 2) {
                  const double lt = std::log(static_cast<double>(s.t));
                  fit = std::max(fit, best * static_cast<double>(s.t) / (lt * lt));
                }
                landmark = case2 ? det.report().tx : det.report().t1;
                if (landmark) gap_at = gap;
                return !landmark;
              });
    const PhaseReport& r = det.report();
    if (!landmark) {
      pass = false;
      parts.push_back(fmt::format("A({},{}): landmark not reached", c.dx, c.dy));
      continue;
    }
    pass = pass && gap_at <= 2.0 * c.dx + 1e-9 && std::isfinite(fit);
    fitted.push_back(fit);
    if (case2) {
      parts.push_back(fmt::format(
          "A({},{}): Ty={} Tm={} Tx={} gap(Tx)={:.4g} C={:.3f}", c.dx, c.dy,
          r.ty ? *r.ty : -1, r.tm ? *r.tm : -1, *landmark, gap_at, fit));
    } else {
      parts.push_back(fmt::format("A({},{}): T1={} gap(T1)={:.4g} C={:.3f}",
                                  c.dx, c.dy, *landmark, gap_at, fit));
    }
  }
  double spread = INFINITY;
  if (fitted.size() == cases.size()) {
    spread = *std::max_element(fitted.begin(), fitted.end()) /
             *std::min_element(fitted.begin(), fitted.end());
  }
  const double secs = Since(start);
  pass = pass && spread <= 2.0 && secs < 30.0;
  std::string detail;
  for (const std::string& p : parts) detail += p + "; ";
  detail += fmt::format(
      "gap bound 2 delta_x + 1e-9; C = max_t best(t) t / log^2 t over "
      "2 <= t <= landmark, spread {:.3f} (want <= 2)",
      spread);
  return {"C11", "initial-phase landmarks", pass, detail, secs};
}

std::vector<CheckResult> SuiteBestIterate(RegretLog& log, int threads) {
  return {CheckBestIterateRate(log, threads), CheckOgda(log),
          CheckInitialPhase(log)};
}

// Suites whose CSV artifacts are compared for determinism.
const std::array<const char*, 3> kArtifactSuites = {"coincidence", "reduction",
                                                    "lyapunov"};

std::vector<CheckResult> RunArtifactSuite(const std::string& name,
                                          const fs::path& dir, RegretLog& log,
                                          int threads) {
  if (name == "coincidence") return SuiteCoincidence(dir, log, threads);
  if (name == "reduction") return SuiteReduction(dir, log);
  return SuiteLyapunov(dir, log);
}

std::string ReadBytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::string> ListFiles(const fs::path& dir) {
  std::vector<std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reruns the artifact suites into `second` and compares every CSV with the
// copy under `first`.
CheckResult CheckDeterminism(const fs::path& first, const fs::path& second,
                             int threads) {
  const auto start = Clock::now();
  RegretLog scratch;
  size_t files = 0;
  std::vector<std::string> mismatches;
  for (const char* suite : kArtifactSuites) {
    RunArtifactSuite(suite, second / suite, scratch, threads);
    const auto a = ListFiles(first / suite);
    const auto b = ListFiles(second / suite);
    if (a != b || a.empty()) {
      mismatches.push_back(std::string(suite) + " (file sets differ)");
      continue;
    }
    for (const std::string& f : a) {
      ++files;
      if (ReadBytes(first / suite / f) != ReadBytes(second / suite / f)) {
        mismatches.push_back(std::string(suite) + "/" + f);
      }
    }
  }
  std::string detail =
      fmt::format("{} CSV files from coincidence, reduction, lyapunov "
                  "compared byte for byte",
                  files);
  if (!mismatches.empty()) {
    detail += "; differing:";
    for (const auto& m : mismatches) detail += " " + m;
  }
  return {"C12", "determinism", mismatches.empty(), detail, Since(start)};
}

}  // namespace

bool SuiteReport::AllPass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "oracles",     "coincidence", "reduction",   "lyapunov",
      "lowerbound",  "bestiterate", "determinism", "all"};
  return names;
}

bool IsKnownSuite(const std::string& name) {
  const auto& n = SuiteNames();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport RunSuite(const std::string& name, const VerifyOptions& options) {
  if (!IsKnownSuite(name)) throw DomainError("unknown suite '" + name + "'");
  const fs::path root = options.out_dir / "verify";
  const int threads = options.threads;
  SuiteReport report{name, {}};
  RegretLog log;
  auto add = [&report](std::vector<CheckResult> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  auto run_one = [&](const std::string& suite) {
    if (suite == "oracles") {
      add(SuiteOracles());
    } else if (suite == "coincidence" || suite == "reduction" ||
               suite == "lyapunov") {
      add(RunArtifactSuite(suite, root / suite, log, threads));
    } else if (suite == "lowerbound") {
      add(SuiteLowerBound(root / suite, log, threads));
    } else if (suite == "bestiterate") {
      add(SuiteBestIterate(log, threads));
    }
  };

  if (name == "all") {
    for (const char* suite : {"oracles", "coincidence", "reduction", "lyapunov",
                              "lowerbound", "bestiterate"}) {
      run_one(suite);
    }
    report.checks.push_back(log.Check());
    report.checks.push_back(
        CheckDeterminism(root, root / "determinism", threads));
  } else if (name == "determinism") {
    RegretLog scratch;
    for (const char* suite : kArtifactSuites) {
      RunArtifactSuite(suite, root / "determinism" / "first" / suite, scratch,
                       threads);
    }
    report.checks.push_back(CheckDeterminism(root / "determinism" / "first",
                                             root / "determinism" / "second",
                                             threads));
  } else {
    run_one(name);
    if (log.runs() > 0) report.checks.push_back(log.Check());
  }
  return report;
}

std::string FormatCheck(const CheckResult& c) {
  return fmt::format("{} {} {}: {} [{:.2f} s]", c.pass ? "PASS" : "FAIL", c.id,
                     c.name, c.detail, c.seconds);
}

}  // namespace optdyn::cli
