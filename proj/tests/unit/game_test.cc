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

#include "optdyn/game.h"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

namespace optdyn {
namespace {

std::vector<double> RandomSimplex(std::mt19937_64& rng, int d) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> p(d);
  double s = 0.0;
  for (double& v : p) s += (v = exp1(rng));
  for (double& v : p) v /= s;
  return p;
}

TEST_CASE("MakeADelta") {
  MatrixGame a = MakeADelta(0.1);
  CHECK(a(0, 0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(a(0, 1) == 0.5);
  CHECK(a(1, 0) == 0.0);
  CHECK(a(1, 1) == 1.0);
  MatrixGame b = MakeADelta(0.01);
  CHECK(b(0, 0) == doctest::Approx(0.51).epsilon(1e-15));
  CHECK_THROWS_AS(MakeADelta(0.0), DomainError);
  CHECK_THROWS_AS(MakeADelta(0.5), DomainError);
  CHECK_THROWS_AS(MakeADelta(-0.1), DomainError);
}

TEST_CASE("MakeADxDy") {
  MatrixGame a = MakeADxDy(0.5, 0.5);
  CHECK(a(0, 0) == 1.0);
  CHECK(a(0, 1) == 0.0);
  CHECK(a(1, 0) == 0.0);
  CHECK(a(1, 1) == 1.0);

  MatrixGame b = MakeADxDy(0.01, 0.3);
  CHECK(b(0, 0) == doctest::Approx(0.7 / 0.99).epsilon(1e-14));
  CHECK(b(0, 1) == doctest::Approx(0.69 / 0.99).epsilon(1e-14));

  CHECK_THROWS_AS(MakeADxDy(0.3, 0.2), DomainError);
  CHECK_THROWS_AS(MakeADxDy(0.3, 0.8), DomainError);
  CHECK_THROWS_AS(MakeADxDy(0.0, 0.5), DomainError);

  // The delta family is the special case dx = d/(1+d), dy = 1/(2(1+d)).
  for (double d = 0.005; d < 0.5; d += 0.005) {
    MatrixGame g = MakeADxDy(d / (1 + d), 1 / (2 * (1 + d)));
    MatrixGame h = MakeADelta(d);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(g(i, j) - h(i, j)) < 1e-14);
  }
}

TEST_CASE("MatrixGame validation") {
  CHECK_THROWS_AS(MatrixGame(1, 2, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(MatrixGame(2, 2, {0.0, 1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(MatrixGame(2, 2, {0.0, 1.5, 0.5, 0.5}), DomainError);
  CHECK_NOTHROW(MatrixGame(2, 2, {0.0, 1.5, -0.5, 0.5}, {-1.0, 2.0}));
  CHECK_THROWS_AS(MatrixGame(2, 2, {0.0, NAN, 0.5, 0.5}), DomainError);
}

TEST_CASE("SimplexPoint") {
  CHECK_NOTHROW(SimplexPoint({0.25, 0.75}));
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(SimplexPoint({-0.1, 1.1}), DomainError);
  SimplexPoint u = SimplexPoint::Uniform(4);
  CHECK(u[3] == 0.25);
}

TEST_CASE("DualityGap examples") {
  MatrixGame a = MakeADelta(0.1);
  std::vector<double> h{0.5, 0.5};
  CHECK(DualityGap(a, h, h) == doctest::Approx(0.25).epsilon(1e-15));

  MatrixGame zero(2, 2, {0, 0, 0, 0});
  CHECK(DualityGap(zero, h, std::vector<double>{0.1, 0.9}) == 0.0);

  std::vector<double> bad{1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK_THROWS_AS(DualityGap(a, bad, h), DomainError);
}

TEST_CASE("DualityGap is nonnegative") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    int d1 = 2 + trial % 4, d2 = 2 + (trial / 4) % 3;
    std::vector<double> e(d1 * d2);
    for (double& v : e) v = u(rng);
    MatrixGame g(d1, d2, e);
    CHECK(DualityGap(g, RandomSimplex(rng, d1), RandomSimplex(rng, d2)) >=
          -1e-12);
  }
}

TEST_CASE("SolveNash2x2 examples") {
  NashPoint2x2 n = SolveNash2x2(MakeADelta(0.1));
  CHECK(n.fully_mixed);
  CHECK(n.x_star[0] == doctest::Approx(1 / 1.1).epsilon(1e-13));
  CHECK(n.x_star[1] == doctest::Approx(0.1 / 1.1).epsilon(1e-13));
  CHECK(n.y_star[0] == doctest::Approx(1 / 2.2).epsilon(1e-13));
  CHECK(n.y_star[1] == doctest::Approx(1.2 / 2.2).epsilon(1e-13));
  CHECK(n.delta_x == doctest::Approx(0.1 / 1.1).epsilon(1e-13));
  CHECK(n.delta_y == doctest::Approx(1 / 2.2).epsilon(1e-13));
  CHECK(DualityGap(MakeADelta(0.1), n.x_star, n.y_star) <= 1e-10);

  NashPoint2x2 z = SolveNash2x2(MatrixGame(2, 2, {0, 0, 0, 0}));
  CHECK(z.x_star[0] == 0.5);
  CHECK(z.y_star[0] == 0.5);

  NashPoint2x2 mp = SolveNash2x2(MatrixGame(2, 2, {0, 1, 1, 0}));
  CHECK(mp.x_star[0] == doctest::Approx(0.5));
  CHECK(mp.y_star[0] == doctest::Approx(0.5));
  CHECK(mp.game_value == doctest::Approx(0.5));
}

TEST_CASE("SolveNash2x2 gap bound on random and degenerate games") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coarse(0, 2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> e(4);
    // Half the games use a coarse grid, which produces ties and pure
    // equilibria.
    for (double& v : e) v = trial % 2 ? u(rng) : coarse(rng) / 2.0;
    MatrixGame g(2, 2, e);
    NashPoint2x2 n = SolveNash2x2(g);
    CHECK(DualityGap(g, n.x_star, n.y_star) <= 1e-10);
    if (n.fully_mixed) {
      CHECK(n.x_star[1] == doctest::Approx(n.delta_x));
      CHECK(n.y_star[0] == doctest::Approx(n.delta_y));
    }
  }
}

TEST_CASE("ValidateEquilibrium") {
  MatrixGame a = MakeADelta(0.1);
  CHECK_NOTHROW(ValidateEquilibrium(a, SimplexPoint({1 / 1.1, 0.1 / 1.1}),
                                    SimplexPoint({1 / 2.2, 1.2 / 2.2})));
  CHECK_THROWS_AS(ValidateEquilibrium(a, SimplexPoint::Uniform(2),
                                      SimplexPoint::Uniform(2)),
                  DomainError);
}

TEST_CASE("Decompose2x2 examples") {
  Decomposition2x2 d = Decompose2x2(MakeADelta(0.1));
  CHECK(d.b1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d.b2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.delta_x == doctest::Approx(0.1 / 1.1).epsilon(1e-12));
  CHECK(d.delta_y == doctest::Approx(1 / 2.2).epsilon(1e-12));
  CHECK(d.relabeling.IsIdentity());

  MatrixGame base = MakeADxDy(0.05, 0.3);
  std::vector<double> e(4);
  for (int k = 0; k < 4; ++k) e[k] = 0.2 + 0.5 * base.entries()[k];
  Decomposition2x2 r = Decompose2x2(MatrixGame(2, 2, e));
  CHECK(r.b1 == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(r.b2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.delta_x == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r.delta_y == doctest::Approx(0.3).epsilon(1e-12));

  Decomposition2x2 s = Decompose2x2(MatrixGame(2, 2, {1.0, 0.3, 0.3, 1.0}));
  CHECK(s.b1 == doctest::Approx(0.3));
  CHECK(s.b2 == doctest::Approx(0.7));
  CHECK(s.delta_x == doctest::Approx(0.5));
  CHECK(s.delta_y == doctest::Approx(0.5));

  CHECK_THROWS_AS(Decompose2x2(MatrixGame(2, 2, {0, 0, 1, 1})), DomainError);
}

TEST_CASE("Decompose2x2 round trip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double dx = 0.01 + 0.48 * u(rng);
    double dy = dx + (1 - 2 * dx) * u(rng);
    double b1 = -1 + 2 * u(rng);
    double b2 = 0.01 + 0.99 * u(rng);
    MatrixGame base = MakeADxDy(dx, dy);
    std::vector<double> e(4);
    for (int k = 0; k < 4; ++k) e[k] = b1 + b2 * base.entries()[k];
    Decomposition2x2 d = Decompose2x2(MatrixGame(2, 2, e, {-1.0, 2.0}));
    CHECK(std::abs(d.b1 - b1) <= 1e-9);
    CHECK(std::abs(d.b2 - b2) <= 1e-9);
    CHECK(std::abs(d.delta_x - dx) <= 1e-9);
    CHECK(std::abs(d.delta_y - dy) <= 1e-9);
  }
}

TEST_CASE("Decompose2x2 relabels other orientations") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> e(4);
    for (double& v : e) v = u(rng);
    MatrixGame g(2, 2, e);
    if (!SolveNash2x2(g).fully_mixed) continue;
    Decomposition2x2 d = Decompose2x2(g);
    CHECK(d.b2 > 0.0);
    CHECK(d.delta_x <= d.delta_y + 1e-12);
    CHECK(d.delta_y <= 1 - d.delta_x + 1e-12);
    MatrixGame canon = Relabel(g, d.relabeling);
    MatrixGame base = MakeADxDy(d.delta_x, d.delta_y);
    double scale = std::max(1.0, std::abs(d.b2));
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(canon.entries()[k] - d.b1 - d.b2 * base.entries()[k]) <=
            1e-10 * scale);
  }
}

TEST_CASE("Relabeled strategies keep the gap") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    Relabeling r{(trial & 1) != 0, (trial & 2) != 0, (trial & 4) != 0};
    std::vector<double> e(4);
    for (double& v : e) v = u(rng);
    MatrixGame g(2, 2, e);
    std::vector<double> x = RandomSimplex(rng, 2), y = RandomSimplex(rng, 2);
    double gap = DualityGap(g, x, y);
    RelabelStrategies(r, x, y);
    CHECK(DualityGap(Relabel(g, r), x, y) == doctest::Approx(gap));
  }
}

TEST_CASE("Loss formulas of the two-parameter family") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double dx = 0.01 + 0.48 * u(rng);
    double dy = dx + (1 - 2 * dx) * u(rng);
    MatrixGame g = MakeADxDy(dx, dy);
    std::vector<double> x = RandomSimplex(rng, 2), y = RandomSimplex(rng, 2);
    std::vector<double> lx = g.LossX(y), ly = g.LossY(x);
    double ex = (y[0] - dy) / (1 - dx);
    double ey = (1 - dx - x[0]) / (1 - dx);
    CHECK(std::abs((lx[0] - lx[1]) - ex) <= 1e-12);
    CHECK(std::abs((ly[0] - ly[1]) - ey) <= 1e-12);
  }
}

}  // namespace
}  // namespace optdyn
