#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "fkfront/asymptotics.hpp"
#include "support/oracles.hpp"

using namespace fkfront;

namespace {

Snapshot constant_snapshot(double value, double t0 = 0.0) {
  const Grid g(10.0, 11);
  return Snapshot(Field{g, std::vector<double>(g.size(), value), t0});
}

// nodes -100, 0, 100 with values 1, 1/2, 0: linear on the whole left half
Snapshot linear_snapshot() {
  const Grid g(100.0, 3);
  return Snapshot(Field{g, {1.0, 0.5, 0.0}, 0.0});
}

}  // namespace

TEST_CASE("snapshot reproduces nodes and clamps outside the grid") {
  const Grid g(2.0, 5);
  const Snapshot s(Field{g, {0.9, 0.7, 0.4, 0.2, 0.1}, 1.5});
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(s(g.x(i)) == s.field().values[i]);
  CHECK(s(-50.0) == 0.9);
  CHECK(s(50.0) == 0.1);
  CHECK(s(0.5) == doctest::Approx(0.3));
  CHECK(s.time() == 1.5);
  CHECK_THROWS_AS(Snapshot(Field{g, {1.0, 2.0}, 0.0}), std::invalid_argument);
}

TEST_CASE("sfa_evolve examples") {
  const Grid g(100.0, 501);
  const Snapshot step(step_initial_condition(g, FrontSpec{-35.0}));
  SUBCASE("t = t0 returns the snapshot") {
    for (double x : {-80.0, -35.1, -10.3, 0.0, 42.0}) CHECK(sfa_evolve(step, x, 0.0) == step(x));
  }
  SUBCASE("logistic fixed points") {
    for (double t : {0.0, 0.5, 3.0, 20.0}) {
      CHECK(sfa_evolve(constant_snapshot(0.0), -4.0, t) == 0.0);
      CHECK(sfa_evolve(constant_snapshot(1.0), -4.0, t) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("u0 = 1/2, D = ln 2 gives 2/3") {
    CHECK(sfa_evolve(constant_snapshot(0.5), -3.0, std::numbers::ln2) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("rejects t before the snapshot") {
    CHECK_THROWS_AS(sfa_evolve(constant_snapshot(0.5, 1.0), -3.0, 0.5), std::invalid_argument);
  }
}

TEST_CASE("sfa_evolve_field samples every node at the target time") {
  const Grid g(10.0, 41);
  const Snapshot s(step_initial_condition(g, FrontSpec{-4.0}));
  const Field f = sfa_evolve_field(s, g, 0.7);
  CHECK(f.time == 0.7);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(f.values[i] == sfa_evolve(s, g.x(i), 0.7));
}

TEST_CASE("characteristic and log-coordinate front paths") {
  CHECK(sfa_characteristic(-35.0, 2.0, 2.0) == -35.0);
  CHECK(sfa_characteristic(-35.0, 0.0, std::numbers::ln2 / 2.0) == doctest::Approx(-17.5).epsilon(1e-14));
  CHECK(sfa_characteristic(0.0, 0.0, 9.0) == 0.0);
  CHECK(twc_front_path(-35.0, 1.0, 1.0) == -35.0);
  CHECK(twc_front_path(-35.0, 0.0, 1.0) == doctest::Approx(-35.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(twc_front_path(12.0, 0.0, 0.5, 1.0) == doctest::Approx(12.0 * std::exp(-0.5)));
  CHECK_THROWS_AS(twc_front_path(0.0, 0.0, 1.0), std::invalid_argument);
  for (double t : {0.0, 0.3, 1.7, 4.0}) {
    CHECK(twc_front_path(-35.0, 0.5, t) == sfa_characteristic(-35.0, 0.5, t));
  }
}

TEST_CASE("stationary roots examples") {
  const auto minus1 = stationary_roots(1.0, Branch::minus);
  CHECK(minus1.kind == RootKind::real_double);
  CHECK(minus1.first.real() == doctest::Approx(1.0));
  CHECK(minus1.second.real() == doctest::Approx(1.0));

  const auto plus3 = stationary_roots(3.0, Branch::plus);
  CHECK(plus3.kind == RootKind::real_double);
  CHECK(plus3.first.real() == doctest::Approx(1.0));

  // c = 3/2 on the minus branch: lambda^2 - (5/2) lambda + 1 = 0 -> {2, 1/2}
  const auto minus_three_halves = stationary_roots(1.5, Branch::minus);
  CHECK(minus_three_halves.kind == RootKind::real_distinct);
  CHECK(minus_three_halves.first.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(minus_three_halves.second.real() == doctest::Approx(0.5).epsilon(1e-15));

  // c = 5/2 on the minus branch: root sum 7/2 -> (7 +- sqrt 33) / 4
  const auto minus_five_halves = stationary_roots(2.5, Branch::minus);
  CHECK(minus_five_halves.first.real() == doctest::Approx((7.0 + std::sqrt(33.0)) / 4.0));
  CHECK(minus_five_halves.second.real() == doctest::Approx((7.0 - std::sqrt(33.0)) / 4.0));
  CHECK(minus_five_halves.sum().real() == doctest::Approx(3.5));

  const auto complex_case = stationary_roots(0.0, Branch::plus);
  CHECK(complex_case.kind == RootKind::complex_pair);
  CHECK(complex_case.first == std::conj(complex_case.second));
}

TEST_CASE("stationary roots satisfy Vieta for random speeds") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> c_dist(-50.0, 50.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double c = c_dist(rng);
    for (Branch b : {Branch::plus, Branch::minus}) {
      const auto r = stationary_roots(c, b);
      const double expected_sum = b == Branch::plus ? c - 1.0 : c + 1.0;
      CHECK(std::abs(r.product() - 1.0) <= 1e-12);
      CHECK(std::abs(r.sum() - expected_sum) <= 1e-12 * std::max(1.0, std::abs(expected_sum)));
      for (auto lambda : {r.first, r.second}) {
        const auto q = lambda * lambda - expected_sum * lambda + 1.0;
        CHECK(std::abs(q) <= 1e-10 * std::max(1.0, std::norm(lambda)));
      }
    }
  }
}

TEST_CASE("non-oscillatory classification flips at c = -1 and c = 1") {
  CHECK(stationary_roots(-1.0001, Branch::plus).non_oscillatory);
  CHECK_FALSE(stationary_roots(-0.9999, Branch::plus).non_oscillatory);
  CHECK(stationary_roots(1.0001, Branch::minus).non_oscillatory);
  CHECK_FALSE(stationary_roots(0.9999, Branch::minus).non_oscillatory);
  CHECK(std::string(to_string(RootKind::complex_pair)) == "complex_pair");
}

TEST_CASE("tail exponents") {
  const auto [a, b] = tail_exponents(0.75);
  CHECK(a == -0.5);
  CHECK(b == -0.5);
  const auto one = tail_exponents(1.0);
  CHECK(one.first == doctest::Approx(-1.0));
  CHECK(one.second == doctest::Approx(0.0));
  const auto three = tail_exponents(3.0);
  CHECK(three.first == doctest::Approx(-2.0));
  CHECK(three.second == doctest::Approx(1.0));
  CHECK_THROWS_AS(tail_exponents(0.7), std::invalid_argument);
  CHECK_THROWS_AS(tail_exponents(std::nan("")), std::invalid_argument);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> c_dist(0.75, 100.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto e = tail_exponents(c_dist(rng));
    CHECK(e.first + e.second == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e.first <= e.second);
  }
}

TEST_CASE("sfa_evolve keeps [0,1] and monotone profiles monotone") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Grid g(20.0, 81);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> u(g.size());
    double level = 1.0;
    for (double& v : u) {
      level *= 0.8 + 0.2 * unit(rng);
      v = level;
    }
    const Snapshot s(Field{g, u, 0.0});
    const double t = 3.0 * unit(rng);
    double prev = 2.0;
    for (double x = -20.0; x < 0.0; x += 0.173) {
      const double v = sfa_evolve(s, x, t);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("sfa_evolve is a semigroup") {
  const Grid g = Grid::with_spacing(40.0, 0.1);
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) u[i] = 0.5 * std::erfc((g.x(i) + 12.0) / 3.0);
  const Snapshot s0(Field{g, u, 0.0});
  const double t1 = 0.3;
  // e^{2 (t2 - t1)} = 2 maps nodes onto nodes, so re-sampling adds no error
  const double t2 = t1 + std::numbers::ln2 / 2.0;
  const Snapshot s1(sfa_evolve_field(s0, g, t1));
  for (std::size_t i = 0; i < g.size(); i += 7) {
    const double x = g.x(i);
    if (x > 0.0) break;
    CHECK(sfa_evolve(s1, x, t2) == doctest::Approx(sfa_evolve(s0, x, t2)).epsilon(1e-10));
  }
}

TEST_CASE("reduced-equation residual is second order in the probe spacing") {
  const Snapshot s = linear_snapshot();
  const auto diffusion = make_quadratic_diffusion(0.1);
  const auto reaction = logistic_reaction();
  const std::vector<double> probes{-30.0, -21.3, -14.0, -8.7, -5.0};
  std::vector<double> errors;
  for (double h : {0.2, 0.1, 0.05}) {
    const auto r = sfa_residual(s, diffusion, reaction, 0.5, probes, h);
    REQUIRE(r.residual.size() == probes.size());
    double worst = 0.0;
    for (double v : r.residual) worst = std::max(worst, std::abs(v));
    errors.push_back(worst);
  }
  CHECK(errors.back() < 1e-3);
  CHECK(oracle::min_pairwise_order(errors) > 1.8);
}

TEST_CASE("residual at t = t0 uses a one-sided time difference") {
  const Snapshot s = linear_snapshot();
  const std::vector<double> probes{-20.0};
  const auto r = sfa_residual(s, make_quadratic_diffusion(0.1), logistic_reaction(), 0.0, probes, 0.01);
  CHECK(std::abs(r.residual[0]) < 1e-3);
  CHECK_THROWS_AS(sfa_residual(s, make_quadratic_diffusion(0.1), logistic_reaction(), -1.0, probes, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(sfa_residual(s, make_quadratic_diffusion(0.1), logistic_reaction(), 0.0, probes, 0.0),
                  std::invalid_argument);
}

TEST_CASE("validity ratio of a power-law tail is (lambda + 1) / 2") {
  const double lambda = 0.05;
  const Grid g = Grid::with_spacing(20.0, 0.001);
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) u[i] = std::pow(std::abs(g.x(i)) + 1e-3, -lambda);
  const Snapshot s(Field{g, u, 0.0});
  const std::vector<double> probes{-10.0};
  const double eps = 1e-6;
  const auto r = sfa_residual(s, make_quadratic_diffusion(eps), logistic_reaction(), 0.0, probes, 0.05);
  const double expected = (lambda + 1.0) / 2.0 * (100.0 + eps) / 100.0;
  CHECK(r.validity_ratio[0] == doctest::Approx(expected).epsilon(2e-3));
}

TEST_CASE("validity ratio flags a steep profile") {
  const Grid g(10.0, 201);
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) u[i] = 0.5 * std::erfc((g.x(i) + 5.0) / 0.3);
  const Snapshot s(Field{g, u, 0.0});
  const std::vector<double> probes{-5.1};
  const auto r = sfa_residual(s, make_quadratic_diffusion(0.1), logistic_reaction(), 0.0, probes, 0.05);
  CHECK(r.validity_ratio[0] > 1.0);
}
