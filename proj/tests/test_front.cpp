#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fkfront/front.hpp"

using namespace fkfront;

namespace {

FrontPath sample_path(double t_end, double dt, const auto& x_of_t) {
  FrontPath p;
  const auto n = static_cast<std::size_t>(std::llround(t_end / dt));
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) * dt;
    p.times.push_back(t);
    p.positions.emplace_back(x_of_t(t));
  }
  return p;
}

}  // namespace

TEST_CASE("locate_front on step data lies within one cell of x_c") {
  const Grid g(100.0, 501);
  const auto x = locate_front(step_initial_condition(g, FrontSpec{-35.0}));
  REQUIRE(x.has_value());
  CHECK(std::abs(*x + 35.0) <= g.dx());
}

TEST_CASE("locate_front returns missing without a crossing") {
  const Grid g(10.0, 21);
  CHECK_FALSE(locate_front(Field{g, std::vector<double>(g.size(), 0.0), 0.0}).has_value());
  CHECK_FALSE(locate_front(Field{g, std::vector<double>(g.size(), 1.0), 0.0}).has_value());
}

TEST_CASE("locate_front interpolates linearly inside the crossing cell") {
  // grid spacing 0.4 with nodes at 0 and 0.4
  const Grid g(0.4, 3);
  const Field f{g, {1.0, 0.8, 0.2}, 0.0};
  CHECK(*locate_front(f) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(*locate_front(f, 0.65) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("locate_front picks the rightmost crossing") {
  const Grid g(2.0, 5);  // nodes -2 -1 0 1 2
  const Field f{g, {1.0, 0.0, 1.0, 1.0, 0.0}, 0.0};
  CHECK(*locate_front(f) == doctest::Approx(1.5));
}

TEST_CASE("locate_front commutes with u -> 1 - u, x -> -x") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const Grid g(10.0, 101);
  for (int trial = 0; trial < 50; ++trial) {
    const double centre = -8.0 + 16.0 * jitter(rng);
    const double width = 0.2 + 2.0 * jitter(rng);
    std::vector<double> u(g.size()), mirrored(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] = 0.5 * std::erfc((g.x(i) - centre) / width);
    for (std::size_t i = 0; i < g.size(); ++i) mirrored[i] = 1.0 - u[g.size() - 1 - i];
    const auto a = locate_front(Field{g, u, 0.0});
    const auto b = locate_front(Field{g, mirrored, 0.0});
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(-*a).epsilon(1e-12));
  }
}

TEST_CASE("track_front applies locate_front at each stored time") {
  const Grid g(10.0, 21);
  Trajectory traj;
  traj.fields.push_back(Field{g, std::vector<double>(g.size(), 0.0), 0.0});
  traj.fields.push_back(step_initial_condition(g, FrontSpec{-3.0}));
  traj.fields.back().time = 0.5;
  const auto path = track_front(traj);
  REQUIRE(path.times.size() == 2);
  CHECK(path.times[1] == 0.5);
  CHECK_FALSE(path.positions[0].has_value());
  REQUIRE(path.positions[1].has_value());
  CHECK(std::abs(*path.positions[1] + 3.0) <= g.dx());
}

TEST_CASE("trapping time of a linear synthetic path") {
  const auto path = sample_path(20.0, 1.0, [](double t) { return -1.0 + 0.1 * t; });
  const auto r = trapping_time(path, 0.4);
  REQUIRE(r.transited());
  CHECK(r.t_enter == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(r.t_exit == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(r.duration == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("trapping time interpolates between coarse samples") {
  const auto path = sample_path(20.0, 3.0, [](double t) { return -1.0 + 0.1 * t; });
  const auto r = trapping_time(path, 0.4);
  REQUIRE(r.transited());
  CHECK(r.duration == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("trapping time reports the not-transited cases") {
  SUBCASE("never enters") {
    const auto r = trapping_time(sample_path(10.0, 0.5, [](double t) { return -5.0 + 0.1 * t; }));
    CHECK(r.status == TransitStatus::never_entered);
    CHECK_FALSE(r.transited());
    CHECK(r.duration == 0.0);
  }
  SUBCASE("never exits, partial duration is a lower bound") {
    const auto r = trapping_time(sample_path(10.0, 0.5, [](double t) { return -1.0 + 0.1 * t; }));
    CHECK(r.status == TransitStatus::never_exited);
    CHECK(r.t_enter == doctest::Approx(6.0));
    CHECK(r.duration == doctest::Approx(4.0));
  }
  SUBCASE("missing positions count as outside") {
    FrontPath p;
    p.times = {0.0, 1.0, 2.0};
    p.positions = {std::nullopt, std::nullopt, std::nullopt};
    CHECK(trapping_time(p).status == TransitStatus::never_entered);
  }
}

TEST_CASE("trapping time uses the first exit") {
  // enters at 1, leaves at 3, re-enters later
  FrontPath p;
  p.times = {0.0, 2.0, 4.0, 6.0};
  p.positions = {-0.6, 0.0, 0.6, 0.0};
  const auto r = trapping_time(p, 0.3);
  REQUIRE(r.transited());
  CHECK(r.t_enter == doctest::Approx(1.0));
  CHECK(r.t_exit == doctest::Approx(3.0));
}

TEST_CASE("trapping time converges under refinement of a smooth path") {
  const auto x_of_t = [](double t) { return 0.5 * std::tanh(0.3 * (t - 10.0)) + 0.05 * (t - 10.0); };
  std::vector<double> durations;
  for (double dt : {0.8, 0.4, 0.2, 0.1, 0.05, 0.025}) {
    const auto r = trapping_time(sample_path(20.0, dt, x_of_t), 0.4);
    REQUIRE(r.transited());
    durations.push_back(r.duration);
  }
  for (std::size_t k = 2; k < durations.size(); ++k) {
    CHECK(std::abs(durations[k] - durations[k - 1]) <= std::abs(durations[k - 1] - durations[k - 2]) + 1e-12);
  }
  CHECK(std::abs(durations.back() - durations[durations.size() - 2]) < 1e-3);
}

TEST_CASE("fit_power_law recovers exact power laws") {
  SUBCASE("T = 3 / sqrt(eps)") {
    std::vector<std::pair<double, double>> pairs;
    for (double e : {0.1, 0.05, 0.025}) pairs.emplace_back(e, 3.0 / std::sqrt(e));
    const auto fit = fit_power_law(pairs);
    CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.exponent == doctest::Approx(-0.5).epsilon(1e-12));
    REQUIRE(fit.residuals.size() == 3);
    for (double r : fit.residuals) CHECK(std::abs(r) < 1e-12);
    CHECK(fit.epsilons == std::vector<double>{0.1, 0.05, 0.025});
    const auto fixed = fit_power_law(pairs, FitMode::fixed_exponent);
    CHECK(fixed.amplitude == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fixed.exponent == -0.5);
    CHECK(fixed.mode == FitMode::fixed_exponent);
  }
  SUBCASE("T = 2 / eps") {
    std::vector<std::pair<double, double>> pairs;
    for (double e : {0.1, 0.05, 0.025}) pairs.emplace_back(e, 2.0 / e);
    const auto fit = fit_power_law(pairs);
    CHECK(fit.exponent == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.amplitude == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("fit_power_law noiseless recovery over random laws") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> c_dist(0.1, 20.0), p_dist(-2.0, 2.0), e_dist(-6.0, 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = c_dist(rng), p = p_dist(rng);
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 5; ++k) {
      const double e = std::exp(e_dist(rng));
      pairs.emplace_back(e, c * std::pow(e, p));
    }
    const auto fit = fit_power_law(pairs);
    CHECK(fit.exponent == doctest::Approx(p).epsilon(1e-10));
    CHECK(fit.amplitude == doctest::Approx(c).epsilon(1e-10));
    CHECK(fit.residuals.size() == fit.epsilons.size());
  }
}

TEST_CASE("fit_power_law rejects bad input") {
  const std::vector<std::pair<double, double>> one{{0.1, 3.0}};
  CHECK_THROWS_AS(fit_power_law(one), std::invalid_argument);
  CHECK_NOTHROW(fit_power_law(one, FitMode::fixed_exponent));
  const std::vector<std::pair<double, double>> neg{{0.1, 3.0}, {-0.05, 4.0}};
  CHECK_THROWS_AS(fit_power_law(neg), std::invalid_argument);
  const std::vector<std::pair<double, double>> zero_t{{0.1, 3.0}, {0.05, 0.0}};
  CHECK_THROWS_AS(fit_power_law(zero_t), std::invalid_argument);
  const std::vector<std::pair<double, double>> same{{0.1, 3.0}, {0.1, 4.0}};
  CHECK_THROWS_AS(fit_power_law(same), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law(std::span<const std::pair<double, double>>{}, FitMode::fixed_exponent),
                  std::invalid_argument);
}

TEST_CASE("the default configuration advances monotonically before the turning point") {
  const Grid g = Grid::with_spacing(100.0, 0.4);
  const auto traj = simulate(g, make_quadratic_diffusion(0.1), logistic_reaction(),
                             FrontSpec{-35.0}, SolverConfig{0.01, 2.0, 5});
  const auto path = track_front(traj);
  for (std::size_t k = 2; k < path.positions.size(); ++k) {
    REQUIRE(path.positions[k].has_value());
    CHECK(*path.positions[k] >= *path.positions[k - 1]);
  }
}
