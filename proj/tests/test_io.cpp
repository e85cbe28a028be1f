#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fkfront/io.hpp"

using namespace fkfront;

TEST_CASE("real formatting") {
  CHECK(io::format_real(0.5) == "0.5");
  CHECK(io::format_real(-35.0) == "-35");
  CHECK(io::format_real(1.0 / 3.0) == "0.333333333333333");
  CHECK(io::format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(io::format_real(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(io::format_real(std::optional<double>{}) == "");
  CHECK(io::format_real(std::optional<double>{2.25}) == "2.25");
}

TEST_CASE("csv writer enforces the column count") {
  std::ostringstream out;
  io::CsvWriter csv(out, {"a", "b"});
  csv.cell(1.5).cell(std::optional<double>{}).end_row();
  csv.cell(7LL).cell("x").end_row();
  CHECK(out.str() == "a,b\n1.5,\n7,x\n");
  csv.cell(1.0);
  CHECK_THROWS_AS(csv.end_row(), std::logic_error);
}

TEST_CASE("trajectory and front path exports") {
  const Grid g(1.0, 3);
  Trajectory traj;
  traj.fields.push_back(Field{g, {1.0, 0.5, 0.0}, 0.0});
  traj.fields.push_back(Field{g, {1.0, 0.75, 0.25}, 0.1});
  std::ostringstream t;
  io::write_trajectory_csv(t, traj);
  CHECK(t.str() == "t,x,u\n0,-1,1\n0,0,0.5\n0,1,0\n0.1,-1,1\n0.1,0,0.75\n0.1,1,0.25\n");

  FrontPath path;
  path.times = {0.0, 0.5};
  path.positions = {-0.5, std::nullopt};
  std::ostringstream p;
  io::write_front_path_csv(p, path);
  CHECK(p.str() == "t,x_c\n0,-0.5\n0.5,\n");
}

TEST_CASE("eigen exports") {
  const Grid g(1.0, 3);
  EigenSystem eig{g, {0.0, -2.5}, {{0.5, 0.5, 0.5}, {1.0, 0.0, -1.0}}};
  std::ostringstream values, mode;
  io::write_eigenvalues_csv(values, eig);
  io::write_mode_csv(mode, eig, 1);
  CHECK(values.str() == "n,lambda\n0,0\n1,-2.5\n");
  CHECK(mode.str() == "x,phi\n-1,1\n0,0\n1,-1\n");
  CHECK_THROWS_AS(io::write_mode_csv(mode, eig, 2), std::out_of_range);
}

TEST_CASE("fit report json") {
  FitReport r;
  r.amplitude = 3.0;
  r.exponent = -0.5;
  r.residuals = {0.0, 0.1};
  r.epsilons = {0.1, 0.05};
  r.mode = FitMode::fixed_exponent;
  const auto j = nlohmann::json::parse(io::fit_report_json(r));
  CHECK(j["C"] == 3.0);
  CHECK(j["p"] == -0.5);
  CHECK(j["residuals"].size() == 2);
  CHECK(j["epsilons"][1] == 0.05);
  CHECK(j["mode"] == "fixed_exponent");
}
