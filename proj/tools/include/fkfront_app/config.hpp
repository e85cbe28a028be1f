#pragma once

// Experiment configuration: INI-style sections of key = value pairs. Every key
// is optional and defaults to the reference configuration (L = 100,
// x_c(0) = -35, eps = 0.1, dx = 0.4, dt = 0.01). Unknown sections or keys are
// rejected.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fkfront/domain.hpp"
#include "fkfront/solver.hpp"

namespace fkfront::app {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class ProfileKind { quadratic, constant };

struct DomainConfig {
  double L = 100.0;
  std::size_t n = 501;
};

struct PhysicsConfig {
  double epsilon = 0.1;
  double x_c0 = -35.0;
  ProfileKind profile = ProfileKind::quadratic;
  double diffusion_constant = 1.0;  // used when profile = constant
  double level = 0.5;
};

struct SweepConfig {
  std::vector<double> epsilons{0.1, 0.05, 0.025, 0.0125};
  double trap_radius = 0.4;
  std::size_t workers = 1;
};

struct EigenConfig {
  std::size_t modes = 64;
  std::size_t export_modes = 4;
};

struct WkbConfig {
  std::vector<double> x0{-2.0, -1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0, 2.0};
  std::vector<double> htilde{1.0};
  std::vector<Branch> branches{Branch::plus, Branch::minus};
  double t_end = 1.0;
  double dt = 1e-3;
  std::size_t stride = 10;
};

struct SfaConfig {
  double speed = 2.0;
};

struct ExperimentConfig {
  DomainConfig domain;
  PhysicsConfig physics;
  SolverConfig solver;
  SweepConfig sweep;
  EigenConfig eigen;
  WkbConfig wkb;
  SfaConfig sfa;

  /// Throws ConfigError naming the first offending key.
  void validate() const;

  Grid grid() const;
  FrontSpec front() const;
  /// a(x) for the configured profile, with epsilon overridable for sweeps.
  DiffusionProfile diffusion() const;
  DiffusionProfile diffusion(double epsilon) const;

  /// Every effective setting as "section.key = value" lines in a fixed order.
  std::string canonical() const;
  /// 64-bit FNV-1a of canonical().
  std::uint64_t hash() const;
  std::string hash_hex() const;
  nlohmann::ordered_json to_json() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace fkfront::app
