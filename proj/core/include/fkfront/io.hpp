#pragma once

// Plain-text exports: comma-separated with a header row, LF line endings,
// reals printed with 15 significant digits, missing values as empty fields.

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fkfront/front.hpp"
#include "fkfront/solver.hpp"
#include "fkfront/spectral.hpp"

namespace fkfront::io {

/// %.15g, with "nan" / "inf" / "-inf" for non-finite values.
std::string format_real(double value);
std::string format_real(const std::optional<double>& value);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

  CsvWriter& cell(double value);
  CsvWriter& cell(const std::optional<double>& value);
  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(long long value);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

/// Long format `t,x,u`.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// `t,x_c`.
void write_front_path_csv(std::ostream& out, const FrontPath& path);

/// `n,lambda`.
void write_eigenvalues_csv(std::ostream& out, const EigenSystem& eig);

/// `x,phi` for mode n.
void write_mode_csv(std::ostream& out, const EigenSystem& eig, std::size_t n);

/// {"C", "p", "residuals", "epsilons", "mode"} as pretty-printed JSON.
std::string fit_report_json(const FitReport& report);

}  // namespace fkfront::io
