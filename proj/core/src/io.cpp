#include "fkfront/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace fkfront::io {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::string format_real(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string{};
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
  for (std::string_view name : header) cell(name);
  end_row();
}

void CsvWriter::separator() {
  if (filled_ > 0) out_ << ',';
  ++filled_;
}

CsvWriter& CsvWriter::cell(double value) {
  separator();
  out_ << format_real(value);
  return *this;
}

CsvWriter& CsvWriter::cell(const std::optional<double>& value) {
  separator();
  out_ << format_real(value);
  return *this;
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  separator();
  out_ << text;
  return *this;
}

CsvWriter& CsvWriter::cell(long long value) {
  separator();
  out_ << value;
  return *this;
}

void CsvWriter::end_row() {
  if (filled_ != columns_) {
    throw std::logic_error("CsvWriter: row has " + std::to_string(filled_) +
                           " cells, header has " + std::to_string(columns_));
  }
  out_ << '\n';
  filled_ = 0;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  CsvWriter csv(out, {"t", "x", "u"});
  for (const Field& f : traj.fields) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      csv.cell(f.time).cell(f.grid.x(i)).cell(f.values[i]).end_row();
    }
  }
}

void write_front_path_csv(std::ostream& out, const FrontPath& path) {
  CsvWriter csv(out, {"t", "x_c"});
  for (std::size_t k = 0; k < path.times.size(); ++k) {
    csv.cell(path.times[k]).cell(path.positions[k]).end_row();
  }
}

void write_eigenvalues_csv(std::ostream& out, const EigenSystem& eig) {
  CsvWriter csv(out, {"n", "lambda"});
  for (std::size_t n = 0; n < eig.count(); ++n) {
    csv.cell(static_cast<long long>(n)).cell(eig.eigenvalues[n]).end_row();
  }
}

void write_mode_csv(std::ostream& out, const EigenSystem& eig, std::size_t n) {
  const auto& phi = eig.eigenfunctions.at(n);
  CsvWriter csv(out, {"x", "phi"});
  for (std::size_t i = 0; i < phi.size(); ++i) {
    csv.cell(eig.grid.x(i)).cell(phi[i]).end_row();
  }
}

std::string fit_report_json(const FitReport& report) {
  nlohmann::ordered_json j;
  j["C"] = report.amplitude;
  j["p"] = report.exponent;
  j["residuals"] = report.residuals;
  j["epsilons"] = report.epsilons;
  j["mode"] = to_string(report.mode);
  return j.dump(2);
}

}  // namespace fkfront::io
