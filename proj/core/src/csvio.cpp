#include "muskat/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace muskat {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {
std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}
}  // namespace

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  auto out = open_out(path);
  const std::size_t n = traj.snapshots.empty() ? 0 : traj.snapshots[0].size();
  out << "time";
  for (std::size_t j = 0; j < n; ++j) out << ",x_" << j;
  out << "\n";
  for (std::size_t t = 0; t < traj.snapshots.size(); ++t) {
    out << format_double(traj.times[t]);
    for (std::size_t j = 0; j < n; ++j) out << ',' << format_double(traj.snapshots[t][j]);
    out << "\n";
  }
}

void write_diagnostics_csv(const std::filesystem::path& path, const Trajectory& traj) {
  auto out = open_out(path);
  out << "time,sup_norm,lip_seminorm,l2_norm,dn_pairing,theta_l2\n";
  for (const DiagnosticsRecord& r : traj.diagnostics) {
    out << format_double(r.time) << ',' << format_double(r.sup_norm) << ','
        << format_double(r.lip_seminorm) << ',' << format_double(r.l2_norm) << ','
        << format_double(r.dn_pairing) << ',' << format_double(r.theta_l2) << "\n";
  }
}

void write_cauchy_csv(const std::filesystem::path& path,
                      const std::vector<double>& eps_list, const CauchyReport& report) {
  auto out = open_out(path);
  out << "j,eps_j,eps_j1,d_j\n";
  for (std::size_t j = 0; j < report.d.size(); ++j) {
    out << j << ',' << format_double(eps_list[j]) << ',' << format_double(eps_list[j + 1])
        << ',' << format_double(report.d[j]) << "\n";
  }
}

void write_spectrum_csv(const std::filesystem::path& path, const std::vector<SpectrumRow>& rows) {
  auto out = open_out(path);
  out << "mode,fitted_rate,reference_rate,ratio\n";
  for (const SpectrumRow& r : rows) {
    const double ratio = r.reference_rate != 0.0 ? r.fitted_rate / r.reference_rate
                                                 : std::nan("");
    out << r.mode << ',' << format_double(r.fitted_rate) << ','
        << format_double(r.reference_rate) << ',' << format_double(ratio) << "\n";
  }
}

}  // namespace muskat
