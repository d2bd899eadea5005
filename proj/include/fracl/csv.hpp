#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fracl/analysis.hpp"
#include "fracl/particle_system.hpp"

namespace fracl {

/// Full-precision decimal formatting (17 significant digits) so equal doubles
/// produce byte-identical files.
std::string format_double(double x);

void write_snapshot_csv(std::ostream& out, const std::vector<std::pair<double, SignedCdf>>& snaps);
void append_snapshot_rows(std::ostream& out, double t, const SignedCdf& cdf);

void write_kill_header(std::ostream& out);
void append_kill_rows(std::ostream& out, const KillReport& report);

void write_error_header(std::ostream& out);
void append_error_rows(std::ostream& out, const ErrorReport& report);

struct SlopePoint {
  double scale;
  double error_mean;
  double error_stderr;
};
void write_slope_csv(std::ostream& out, const std::vector<SlopePoint>& points);

}  // namespace fracl
