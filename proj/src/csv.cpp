#include "fracl/csv.hpp"

#include <cstdio>

namespace fracl {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void append_snapshot_rows(std::ostream& out, double t, const SignedCdf& cdf) {
  std::string ts = format_double(t);
  for (std::size_t i = 0; i < cdf.breakpoints.size(); ++i)
    out << ts << ',' << format_double(cdf.breakpoints[i]) << ','
        << format_double(cdf.cumulative[i]) << '\n';
}

void write_snapshot_csv(std::ostream& out,
                        const std::vector<std::pair<double, SignedCdf>>& snaps) {
  out << "t,x,cdf_value\n";
  for (const auto& [t, cdf] : snaps) append_snapshot_rows(out, t, cdf);
}

void write_kill_header(std::ostream& out) { out << "t,x_i,x_j,sign_i,sign_j\n"; }

void append_kill_rows(std::ostream& out, const KillReport& report) {
  for (const KillEvent& e : report.pairs)
    out << format_double(e.t) << ',' << format_double(e.xi) << ',' << format_double(e.xj)
        << ',' << e.si << ',' << e.sj << '\n';
}

void write_error_header(std::ostream& out) {
  out << "N,h,eps,sigma,alpha,seed,t,weighted_l1\n";
}

void append_error_rows(std::ostream& out, const ErrorReport& report) {
  const ErrorMeta& m = report.meta;
  std::string prefix = std::to_string(m.n) + ',' + format_double(m.h) + ',' +
                       format_double(m.eps) + ',' + format_double(m.sigma) + ',' +
                       format_double(m.alpha) + ',' + std::to_string(m.seed) + ',';
  for (const auto& [t, e] : report.per_time)
    out << prefix << format_double(t) << ',' << format_double(e) << '\n';
  out << prefix << "integrated," << format_double(report.integrated) << '\n';
}

void write_slope_csv(std::ostream& out, const std::vector<SlopePoint>& points) {
  out << "scale,error_mean,error_stderr\n";
  for (const SlopePoint& p : points)
    out << format_double(p.scale) << ',' << format_double(p.error_mean) << ','
        << format_double(p.error_stderr) << '\n';
}

}  // namespace fracl
