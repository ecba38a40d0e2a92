#include "subplanck/io.hpp"

#include <cstdio>
#include <fstream>

namespace subplanck {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIoFailure, "cannot open " + path + " for writing");
  return out;
}

}  // namespace

void write_grid_csv(const PhaseSpaceGrid& g, const std::string& path) {
  auto out = open_out(path);
  out << "x,p,w\n";
  for (int i = 0; i < g.spec.nx; ++i)
    for (int j = 0; j < g.spec.np; ++j)
      out << format_double(g.x(i)) << ',' << format_double(g.p(j)) << ','
          << format_double(g.value(i, j)) << '\n';
}

void write_scan_csv(const std::vector<ScanPoint>& points,
                    const std::string& path) {
  auto out = open_out(path);
  out << "theta1,theta2,P\n";
  for (const auto& pt : points)
    out << format_double(pt.theta1) << ',' << format_double(pt.theta2) << ','
        << format_double(pt.p) << '\n';
}

void write_decay_csv(const std::vector<DecaySample>& samples,
                     const std::string& path) {
  auto out = open_out(path);
  out << "kappa_t,coherence_factor,purity,negativity_volume\n";
  for (const auto& s : samples)
    out << format_double(s.kappa_t) << ',' << format_double(s.coherence_factor)
        << ',' << format_double(s.purity) << ','
        << format_double(s.negativity_volume) << '\n';
}

void write_probe_csv(const RevivalTrace& trace, double g,
                     const std::string& path) {
  auto out = open_out(path);
  out << "gt,P_gg,P_ge\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i)
    out << format_double(g * trace.times[i]) << ','
        << format_double(trace.p_gg[i]) << ',' << format_double(trace.p_ge[i])
        << '\n';
}

void write_json(const nlohmann::json& j, const std::string& path) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace subplanck
