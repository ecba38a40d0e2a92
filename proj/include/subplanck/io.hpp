#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "subplanck/probe.hpp"
#include "subplanck/wigner.hpp"

namespace subplanck {

// 17-significant-digit, locale-independent decimal formatting.
std::string format_double(double v);

// Grid CSV, header "x,p,w", row-major with x outer.
void write_grid_csv(const PhaseSpaceGrid& g, const std::string& path);

// Fringe-scan CSV, header "theta1,theta2,P".
struct ScanPoint {
  double theta1;
  double theta2;
  double p;
};
void write_scan_csv(const std::vector<ScanPoint>& points,
                    const std::string& path);

// Decay-curve CSV, header "kappa_t,coherence_factor,purity,negativity_volume".
struct DecaySample {
  double kappa_t;
  double coherence_factor;
  double purity;
  double negativity_volume;
};
void write_decay_csv(const std::vector<DecaySample>& samples,
                     const std::string& path);

// Probe-trace CSV, header "gt,P_gg,P_ge".
void write_probe_csv(const RevivalTrace& trace, double g,
                     const std::string& path);

void write_json(const nlohmann::json& j, const std::string& path);

}  // namespace subplanck
