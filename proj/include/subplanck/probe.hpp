#pragma once

#include "subplanck/states.hpp"

namespace subplanck {

struct DetectionProbs {
  double g_to_g = 1.0;
  double g_to_e = 0.0;
};

// Resonant-probe detection probabilities for an atom entering in |g>:
// P_{g->g} = sum_n p(n) cos^2(g t sqrt(n)), P_{g->e} the sine partner.
DetectionProbs resonant_detection_probs(const CoherentSuperposition& field,
                                        double g, double t, int cutoff = -1);

// |e>-entry variant; Rabi frequencies shift to sqrt(n + 1).
DetectionProbs resonant_detection_probs_excited(
    const CoherentSuperposition& field, double g, double t, int cutoff = -1);

struct RevivalTrace {
  std::vector<double> times;
  std::vector<double> p_gg;
  std::vector<double> p_ge;
};

RevivalTrace revival_trace(const CoherentSuperposition& field, double g,
                           double t_max, int samples, int cutoff = -1);

// Moving-RMS envelope window as a fraction of the trace length.
inline constexpr double kEnvelopeWindowFraction = 0.05;

// Time of the first post-collapse peak of the Rabi envelope.
double revival_time_estimate(const RevivalTrace& trace);

}  // namespace subplanck
