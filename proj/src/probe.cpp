#include "subplanck/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subplanck {

namespace {

DetectionProbs probs_with_frequency(const CoherentSuperposition& field,
                                    double g, double t, int cutoff,
                                    bool excited_entry) {
  if (g < 0.0 || t < 0.0)
    fail(ErrorCode::kInvalidArgument, "g and t must be >= 0");
  if (!(std::abs(norm_squared(field) - 1.0) < 1e-9))
    fail(ErrorCode::kNotNormalized, "probe field must be normalized");
  if (cutoff < 0) cutoff = default_cutoff(field);
  const FockVector f = to_fock(field, cutoff);
  if (!f.cutoff_adequate)
    fail(ErrorCode::kCutoffTooSmall, "probe field leaks past the cutoff");
  double stay = 0.0, flip = 0.0, total = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    const double pn = std::norm(f.amplitudes[n]);
    const double freq = excited_entry ? std::sqrt(n + 1.0) : std::sqrt(n);
    const double c = std::cos(g * t * freq);
    stay += pn * c * c;
    flip += pn * (1.0 - c * c);
    total += pn;
  }
  // Truncated tail is redistributed proportionally so the pair sums to 1.
  return {stay / total, flip / total};
}

}  // namespace

DetectionProbs resonant_detection_probs(const CoherentSuperposition& field,
                                        double g, double t, int cutoff) {
  return probs_with_frequency(field, g, t, cutoff, false);
}

DetectionProbs resonant_detection_probs_excited(
    const CoherentSuperposition& field, double g, double t, int cutoff) {
  return probs_with_frequency(field, g, t, cutoff, true);
}

RevivalTrace revival_trace(const CoherentSuperposition& field, double g,
                           double t_max, int samples, int cutoff) {
  if (samples < 2)
    fail(ErrorCode::kInvalidArgument, "need at least 2 samples");
  if (cutoff < 0) cutoff = default_cutoff(field);
  const FockVector f = to_fock(field, cutoff);
  if (!f.cutoff_adequate)
    fail(ErrorCode::kCutoffTooSmall, "probe field leaks past the cutoff");
  std::vector<double> pn(f.amplitudes.size());
  for (std::size_t n = 0; n < pn.size(); ++n) pn[n] = std::norm(f.amplitudes[n]);
  const double total = std::accumulate(pn.begin(), pn.end(), 0.0);

  RevivalTrace tr;
  tr.times.resize(samples);
  tr.p_gg.resize(samples);
  tr.p_ge.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = t_max * i / (samples - 1);
    double stay = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
      const double c = std::cos(g * t * std::sqrt(static_cast<double>(n)));
      stay += pn[n] * c * c;
    }
    tr.times[i] = t;
    tr.p_gg[i] = stay / total;
    tr.p_ge[i] = 1.0 - stay / total;
  }
  return tr;
}

double revival_time_estimate(const RevivalTrace& trace) {
  const int n = static_cast<int>(trace.times.size());
  if (n < 8) fail(ErrorCode::kNoRevivalFound, "trace too short");
  const int window = std::max(3, static_cast<int>(kEnvelopeWindowFraction * n));

  // Moving-RMS envelope of the oscillation about 1/2.
  std::vector<double> env(n);
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - window / 2);
    const int hi = std::min(n - 1, i + window / 2);
    double acc = 0.0;
    for (int j = lo; j <= hi; ++j) {
      const double s = trace.p_gg[j] - 0.5;
      acc += s * s;
    }
    env[i] = std::sqrt(acc / (hi - lo + 1));
  }

  double e0 = 0.0;
  for (int i = 0; i <= std::min(n - 1, window); ++i) e0 = std::max(e0, env[i]);
  const double threshold = 0.5 * e0;

  int collapse = -1;
  for (int i = 0; i < n; ++i)
    if (env[i] < threshold) {
      collapse = i;
      break;
    }
  if (collapse < 0)
    fail(ErrorCode::kNoRevivalFound, "no collapse found in the trace");

  int rise = -1;
  for (int i = collapse; i < n; ++i)
    if (env[i] >= threshold) {
      rise = i;
      break;
    }
  if (rise < 0)
    fail(ErrorCode::kNoRevivalFound, "no revival found after the collapse");

  // Peak of the first lobe above threshold.
  int peak = rise;
  for (int i = rise; i < n && env[i] >= threshold; ++i)
    if (env[i] > env[peak]) peak = i;
  return trace.times[peak];
}

}  // namespace subplanck
