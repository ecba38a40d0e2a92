#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "subplanck/numerics.hpp"
#include "subplanck/probe.hpp"
#include "test_util.hpp"

using namespace subplanck;

namespace {

std::mt19937 rng(97531);

cplx random_point(double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("probe probabilities at t = 0 and on the vacuum") {
  const auto compass = CoherentSuperposition::compass(2.0);
  const DetectionProbs start = resonant_detection_probs(compass, 1.0, 0.0);
  CHECK(std::abs(start.g_to_g - 1.0) < 1e-14);
  CHECK(std::abs(start.g_to_e) < 1e-14);

  // |g, 0> is dark at resonance: the atom never flips.
  const auto vac = CoherentSuperposition::coherent(0.0);
  for (double t : {0.5, 3.0, 20.0}) {
    const DetectionProbs p = resonant_detection_probs(vac, 1.0, t);
    CHECK(std::abs(p.g_to_g - 1.0) < 1e-14);
  }

  // An excited atom in the vacuum Rabi-flops at frequency g.
  const DetectionProbs pe = resonant_detection_probs_excited(vac, 1.0, 0.7);
  CHECK(std::abs(pe.g_to_g - std::cos(0.7) * std::cos(0.7)) < 1e-14);
}

TEST_CASE("detection probabilities sum to one") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto field = CoherentSuperposition::cat(random_point(2.0));
    std::uniform_real_distribution<double> u(0.0, 10.0);
    const DetectionProbs p = resonant_detection_probs(field, 1.0, u(rng));
    CHECK(std::abs(p.g_to_g + p.g_to_e - 1.0) < 1e-12);
    CHECK(p.g_to_g >= 0.0);
    CHECK(p.g_to_e >= 0.0);
  }
}

TEST_CASE("probe probabilities match exact atom-field propagation") {
  const auto compass = CoherentSuperposition::compass(2.0);
  const int cutoff = default_cutoff(compass);
  const FockVector f = to_fock(compass, cutoff);
  for (double t : {0.4, 1.57, 5.0}) {
    // Start in |g>, propagate at resonance, read the |g> population.
    const JointAtomField out =
        jc_propagate(f, AtomState{0.0, 1.0}, 1.0, 0.0, t);
    const double p_exact = out.g_part.squaredNorm();
    const DetectionProbs p = resonant_detection_probs(compass, 1.0, t, cutoff);
    CHECK(std::abs(p.g_to_g - p_exact) < 1e-10);
  }
}

TEST_CASE("probe rejects unnormalized fields and tight cutoffs") {
  CHECK_FAILS_WITH(
      ErrorCode::kNotNormalized,
      resonant_detection_probs(CoherentSuperposition::compass(1.0).scaled(0.7),
                               1.0, 1.0));
  CHECK_FAILS_WITH(ErrorCode::kCutoffTooSmall,
                   resonant_detection_probs(CoherentSuperposition::coherent(3.0),
                                            1.0, 1.0, 4));
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument,
                   resonant_detection_probs(CoherentSuperposition::coherent(1.0),
                                            -1.0, 1.0));
}

TEST_CASE("revival trace endpoints agree with single-time evaluations") {
  const auto cat = CoherentSuperposition::cat(2.0);
  const RevivalTrace tr = revival_trace(cat, 1.0, 10.0, 101);
  REQUIRE(tr.times.size() == 101);
  CHECK(std::abs(tr.p_gg.front() - 1.0) < 1e-14);
  const DetectionProbs end = resonant_detection_probs(cat, 1.0, 10.0);
  CHECK(std::abs(tr.p_gg.back() - end.g_to_g) < 1e-12);
  CHECK(std::abs(tr.p_gg[50] + tr.p_ge[50] - 1.0) < 1e-14);
}

TEST_CASE("coherent-state revival appears near 2 pi alpha / g") {
  const double a = 4.0, g = 1.0;
  const RevivalTrace tr = revival_trace(CoherentSuperposition::coherent(a), g,
                                        2.0 * M_PI * a * 1.3, 4096);
  const double t_rev = revival_time_estimate(tr);
  CHECK(std::abs(t_rev - 2.0 * M_PI * a / g) < 0.2 * 2.0 * M_PI * a / g);
}

TEST_CASE("revival ordering: compass earliest, coherent latest") {
  const double a = 4.0, g = 1.0, t_max = 2.0 * M_PI * a * 1.3;
  const double t_compass = revival_time_estimate(
      revival_trace(CoherentSuperposition::compass(a), g, t_max, 4096));
  const double t_cat = revival_time_estimate(
      revival_trace(CoherentSuperposition::cat(a), g, t_max, 4096));
  const double t_coherent = revival_time_estimate(
      revival_trace(CoherentSuperposition::coherent(a), g, t_max, 4096));
  CHECK(t_compass < t_cat);
  CHECK(t_cat < t_coherent);
}

TEST_CASE("revival estimation failure modes") {
  RevivalTrace flat;
  for (int i = 0; i < 256; ++i) {
    flat.times.push_back(0.1 * i);
    flat.p_gg.push_back(1.0);
    flat.p_ge.push_back(0.0);
  }
  CHECK_FAILS_WITH(ErrorCode::kNoRevivalFound, revival_time_estimate(flat));

  RevivalTrace tiny;
  tiny.times = {0.0, 1.0};
  tiny.p_gg = {1.0, 0.5};
  tiny.p_ge = {0.0, 0.5};
  CHECK_FAILS_WITH(ErrorCode::kNoRevivalFound, revival_time_estimate(tiny));

  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument,
                   revival_trace(CoherentSuperposition::coherent(1.0), 1.0,
                                 1.0, 1));
}
