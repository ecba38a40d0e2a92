#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "subplanck/decoherence.hpp"
#include "subplanck/numerics.hpp"
#include "subplanck/wigner.hpp"
#include "test_util.hpp"

using namespace subplanck;

TEST_CASE("decay parameter constructors") {
  const DecayParams a = DecayParams::from_kappa(2.0, 0.25);
  CHECK(std::abs(a.kt() - 0.5) < 1e-15);
  const DecayParams b = DecayParams::from_lifetime(4.0, 1.0);
  CHECK(std::abs(b.kt() - 0.25) < 1e-15);
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument,
                   DecayParams::from_kappa(-1.0, 1.0));
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument,
                   DecayParams::from_lifetime(0.0, 1.0));
}

TEST_CASE("no damping leaves the state pure") {
  const cplx alpha(2.0, 0.0);
  const auto compass = CoherentSuperposition::compass(alpha);
  const DensityMatrixFock rho =
      decohere_compass(alpha, DecayParams::from_kappa(1.0, 0.0));
  CHECK(std::abs(rho.trace_real() - 1.0) < 1e-10);
  CHECK(std::abs(purity(rho) - 1.0) < 1e-9);
  // <psi| rho |psi> = 1 for the undamped compass.
  const FockVector f = to_fock(compass, rho.cutoff);
  const Eigen::Map<const Eigen::VectorXcd> v(f.amplitudes.data(),
                                             rho.cutoff + 1);
  CHECK(std::abs((v.adjoint() * rho.matrix * v)(0, 0).real() - 1.0) < 1e-9);
}

TEST_CASE("complete damping relaxes to the vacuum") {
  const DensityMatrixFock rho =
      decohere_compass(1.5, DecayParams::from_kappa(1.0, 60.0));
  CHECK(std::abs(rho.matrix(0, 0).real() - 1.0) < 1e-8);
  CHECK(std::abs(purity(rho) - 1.0) < 1e-8);
}

TEST_CASE("damped state stays a physical density matrix") {
  for (double kt : {0.1, 1.0, 5.0}) {
    const DensityMatrixFock rho =
        decohere_compass(2.0, DecayParams::from_kappa(1.0, kt));
    CHECK(std::abs(rho.trace_real() - 1.0) < 1e-9);
    CHECK((rho.matrix - rho.matrix.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix);
    CHECK(solver.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("analytic damping matches RK4 integration of the master equation") {
  const cplx alpha(1.0, 0.0);
  for (double kt : {0.05, 0.3}) {
    const int cutoff = default_cutoff(std::abs(alpha));
    const DensityMatrixFock analytic =
        decohere_compass(alpha, DecayParams::from_kappa(1.0, kt), cutoff);
    const DensityMatrixFock start =
        pure_density(CoherentSuperposition::compass(alpha), cutoff);
    const DensityMatrixFock numeric = lindblad_rk4(start, 1.0, kt, 1e-3);
    CHECK(trace_distance(analytic, numeric) < 1e-6);
  }
}

TEST_CASE("opposite-pair dyad weight equals the coherence factor") {
  const cplx alpha(1.3, 0.7);
  const double kt = 0.4;
  const auto compass = CoherentSuperposition::compass(alpha);
  const DampedDyads d = damp_superposition(compass, kt);
  // Terms 0 and 2 are the opposite pair (alpha, -alpha).
  const cplx w0 = compass.terms()[0].weight;
  const cplx w2 = compass.terms()[2].weight;
  const cplx ratio = d.coeff(0, 2) / (w0 * std::conj(w2));
  CHECK(std::abs(std::abs(ratio) -
                 coherence_factor(alpha, DecayParams::from_kappa(1.0, kt))) <
        1e-13);

  // A two-component cat loses the same pair coherence at the same rate.
  const auto cat = CoherentSuperposition::cat(alpha);
  const DampedDyads dc = damp_superposition(cat, kt);
  const cplx cat_ratio =
      dc.coeff(0, 1) / (cat.terms()[0].weight * std::conj(cat.terms()[1].weight));
  CHECK(std::abs(std::abs(cat_ratio) - std::abs(ratio)) < 1e-13);
}

TEST_CASE("coherence factor limits") {
  const cplx alpha(2.0, 0.0);
  CHECK(std::abs(coherence_factor(alpha, DecayParams::from_kappa(1.0, 0.0)) -
                 1.0) < 1e-15);
  // Short-time limit e^{-2 |alpha|^2 kappa t}.
  const double kt = 1e-3;
  const double cf = coherence_factor(1.0, DecayParams::from_kappa(1.0, kt));
  CHECK(std::abs(cf - std::exp(-2.0 * kt)) / cf < 1e-3);
  CHECK(std::abs(coherence_factor(1.0, DecayParams::from_kappa(1.0, 0.5)) -
                 std::exp(-2.0 * (1.0 - std::exp(-0.5)))) < 1e-15);
}

TEST_CASE("compass lifetime scaling") {
  CHECK(std::abs(compass_lifetime(1.0, 1.0) - 0.5) < 1e-15);
  CHECK(std::abs(compass_lifetime(5.0, 1.0) - 0.02) < 1e-15);
  // Doubling the amplitude quarters the lifetime.
  CHECK(std::abs(compass_lifetime(2.0, 3.0) - compass_lifetime(1.0, 3.0) / 4.0) <
        1e-15);
  CHECK_FAILS_WITH(ErrorCode::kZeroAmplitude, compass_lifetime(0.0, 1.0));
}

TEST_CASE("purity of the damped compass at alpha = 2 (frozen fixture)") {
  const DensityMatrixFock rho =
      decohere_compass(2.0, DecayParams::from_kappa(1.0, 0.1), 60);
  CHECK(std::abs(purity(rho) - 0.5231541668170848) < 1e-8);
}

TEST_CASE("trace distance basics") {
  const DensityMatrixFock a = pure_density(CoherentSuperposition::coherent(1.0), 40);
  const DensityMatrixFock b = pure_density(CoherentSuperposition::coherent(-1.0), 40);
  CHECK(trace_distance(a, a) < 1e-12);
  // Pure states: T = sqrt(1 - |<a|b>|^2).
  const double f = std::norm(overlap(1.0, -1.0));
  CHECK(std::abs(trace_distance(a, b) - std::sqrt(1.0 - f)) < 1e-10);
  const DensityMatrixFock c = pure_density(CoherentSuperposition::coherent(1.0), 30);
  CHECK_FAILS_WITH(ErrorCode::kDimensionMismatch, trace_distance(a, c));
}

TEST_CASE("negativity volume decays monotonically") {
  const cplx alpha(2.0, 0.0);
  const auto compass = CoherentSuperposition::compass(alpha);
  const GridSpec spec = default_grid(std::abs(alpha));
  double prev = 1e300;
  for (double kt : {0.0, 0.2, 0.5, 1.0}) {
    const DampedDyads d = damp_superposition(compass, kt);
    const double neg =
        negativity_volume(wigner_grid_dyads(d.centers, d.coeff, spec));
    CHECK(neg < prev);
    prev = neg;
  }
}

TEST_CASE("undersized cutoffs are rejected") {
  CHECK_FAILS_WITH(ErrorCode::kCutoffTooSmall,
                   decohere_compass(3.0, DecayParams::from_kappa(1.0, 0.1), 6));
}
