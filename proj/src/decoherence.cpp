#include "subplanck/decoherence.hpp"

#include <cmath>

namespace subplanck {

DecayParams DecayParams::from_kappa(double kappa, double t) {
  if (kappa < 0.0 || t < 0.0)
    fail(ErrorCode::kInvalidArgument, "kappa and t must be >= 0");
  return {kappa, t};
}

DecayParams DecayParams::from_lifetime(double t_c, double t) {
  if (!(t_c > 0.0))
    fail(ErrorCode::kInvalidArgument, "cavity lifetime must be > 0");
  return from_kappa(1.0 / t_c, t);
}

DampedDyads damp_superposition(const CoherentSuperposition& s, double kt) {
  const double decay = 1.0 - std::exp(-kt);
  const double shrink = std::exp(-0.5 * kt);
  const auto n = static_cast<Eigen::Index>(s.size());
  DampedDyads d;
  d.centers.resize(n);
  d.coeff.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    d.centers[j] = s.terms()[j].center * shrink;
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx aj = s.terms()[j].center;
    for (Eigen::Index k = 0; k < n; ++k) {
      const cplx ak = s.terms()[k].center;
      const cplx exponent =
          (std::conj(ak) * aj - 0.5 * (std::norm(aj) + std::norm(ak))) * decay;
      d.coeff(j, k) = s.terms()[j].weight * std::conj(s.terms()[k].weight) *
                      std::exp(exponent);
    }
  }
  return d;
}

DensityMatrixFock dyads_to_fock(const DampedDyads& d, int cutoff) {
  const auto n = static_cast<Eigen::Index>(d.centers.size());
  const int dim = cutoff + 1;
  std::vector<Eigen::VectorXcd> vecs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto a = coherent_fock_amplitudes(d.centers[j], cutoff);
    vecs[j] = Eigen::Map<const Eigen::VectorXcd>(a.data(), dim);
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      rho += d.coeff(j, k) * (vecs[j] * vecs[k].adjoint());
  return {rho, cutoff};
}

DensityMatrixFock decohere_compass(cplx alpha, const DecayParams& params,
                                   int cutoff) {
  const auto compass = CoherentSuperposition::compass(alpha);
  if (cutoff < 0) cutoff = default_cutoff(compass);
  const DensityMatrixFock rho =
      dyads_to_fock(damp_superposition(compass, params.kt()), cutoff);
  if (rho.trace_real() < 1.0 - 1e-6)
    fail(ErrorCode::kCutoffTooSmall, "damped compass leaks past the cutoff");
  return rho;
}

double coherence_factor(cplx alpha, const DecayParams& params) {
  return std::exp(-2.0 * std::norm(alpha) * (1.0 - std::exp(-params.kt())));
}

double compass_lifetime(cplx alpha, double t_c) {
  if (!(std::abs(alpha) > 0.0))
    fail(ErrorCode::kZeroAmplitude, "lifetime needs a nonzero amplitude");
  return t_c / (2.0 * std::norm(alpha));
}

double purity(const DensityMatrixFock& rho) {
  return (rho.matrix * rho.matrix).trace().real();
}

double trace_distance(const DensityMatrixFock& a, const DensityMatrixFock& b) {
  if (a.cutoff != b.cutoff)
    fail(ErrorCode::kDimensionMismatch, "trace distance needs equal cutoffs");
  const Eigen::MatrixXcd diff = a.matrix - b.matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

DensityMatrixFock pure_density(const CoherentSuperposition& s, int cutoff) {
  const FockVector f = to_fock(s, cutoff);
  const Eigen::Map<const Eigen::VectorXcd> v(f.amplitudes.data(), cutoff + 1);
  return {v * v.adjoint(), cutoff};
}

}  // namespace subplanck
