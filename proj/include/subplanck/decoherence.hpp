#pragma once

#include "subplanck/states.hpp"

namespace subplanck {

// Zero-temperature cavity damping parameters. kappa = 1 / t_c.
struct DecayParams {
  double kappa = 0.0;
  double t = 0.0;

  static DecayParams from_kappa(double kappa, double t);
  static DecayParams from_lifetime(double t_c, double t);

  double kt() const { return kappa * t; }
};

// Coherent-dyad representation of a damped superposition:
// rho = sum_{jk} coeff(j,k) |centers[j]><centers[k]|.
struct DampedDyads {
  std::vector<cplx> centers;
  Eigen::MatrixXcd coeff;
};

// Exact amplitude-damping map applied to an initial pure superposition:
// centers shrink by e^{-kt/2}, dyad weights pick up
// exp[(conj(a_k) a_j - (|a_j|^2 + |a_k|^2)/2)(1 - e^{-kt})].
DampedDyads damp_superposition(const CoherentSuperposition& s, double kt);

DensityMatrixFock dyads_to_fock(const DampedDyads& d, int cutoff);

// Analytic damped compass state in the truncated number basis.
DensityMatrixFock decohere_compass(cplx alpha, const DecayParams& params,
                                   int cutoff = -1);

// e^{-2|alpha|^2 (1 - e^{-kt})}, the opposite-pair coherence weight.
double coherence_factor(cplx alpha, const DecayParams& params);

// t_c / (2 |alpha|^2)
double compass_lifetime(cplx alpha, double t_c);

double purity(const DensityMatrixFock& rho);

// Half the absolute-eigenvalue sum of the difference.
double trace_distance(const DensityMatrixFock& a, const DensityMatrixFock& b);

DensityMatrixFock pure_density(const CoherentSuperposition& s, int cutoff);

}  // namespace subplanck
