#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "subplanck/errors.hpp"

namespace subplanck {

using cplx = std::complex<double>;

// <beta|alpha> for two coherent states.
cplx overlap(cplx alpha, cplx beta);

struct CoherentTerm {
  cplx weight;
  cplx center;
};

// Finite superposition of coherent states, sum_j w_j |alpha_j>.
// Weights are stored unmerged; identical centers are not coalesced.
class CoherentSuperposition {
 public:
  explicit CoherentSuperposition(std::vector<CoherentTerm> terms,
                                 bool normalized = false);

  static CoherentSuperposition coherent(cplx alpha);
  // N0 (|alpha> + |-alpha>)
  static CoherentSuperposition cat(cplx alpha);
  // N (|alpha> + |i alpha> + |-alpha> + |-i alpha>)
  static CoherentSuperposition compass(cplx alpha);

  const std::vector<CoherentTerm>& terms() const { return terms_; }
  bool is_normalized() const { return normalized_; }
  std::size_t size() const { return terms_.size(); }
  double max_center_magnitude() const;

  CoherentSuperposition scaled(cplx factor) const;
  // Phase-space rotation: every center is multiplied by e^{i angle}.
  CoherentSuperposition rotated(double angle) const;

 private:
  std::vector<CoherentTerm> terms_;
  bool normalized_;
};

struct FockVector {
  std::vector<cplx> amplitudes;  // length cutoff + 1
  int cutoff = 0;
  // False when the truncated norm fell below 1 - 1e-6 of the exact norm.
  bool cutoff_adequate = true;

  double norm() const;
};

struct DensityMatrixFock {
  Eigen::MatrixXcd matrix;
  int cutoff = 0;

  double trace_real() const { return matrix.trace().real(); }
};

// <a|b> from pairwise coherent overlaps.
cplx inner_product(const CoherentSuperposition& a,
                   const CoherentSuperposition& b);

double norm_squared(const CoherentSuperposition& s);

CoherentSuperposition normalize(const CoherentSuperposition& s);

// Number-basis amplitudes of a single coherent state |alpha>.
std::vector<cplx> coherent_fock_amplitudes(cplx alpha, int cutoff);

FockVector to_fock(const CoherentSuperposition& s, int cutoff);

std::vector<double> photon_distribution(const CoherentSuperposition& s,
                                        int cutoff);

double fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b);

// Poisson-tail cutoff rule: ceil(m^2 + 10 sqrt(m^2+1) + 20) for the largest
// center magnitude m.
int default_cutoff(double alpha_max);
int default_cutoff(const CoherentSuperposition& s);

}  // namespace subplanck
