#pragma once

#include "subplanck/protocol_types.hpp"
#include "subplanck/states.hpp"

namespace subplanck {

// Joint state of a two-level atom and the truncated field mode.
struct JointAtomField {
  Eigen::VectorXcd e_part;
  Eigen::VectorXcd g_part;
  int cutoff = 0;

  double norm() const;
  cplx inner(const JointAtomField& other) const;
};

JointAtomField make_joint(const FockVector& field, const AtomState& atom);

// Exact propagation under H = delta a^dag a + g (sigma+ a + sigma- a^dag),
// solved per excitation manifold by 2x2 diagonalization.
JointAtomField jc_propagate(const FockVector& field, const AtomState& atom,
                            double g, double delta, double tau);

// Dispersive-limit phase map: |g,n> -> e^{-i n (phi0 + delta) tau} |g,n>,
// |e,n> -> e^{i (n+1) phi0 tau - i n delta tau} |e,n>.
JointAtomField dispersive_effective_map(const FockVector& field,
                                        const AtomState& atom, double phi0,
                                        double delta, double tau);

// Fixed-step RK4 integration of the zero-temperature damping master equation
// rho' = -(kappa/2)(a^dag a rho - 2 a rho a^dag + rho a^dag a).
DensityMatrixFock lindblad_rk4(const DensityMatrixFock& rho0, double kappa,
                               double t, double dt);

// Matrix elements of D(gamma) in the number basis, log-Gamma stabilized.
Eigen::MatrixXcd displacement_matrix(cplx gamma, int cutoff);

}  // namespace subplanck
