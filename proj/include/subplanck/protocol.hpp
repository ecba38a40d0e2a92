#pragma once

#include <utility>
#include <vector>

#include "subplanck/protocol_types.hpp"

namespace subplanck {

enum class AtomLabel { e, g };

// One branch of the entangled atoms+field state: the atoms in a definite
// label string, the field in a single coherent term.
struct Branch {
  std::vector<AtomLabel> labels;
  cplx weight;
  cplx center;
};

struct AtomFieldState {
  std::vector<Branch> branches;

  std::size_t atom_count() const;
  double norm() const;
};

// All phases of the two-atom preparation sequence, in radians.
struct ProtocolConfig {
  cplx alpha = 1.0;
  double phi = M_PI / 4.0;
  double phi_prime = M_PI / 2.0;
  double delta_tau = 0.0;
  double delta_tau_prime = 0.0;
  double eta_A = 0.0, theta_A = 0.0;
  double eta_B = 0.0, theta_B = 0.0;
  double eta_A_prime = 0.0, theta_A_prime = 0.0;
  double eta_B_prime = 0.0, theta_B_prime = 0.0;

  // Ramsey phase differences entering the conditional state.
  double eta1() const { return eta_A - eta_A_prime; }
  double eta2() const { return eta_B - eta_B_prime; }
  double theta1() const { return theta_A - theta_A_prime; }
  double theta2() const { return theta_B - theta_B_prime; }
};

// phi = g^2 tau / delta
double phi_from_physical(double g, double tau, double delta);

AtomFieldState dispersive_pass(const CoherentSuperposition& field,
                               const AtomState& atom, double phi,
                               double delta_tau);
AtomFieldState dispersive_pass(const AtomFieldState& state,
                               const AtomState& atom, double phi,
                               double delta_tau);

// Atom A then atom B through the cavity, both Ramsey-prepared.
AtomFieldState two_atom_pass(const ProtocolConfig& config);

// <chi|Psi> for a product detection state, returned unnormalized together
// with its squared norm (the detection probability).
std::pair<CoherentSuperposition, double> conditional_project(
    const AtomFieldState& state, const std::vector<AtomState>& detection);

// Full preparation pipeline under the compass phase conditions. With
// apply_alpha0_rotation the free phase is fixed to alpha0 = alpha e^{i pi/4}.
CoherentSuperposition make_compass(const ProtocolConfig& config,
                                   bool apply_alpha0_rotation = true);

// Joint detection probability from the six-overlap closed form.
double joint_probability(const ProtocolConfig& config);

// Single-atom Ramsey fringe probability.
double single_atom_fringe(const AtomState& initial, const AtomState& detection,
                          double phi, double delta_tau, cplx alpha);

// Ensemble left behind by an undetected atom: {(p_e, field), (p_g, field)}.
std::vector<std::pair<double, CoherentSuperposition>> undetected_atom_pass(
    const CoherentSuperposition& field, double phi, double delta_t);

}  // namespace subplanck
