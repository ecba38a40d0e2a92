#include "subplanck/protocol.hpp"

#include <cmath>

namespace subplanck {

namespace {

const cplx kI(0.0, 1.0);

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * M_PI);
  return a;
}

}  // namespace

double AtomState::norm() const {
  return std::sqrt(std::norm(c_e) + std::norm(c_g));
}

AtomState AtomState::normalized() const {
  const double n = norm();
  if (!(n > 0.0))
    fail(ErrorCode::kDegenerateState, "atom state has zero norm");
  return {c_e / n, c_g / n};
}

AtomState AtomState::orthogonal() const {
  return {-std::conj(c_g), std::conj(c_e)};
}

AtomState ramsey_atom(double eta, double theta) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s * std::exp(kI * eta), s * std::exp(kI * theta)};
}

std::size_t AtomFieldState::atom_count() const {
  return branches.empty() ? 0 : branches.front().labels.size();
}

double AtomFieldState::norm() const {
  cplx acc = 0.0;
  for (const auto& bj : branches)
    for (const auto& bk : branches) {
      if (bj.labels != bk.labels) continue;
      acc += std::conj(bk.weight) * bj.weight * overlap(bj.center, bk.center);
    }
  return std::sqrt(acc.real());
}

double phi_from_physical(double g, double tau, double delta) {
  if (delta == 0.0)
    fail(ErrorCode::kZeroDetuning, "dispersive phase needs nonzero detuning");
  return g * g * tau / delta;
}

AtomFieldState dispersive_pass(const CoherentSuperposition& field,
                               const AtomState& atom, double phi,
                               double delta_tau) {
  AtomFieldState out;
  const cplx rot_e = std::exp(kI * (phi - delta_tau));
  const cplx rot_g = std::exp(kI * (-phi - delta_tau));
  const cplx e_phase = std::exp(kI * phi);
  for (const auto& t : field.terms()) {
    out.branches.push_back({{AtomLabel::e}, t.weight * atom.c_e * e_phase,
                            t.center * rot_e});
    out.branches.push_back({{AtomLabel::g}, t.weight * atom.c_g,
                            t.center * rot_g});
  }
  return out;
}

AtomFieldState dispersive_pass(const AtomFieldState& state,
                               const AtomState& atom, double phi,
                               double delta_tau) {
  AtomFieldState out;
  const cplx rot_e = std::exp(kI * (phi - delta_tau));
  const cplx rot_g = std::exp(kI * (-phi - delta_tau));
  const cplx e_phase = std::exp(kI * phi);
  for (const auto& b : state.branches) {
    Branch be = b;
    be.labels.push_back(AtomLabel::e);
    be.weight *= atom.c_e * e_phase;
    be.center *= rot_e;
    Branch bg = b;
    bg.labels.push_back(AtomLabel::g);
    bg.weight *= atom.c_g;
    bg.center *= rot_g;
    out.branches.push_back(std::move(be));
    out.branches.push_back(std::move(bg));
  }
  return out;
}

AtomFieldState two_atom_pass(const ProtocolConfig& config) {
  const auto field = CoherentSuperposition::coherent(config.alpha);
  const AtomState a = ramsey_atom(config.eta_A, config.theta_A);
  const AtomState b = ramsey_atom(config.eta_B, config.theta_B);
  AtomFieldState s = dispersive_pass(field, a, config.phi, config.delta_tau);
  return dispersive_pass(s, b, config.phi_prime, config.delta_tau_prime);
}

std::pair<CoherentSuperposition, double> conditional_project(
    const AtomFieldState& state, const std::vector<AtomState>& detection) {
  if (detection.size() != state.atom_count())
    fail(ErrorCode::kDimensionMismatch,
         "detection list must match the number of atoms");
  std::vector<CoherentTerm> terms;
  bool any = false;
  for (const auto& b : state.branches) {
    cplx amp = b.weight;
    for (std::size_t j = 0; j < detection.size(); ++j) {
      const cplx c = b.labels[j] == AtomLabel::e ? detection[j].c_e
                                                 : detection[j].c_g;
      amp *= std::conj(c);
    }
    any = any || std::abs(amp) > 0.0;
    terms.push_back({amp, b.center});
  }
  if (!any)
    fail(ErrorCode::kDegenerateState, "detection amplitude vanishes exactly");
  CoherentSuperposition projected(std::move(terms), false);
  return {projected, norm_squared(projected)};
}

CoherentSuperposition make_compass(const ProtocolConfig& config,
                                   bool apply_alpha0_rotation) {
  const double d_phi = wrap_angle(config.phi - M_PI / 4.0);
  const double d_phi_prime = wrap_angle(config.phi_prime - M_PI / 2.0);
  const double d_theta1 =
      wrap_angle(config.theta1() - config.eta1() - M_PI / 4.0);
  const double d_theta2 =
      wrap_angle(config.theta2() - config.eta2() - M_PI / 2.0);
  if (std::abs(d_phi) > 1e-9 || std::abs(d_phi_prime) > 1e-9 ||
      std::abs(d_theta1) > 1e-9 || std::abs(d_theta2) > 1e-9)
    fail(ErrorCode::kPhaseConditionViolated,
         "compass phase conditions phi=pi/4, phi'=pi/2, theta1=eta1+pi/4, "
         "theta2=eta2+pi/2 are not met");

  const AtomFieldState s = two_atom_pass(config);
  const std::vector<AtomState> det = {
      ramsey_atom(config.eta_A_prime, config.theta_A_prime),
      ramsey_atom(config.eta_B_prime, config.theta_B_prime)};
  auto [projected, prob] = conditional_project(s, det);
  (void)prob;
  CoherentSuperposition out = normalize(projected);
  if (apply_alpha0_rotation)
    out = out.rotated(M_PI / 4.0 + config.delta_tau + config.delta_tau_prime);
  return out;
}

double joint_probability(const ProtocolConfig& config) {
  const cplx alpha0 =
      config.alpha *
      std::exp(-kI * (config.delta_tau + config.delta_tau_prime));
  const double phi = config.phi;
  const double phip = config.phi_prime;
  const cplx centers[4] = {alpha0 * std::exp(kI * (phi + phip)),
                           alpha0 * std::exp(kI * (phi - phip)),
                           alpha0 * std::exp(kI * (-phi + phip)),
                           alpha0 * std::exp(kI * (-phi - phip))};
  const cplx amps[4] = {
      0.25 * std::exp(kI * (config.eta1() + config.eta2() + phi + phip)),
      0.25 * std::exp(kI * (config.eta1() + config.theta2() + phi)),
      0.25 * std::exp(kI * (config.theta1() + config.eta2() + phip)),
      0.25 * std::exp(kI * (config.theta1() + config.theta2()))};
  double p = 0.25;
  cplx cross = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      cross += std::conj(amps[j]) * amps[k] * overlap(centers[k], centers[j]);
  p += 2.0 * cross.real();
  return p;
}

double single_atom_fringe(const AtomState& initial, const AtomState& detection,
                          double phi, double delta_tau, cplx alpha) {
  const cplx cross = std::conj(initial.c_g) * detection.c_g * initial.c_e *
                     std::conj(detection.c_e) * std::exp(kI * phi) *
                     overlap(alpha * std::exp(kI * (phi - delta_tau)),
                             alpha * std::exp(-kI * (phi + delta_tau)));
  return std::norm(initial.c_e * std::conj(detection.c_e)) +
         std::norm(initial.c_g * std::conj(detection.c_g)) +
         2.0 * cross.real();
}

std::vector<std::pair<double, CoherentSuperposition>> undetected_atom_pass(
    const CoherentSuperposition& field, double phi, double delta_t) {
  const AtomState atom = ramsey_atom(0.0, 0.0);
  const AtomFieldState s = dispersive_pass(field, atom, phi, delta_t);
  std::vector<std::pair<double, CoherentSuperposition>> out;
  for (AtomLabel label : {AtomLabel::e, AtomLabel::g}) {
    std::vector<CoherentTerm> terms;
    for (const auto& b : s.branches)
      if (b.labels.front() == label) terms.push_back({b.weight, b.center});
    CoherentSuperposition branch(std::move(terms), false);
    const double p = norm_squared(branch);
    out.emplace_back(p, normalize(branch));
  }
  return out;
}

}  // namespace subplanck
