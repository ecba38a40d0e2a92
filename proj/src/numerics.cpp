#include "subplanck/numerics.hpp"

#include <cmath>

namespace subplanck {

double JointAtomField::norm() const {
  return std::sqrt(e_part.squaredNorm() + g_part.squaredNorm());
}

cplx JointAtomField::inner(const JointAtomField& other) const {
  return e_part.dot(other.e_part) + g_part.dot(other.g_part);
}

JointAtomField make_joint(const FockVector& field, const AtomState& atom) {
  JointAtomField j;
  j.cutoff = field.cutoff;
  j.e_part.resize(field.cutoff + 1);
  j.g_part.resize(field.cutoff + 1);
  for (int n = 0; n <= field.cutoff; ++n) {
    j.e_part(n) = atom.c_e * field.amplitudes[n];
    j.g_part(n) = atom.c_g * field.amplitudes[n];
  }
  return j;
}

JointAtomField jc_propagate(const FockVector& field, const AtomState& atom,
                            double g, double delta, double tau) {
  JointAtomField s = make_joint(field, atom);
  const int cutoff = s.cutoff;
  JointAtomField out = s;

  // |g,0> is dark.
  out.g_part(0) = s.g_part(0);

  // Manifold n couples |e,n> and |g,n+1>.
  for (int n = 0; n < cutoff; ++n) {
    const double h_ee = delta * n;
    const double h_gg = delta * (n + 1);
    const double coupling = g * std::sqrt(static_cast<double>(n + 1));
    const double mean = 0.5 * (h_ee + h_gg);
    const double dz = 0.5 * (h_ee - h_gg);
    const double omega = std::sqrt(dz * dz + coupling * coupling);
    const double c = std::cos(omega * tau);
    // sin(omega tau)/omega, finite at omega -> 0.
    const double s_over =
        omega > 0.0 ? std::sin(omega * tau) / omega : tau;
    const cplx phase = std::exp(cplx(0.0, -mean * tau));
    const cplx u00 = phase * (c - cplx(0.0, 1.0) * dz * s_over);
    const cplx u01 = phase * (-cplx(0.0, 1.0) * coupling * s_over);
    const cplx u11 = phase * (c + cplx(0.0, 1.0) * dz * s_over);
    const cplx a = s.e_part(n);
    const cplx b = s.g_part(n + 1);
    out.e_part(n) = u00 * a + u01 * b;
    out.g_part(n + 1) = u01 * a + u11 * b;
  }

  // The top |e,cutoff> manifold would couple past the truncation; its
  // population must be negligible for an adequate cutoff, so only the free
  // phase is applied.
  if (std::abs(s.e_part(cutoff)) > 1e-6)
    fail(ErrorCode::kCutoffTooSmall,
         "excited population at the Fock cutoff is not negligible");
  out.e_part(cutoff) = s.e_part(cutoff) * std::exp(cplx(0.0, -delta * cutoff * tau));

  return out;
}

JointAtomField dispersive_effective_map(const FockVector& field,
                                        const AtomState& atom, double phi0,
                                        double delta, double tau) {
  JointAtomField s = make_joint(field, atom);
  JointAtomField out = s;
  for (int n = 0; n <= s.cutoff; ++n) {
    out.g_part(n) = s.g_part(n) * std::exp(cplx(0.0, -n * (phi0 + delta) * tau));
    out.e_part(n) =
        s.e_part(n) * std::exp(cplx(0.0, (n + 1) * phi0 * tau - n * delta * tau));
  }
  return out;
}

namespace {

// rho' for zero-temperature amplitude damping.
Eigen::MatrixXcd damping_rhs(const Eigen::MatrixXcd& rho, double kappa) {
  const auto dim = rho.rows();
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      cplx v = -0.5 * kappa * static_cast<double>(m + n) * rho(m, n);
      if (m + 1 < dim && n + 1 < dim)
        v += kappa *
             std::sqrt(static_cast<double>((m + 1) * (n + 1))) *
             rho(m + 1, n + 1);
      out(m, n) = v;
    }
  }
  return out;
}

}  // namespace

DensityMatrixFock lindblad_rk4(const DensityMatrixFock& rho0, double kappa,
                               double t, double dt) {
  if (dt <= 0.0 || dt > t)
    fail(ErrorCode::kInvalidArgument, "need 0 < dt <= t");
  // The stiffest mode decays at rate kappa * cutoff; RK4 is stable on the
  // negative real axis only up to |lambda| h < 2.785.
  if (dt * kappa * rho0.cutoff > 2.785)
    fail(ErrorCode::kStepTooLarge,
         "dt exceeds the RK4 stability bound for the fastest decay mode");
  Eigen::MatrixXcd rho = rho0.matrix;
  double remaining = t;
  while (remaining > 1e-15 * t) {
    const double h = std::min(dt, remaining);
    const Eigen::MatrixXcd k1 = damping_rhs(rho, kappa);
    const Eigen::MatrixXcd k2 = damping_rhs(rho + 0.5 * h * k1, kappa);
    const Eigen::MatrixXcd k3 = damping_rhs(rho + 0.5 * h * k2, kappa);
    const Eigen::MatrixXcd k4 = damping_rhs(rho + h * k3, kappa);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint().eval());
    remaining -= h;
  }
  return DensityMatrixFock{rho, rho0.cutoff};
}

Eigen::MatrixXcd displacement_matrix(cplx gamma, int cutoff) {
  if (cutoff < 0) fail(ErrorCode::kCutoffTooSmall, "cutoff must be >= 0");
  const int dim = cutoff + 1;
  Eigen::MatrixXcd d(dim, dim);
  const double x = std::norm(gamma);
  const double pref = -0.5 * x;
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      const int k = m - n;
      // Associated Laguerre L_n^{(k)}(x) by upward recurrence in degree.
      double lprev = 1.0;
      double lcur = 1.0 + k - x;
      if (n == 0) lcur = lprev;
      for (int j = 2; j <= n; ++j) {
        const double lnext =
            ((2.0 * j - 1.0 + k - x) * lcur - (j - 1.0 + k) * lprev) / j;
        lprev = lcur;
        lcur = lnext;
      }
      const double lag = (n == 0) ? 1.0 : lcur;
      const double logmag =
          pref + 0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0));
      const cplx gk = (k == 0) ? cplx(1.0, 0.0) : std::pow(gamma, k);
      const cplx dmn = std::exp(logmag) * gk * lag;
      d(m, n) = dmn;
      // D(gamma)_{nm} = D(-gamma)_{mn}^* reflected across the diagonal.
      if (m != n)
        d(n, m) = std::exp(logmag) * std::pow(-std::conj(gamma), k) * lag;
    }
  }
  return d;
}

}  // namespace subplanck
