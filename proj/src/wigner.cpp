#include "subplanck/wigner.hpp"

#include <algorithm>
#include <cmath>

#include "subplanck/numerics.hpp"

namespace subplanck {

namespace {

constexpr double kTwoOverPi = 2.0 / M_PI;

// <a_k| D(gamma) Pi D(-gamma) |a_j>, Pi the photon-number parity.
cplx parity_kernel(cplx aj, cplx ak, cplx gamma) {
  const cplx phase = std::exp(std::conj(gamma) * aj - gamma * std::conj(aj));
  return phase * overlap(2.0 * gamma - aj, ak);
}

}  // namespace

double wigner_dyad_sum(const std::vector<cplx>& centers,
                       const Eigen::MatrixXcd& coeff, cplx gamma) {
  const auto n = static_cast<Eigen::Index>(centers.size());
  if (coeff.rows() != n || coeff.cols() != n)
    fail(ErrorCode::kDimensionMismatch, "coefficient matrix size mismatch");
  cplx acc = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      acc += coeff(j, k) * parity_kernel(centers[j], centers[k], gamma);
  if (std::abs(acc.imag()) > 1e-10)
    fail(ErrorCode::kNumericFailure,
         "imaginary residue of the Wigner sum exceeds 1e-10");
  return kTwoOverPi * acc.real();
}

double wigner_superposition(const CoherentSuperposition& s, cplx gamma) {
  if (!s.is_normalized())
    fail(ErrorCode::kNotNormalized, "wigner_superposition needs a normalized state");
  const auto n = static_cast<Eigen::Index>(s.size());
  std::vector<cplx> centers(n);
  Eigen::VectorXcd w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    centers[j] = s.terms()[j].center;
    w(j) = s.terms()[j].weight;
  }
  const Eigen::MatrixXcd coeff = w * w.adjoint();
  return wigner_dyad_sum(centers, coeff, gamma);
}

double wigner_compass(cplx alpha, cplx gamma) {
  const cplx iu(0.0, 1.0);
  const double a2 = std::norm(alpha);
  // Both linear forms are real: each is z + conj(z).
  const double A = (2.0 * ((1.0 + iu) * alpha * std::conj(gamma))).real();
  const double B = (2.0 * ((1.0 - iu) * alpha * std::conj(gamma))).real();

  double sum = 2.0 * std::exp(-2.0 * a2) * std::cosh(A) * std::cosh(B);
  sum += 2.0 * std::cos(A) * std::cos(B);
  sum += std::exp(-(a2 - A)) * std::cos(a2 - A);
  sum += std::exp(-(a2 - B)) * std::cos(a2 - B);
  sum += std::exp(-(a2 + A)) * std::cos(a2 + A);
  sum += std::exp(-(a2 + B)) * std::cos(a2 + B);

  const double n2 =
      1.0 / norm_squared(CoherentSuperposition(
                {{1.0, alpha}, {1.0, iu * alpha}, {1.0, -alpha}, {1.0, -iu * alpha}}));
  return n2 * (4.0 / M_PI) * std::exp(-2.0 * std::norm(gamma)) * sum;
}

double wigner_fock_numeric(const FockVector& state, cplx gamma) {
  const Eigen::MatrixXcd d = displacement_matrix(-gamma, state.cutoff);
  Eigen::VectorXcd v(state.cutoff + 1);
  for (int n = 0; n <= state.cutoff; ++n) v(n) = state.amplitudes[n];
  const Eigen::VectorXcd w = d * v;
  if (w.norm() < (1.0 - 1e-6) * v.norm())
    fail(ErrorCode::kCutoffTooSmall,
         "displaced state leaks past the Fock cutoff");
  double acc = 0.0;
  double sign = 1.0;
  for (int n = 0; n <= state.cutoff; ++n, sign = -sign)
    acc += sign * std::norm(w(n));
  return kTwoOverPi * acc;
}

double wigner_fock_numeric(const DensityMatrixFock& rho, cplx gamma) {
  const Eigen::MatrixXcd d = displacement_matrix(-gamma, rho.cutoff);
  const Eigen::MatrixXcd m = d * rho.matrix * d.adjoint();
  if (std::abs(m.trace().real() - rho.trace_real()) > 1e-6)
    fail(ErrorCode::kCutoffTooSmall,
         "displaced density matrix leaks past the Fock cutoff");
  double acc = 0.0;
  double sign = 1.0;
  for (int n = 0; n <= rho.cutoff; ++n, sign = -sign)
    acc += sign * m(n, n).real();
  return kTwoOverPi * acc;
}

double PhaseSpaceGrid::x(int i) const {
  return spec.x_min + i * dx();
}

double PhaseSpaceGrid::p(int j) const {
  return spec.p_min + j * dp();
}

GridSpec default_grid(double alpha_max) {
  GridSpec g;
  const double half = alpha_max + 4.0;
  double spacing = 0.05;
  if (alpha_max > 0.0) spacing = std::min(spacing, M_PI / (8.0 * alpha_max));
  const int n = 2 * static_cast<int>(std::ceil(half / spacing)) + 1;
  g.x_min = g.p_min = -half;
  g.x_max = g.p_max = half;
  g.nx = g.np = n;
  return g;
}

GridSpec central_grid(double alpha_max) {
  GridSpec g;
  const double half = 2.25;
  double spacing = 0.02;
  if (alpha_max > 0.0)
    spacing = std::min(
        spacing, M_PI / (2.0 * std::sqrt(2.0) * alpha_max) / 4.0);
  const int n = 2 * static_cast<int>(std::ceil(half / spacing)) + 1;
  g.x_min = g.p_min = -half;
  g.x_max = g.p_max = half;
  g.nx = g.np = n;
  return g;
}

namespace {

void check_spec(const GridSpec& spec) {
  if (spec.nx < 2 || spec.np < 2)
    fail(ErrorCode::kInvalidArgument, "grid needs at least 2x2 points");
  if (spec.x_max <= spec.x_min || spec.p_max <= spec.p_min)
    fail(ErrorCode::kBoundsInverted, "grid bounds are inverted");
}

template <typename Eval>
PhaseSpaceGrid fill_grid(const GridSpec& spec, const std::string& label,
                         Eval&& eval) {
  check_spec(spec);
  PhaseSpaceGrid g;
  g.spec = spec;
  g.state_label = label;
  g.values.resize(static_cast<std::size_t>(spec.nx) * spec.np);
  for (int i = 0; i < spec.nx; ++i) {
    const double x = g.x(i);
    for (int j = 0; j < spec.np; ++j)
      g.values[i * spec.np + j] = eval(cplx(x, g.p(j)));
  }
  return g;
}

}  // namespace

PhaseSpaceGrid wigner_grid(const CoherentSuperposition& s, const GridSpec& spec,
                           const std::string& label) {
  const auto n = static_cast<Eigen::Index>(s.size());
  std::vector<cplx> centers(n);
  Eigen::VectorXcd w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    centers[j] = s.terms()[j].center;
    w(j) = s.terms()[j].weight;
  }
  if (!s.is_normalized())
    fail(ErrorCode::kNotNormalized, "wigner_grid needs a normalized state");
  const Eigen::MatrixXcd coeff = w * w.adjoint();
  return wigner_grid_dyads(centers, coeff, spec, label);
}

PhaseSpaceGrid wigner_grid_dyads(const std::vector<cplx>& centers,
                                 const Eigen::MatrixXcd& coeff,
                                 const GridSpec& spec,
                                 const std::string& label) {
  return fill_grid(spec, label,
                   [&](cplx g) { return wigner_dyad_sum(centers, coeff, g); });
}

PhaseSpaceGrid wigner_grid(const DensityMatrixFock& rho, const GridSpec& spec,
                           const std::string& label) {
  return fill_grid(spec, label,
                   [&](cplx g) { return wigner_fock_numeric(rho, g); });
}

double integrate_grid(const PhaseSpaceGrid& g) {
  double acc = 0.0;
  for (int i = 0; i < g.spec.nx; ++i) {
    const double wx = (i == 0 || i == g.spec.nx - 1) ? 0.5 : 1.0;
    for (int j = 0; j < g.spec.np; ++j) {
      const double wp = (j == 0 || j == g.spec.np - 1) ? 0.5 : 1.0;
      acc += wx * wp * g.value(i, j);
    }
  }
  return acc * g.dx() * g.dp();
}

double negativity_volume(const PhaseSpaceGrid& g) {
  double acc = 0.0;
  for (double v : g.values) acc += std::max(0.0, -v);
  return acc * g.dx() * g.dp();
}

namespace {

// Linear-interpolation zero crossings of a sampled slice restricted to
// |coordinate| <= 2.
std::vector<double> axis_crossings(const std::vector<std::pair<double, double>>& slice) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < slice.size(); ++i) {
    const auto [t0, v0] = slice[i];
    const auto [t1, v1] = slice[i + 1];
    if (v0 == 0.0) {
      if (out.empty() || out.back() != t0) out.push_back(t0);
    } else if (v0 * v1 < 0.0) {
      out.push_back(t0 + (t1 - t0) * (-v0) / (v1 - v0));
    }
  }
  return out;
}

double central_spacing(const std::vector<double>& crossings) {
  double left = -1e300, right = 1e300;
  for (double c : crossings) {
    if (c < 0.0) left = std::max(left, c);
    if (c > 0.0) right = std::min(right, c);
  }
  if (left == -1e300 || right == 1e300) return 0.0;
  return right - left;
}

std::vector<double> spacings(const std::vector<double>& crossings) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < crossings.size(); ++i)
    out.push_back(crossings[i + 1] - crossings[i]);
  return out;
}

}  // namespace

TileReport central_tile_metrics(const PhaseSpaceGrid& g,
                                double alpha_magnitude) {
  if (g.spec.x_min > -2.0 || g.spec.x_max < 2.0 || g.spec.p_min > -2.0 ||
      g.spec.p_max < 2.0)
    fail(ErrorCode::kInvalidArgument, "grid must cover |x|, |p| <= 2");
  if (alpha_magnitude > 0.0) {
    const double fringe = M_PI / (2.0 * std::sqrt(2.0) * alpha_magnitude);
    if (std::max(g.dx(), g.dp()) > 0.5 * fringe)
      fail(ErrorCode::kGridTooCoarse,
           "grid spacing aliases the expected central fringe period");
  }

  // Rows/columns nearest the two axes.
  int i0 = 0, j0 = 0;
  for (int i = 1; i < g.spec.nx; ++i)
    if (std::abs(g.x(i)) < std::abs(g.x(i0))) i0 = i;
  for (int j = 1; j < g.spec.np; ++j)
    if (std::abs(g.p(j)) < std::abs(g.p(j0))) j0 = j;

  std::vector<std::pair<double, double>> x_slice, p_slice;
  for (int i = 0; i < g.spec.nx; ++i)
    if (std::abs(g.x(i)) <= 2.0) x_slice.emplace_back(g.x(i), g.value(i, j0));
  for (int j = 0; j < g.spec.np; ++j)
    if (std::abs(g.p(j)) <= 2.0) p_slice.emplace_back(g.p(j), g.value(i0, j));

  const auto cx = axis_crossings(x_slice);
  const auto cp = axis_crossings(p_slice);

  TileReport r;
  r.central_value = g.value(i0, j0);
  r.zero_crossing_spacings_x = spacings(cx);
  r.zero_crossing_spacings_p = spacings(cp);
  const double sx = central_spacing(cx);
  const double sp = central_spacing(cp);
  r.central_tile_area = sx * sp;
  r.tile_area_over_vacuum_footprint = r.central_tile_area / kVacuumFootprint;
  // A chessboard needs alternating fringes on both axes at sub-Planck scale;
  // the outer lobe boundaries alone also cross zero but enclose a tile larger
  // than the vacuum footprint.
  r.has_chessboard = cx.size() >= 3 && cp.size() >= 3 &&
                     r.central_tile_area > 0.0 &&
                     r.central_tile_area < kVacuumFootprint;
  return r;
}

}  // namespace subplanck
