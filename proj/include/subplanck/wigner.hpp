#pragma once

#include <string>
#include <vector>

#include "subplanck/states.hpp"

namespace subplanck {

struct GridSpec {
  double x_min = -4.0, x_max = 4.0;
  double p_min = -4.0, p_max = 4.0;
  int nx = 161, np = 161;
};

// Rectangular sampling of W over gamma = x + i p, row-major with x outer.
struct PhaseSpaceGrid {
  GridSpec spec;
  std::vector<double> values;  // nx * np
  std::string state_label;

  double x(int i) const;
  double p(int j) const;
  double dx() const { return (spec.x_max - spec.x_min) / (spec.nx - 1); }
  double dp() const { return (spec.p_max - spec.p_min) / (spec.np - 1); }
  double value(int i, int j) const { return values[i * spec.np + j]; }
};

struct TileReport {
  double central_value = 0.0;
  std::vector<double> zero_crossing_spacings_x;
  std::vector<double> zero_crossing_spacings_p;
  double central_tile_area = 0.0;
  double tile_area_over_vacuum_footprint = 0.0;
  bool has_chessboard = false;
};

// Sum of coefficient-weighted displaced-parity kernels over coherent dyads
// |centers[j]><centers[k]| with coefficients coeff(j, k). Covers pure states
// (coeff = w w^dagger) and damped mixtures alike.
double wigner_dyad_sum(const std::vector<cplx>& centers,
                       const Eigen::MatrixXcd& coeff, cplx gamma);

double wigner_superposition(const CoherentSuperposition& s, cplx gamma);

// Six-term closed form for the compass state, checked against the generic
// pairwise sum.
double wigner_compass(cplx alpha, cplx gamma);

double wigner_fock_numeric(const FockVector& state, cplx gamma);
double wigner_fock_numeric(const DensityMatrixFock& rho, cplx gamma);

GridSpec default_grid(double alpha_max);

// Fine grid over |x|, |p| <= 2.25 for the central-tile metrics; spacing
// resolves the expected fringe period at the given amplitude.
GridSpec central_grid(double alpha_max);

PhaseSpaceGrid wigner_grid(const CoherentSuperposition& s, const GridSpec& spec,
                           const std::string& label = "");
PhaseSpaceGrid wigner_grid(const DensityMatrixFock& rho, const GridSpec& spec,
                           const std::string& label = "");
PhaseSpaceGrid wigner_grid_dyads(const std::vector<cplx>& centers,
                                 const Eigen::MatrixXcd& coeff,
                                 const GridSpec& spec,
                                 const std::string& label = "");

double integrate_grid(const PhaseSpaceGrid& g);

double negativity_volume(const PhaseSpaceGrid& g);

// Zero-crossing scan of the two axes through the origin. The grid must cover
// |x|, |p| <= 2 and resolve the expected central fringe spacing
// pi / (2 sqrt(2) |alpha|).
TileReport central_tile_metrics(const PhaseSpaceGrid& g,
                                double alpha_magnitude);

// 1/e footprint of the vacuum Gaussian in (x, p); the Planck-cell reference.
inline constexpr double kVacuumFootprint = 1.5707963267948966;

}  // namespace subplanck
