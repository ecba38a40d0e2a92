#include "subplanck.h"

#include <cmath>
#include <cstring>
#include <string>

#include "subplanck/decoherence.hpp"
#include "subplanck/io.hpp"
#include "subplanck/numerics.hpp"
#include "subplanck/probe.hpp"
#include "subplanck/protocol.hpp"
#include "subplanck/selftest.hpp"
#include "subplanck/wigner.hpp"

#include <iostream>

using namespace subplanck;

namespace {

thread_local std::string g_last_error;

sp_status map_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kBoundsInverted:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kZeroDetuning:
    case ErrorCode::kZeroAmplitude:
      return SP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIoFailure:
      return SP_ERR_IO;
    default:
      return SP_ERR_NUMERIC;
  }
}

template <typename Fn>
sp_status wrap(Fn&& fn) {
  try {
    fn();
    return SP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SP_ERR_NUMERIC;
  }
}

}  // namespace

struct sp_state {
  CoherentSuperposition value;
  std::string label;
  cplx alpha;
};

struct sp_grid {
  PhaseSpaceGrid grid;
  std::string state_label;
  double integral = 0.0;
};

extern "C" {

const char* sp_last_error(void) { return g_last_error.c_str(); }

sp_status sp_state_create(const char* kind, double re, double im,
                          sp_state** out) {
  return wrap([&] {
    if (!kind || !out)
      fail(ErrorCode::kInvalidArgument, "kind and out must be non-null");
    const cplx alpha(re, im);
    const std::string k = kind;
    CoherentSuperposition s = CoherentSuperposition::coherent(alpha);
    if (k == "coherent") {
      // already built
    } else if (k == "cat") {
      s = CoherentSuperposition::cat(alpha);
    } else if (k == "compass") {
      s = CoherentSuperposition::compass(alpha);
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown state kind: " + k);
    }
    *out = new sp_state{std::move(s),
                        k + "(" + format_double(re) + (im < 0 ? "" : "+") +
                            format_double(im) + "i)",
                        alpha};
  });
}

void sp_state_destroy(sp_state* state) { delete state; }

sp_status sp_state_label(const sp_state* state, char* buf, size_t buf_len) {
  return wrap([&] {
    if (!state || !buf || buf_len == 0)
      fail(ErrorCode::kInvalidArgument, "bad label buffer");
    std::strncpy(buf, state->label.c_str(), buf_len - 1);
    buf[buf_len - 1] = '\0';
  });
}

sp_status sp_wigner_point(const sp_state* state, double x, double p,
                          double* out) {
  return wrap([&] {
    if (!state || !out) fail(ErrorCode::kInvalidArgument, "null argument");
    *out = wigner_superposition(state->value, cplx(x, p));
  });
}

sp_status sp_wigner_grid_compute(const sp_state* state, double half_width,
                                 int nx, int np, sp_grid** out) {
  return wrap([&] {
    if (!state || !out) fail(ErrorCode::kInvalidArgument, "null argument");
    GridSpec spec = default_grid(state->value.max_center_magnitude());
    if (half_width > 0.0) {
      spec.x_min = spec.p_min = -half_width;
      spec.x_max = spec.p_max = half_width;
    }
    if (nx > 0 && np > 0) {
      spec.nx = nx;
      spec.np = np;
    }
    auto grid = wigner_grid(state->value, spec, state->label);
    const double integral = integrate_grid(grid);
    *out = new sp_grid{std::move(grid), state->label, integral};
  });
}

sp_status sp_wigner_central_grid_compute(const sp_state* state,
                                         double alpha_magnitude,
                                         sp_grid** out) {
  return wrap([&] {
    if (!state || !out) fail(ErrorCode::kInvalidArgument, "null argument");
    auto grid =
        wigner_grid(state->value, central_grid(alpha_magnitude), state->label);
    const double integral = integrate_grid(grid);
    *out = new sp_grid{std::move(grid), state->label, integral};
  });
}

void sp_grid_destroy(sp_grid* grid) { delete grid; }

sp_status sp_grid_integral(const sp_grid* grid, double* out) {
  return wrap([&] {
    if (!grid || !out) fail(ErrorCode::kInvalidArgument, "null argument");
    *out = grid->integral;
  });
}

sp_status sp_grid_negativity_volume(const sp_grid* grid, double* out) {
  return wrap([&] {
    if (!grid || !out) fail(ErrorCode::kInvalidArgument, "null argument");
    *out = negativity_volume(grid->grid);
  });
}

sp_status sp_grid_write_csv(const sp_grid* grid, const char* csv_path,
                            const char* sidecar_json_path) {
  return wrap([&] {
    if (!grid || !csv_path) fail(ErrorCode::kInvalidArgument, "null argument");
    write_grid_csv(grid->grid, csv_path);
    if (sidecar_json_path) {
      nlohmann::json j;
      j["state"] = grid->state_label;
      j["bounds"] = {{"x_min", grid->grid.spec.x_min},
                     {"x_max", grid->grid.spec.x_max},
                     {"p_min", grid->grid.spec.p_min},
                     {"p_max", grid->grid.spec.p_max}};
      j["resolution"] = {{"nx", grid->grid.spec.nx},
                         {"np", grid->grid.spec.np}};
      j["normalization_check"] = grid->integral;
      write_json(j, sidecar_json_path);
    }
  });
}

sp_status sp_grid_tile_metrics(const sp_grid* grid, double alpha_magnitude,
                               sp_tile_report* out) {
  return wrap([&] {
    if (!grid || !out) fail(ErrorCode::kInvalidArgument, "null argument");
    const TileReport r = central_tile_metrics(grid->grid, alpha_magnitude);
    out->central_value = r.central_value;
    out->central_tile_area = r.central_tile_area;
    out->tile_area_over_vacuum_footprint = r.tile_area_over_vacuum_footprint;
    out->has_chessboard = r.has_chessboard ? 1 : 0;
  });
}

sp_status sp_protocol_prepare(double alpha_re, double alpha_im, double eta1,
                              double eta2, double* fidelity_out) {
  return wrap([&] {
    if (!fidelity_out) fail(ErrorCode::kInvalidArgument, "null argument");
    ProtocolConfig config;
    config.alpha = cplx(alpha_re, alpha_im);
    config.eta_A = eta1;
    config.theta_A = eta1 + M_PI / 4.0;
    config.eta_B = eta2;
    config.theta_B = eta2 + M_PI / 2.0;
    const auto prepared = make_compass(config);
    *fidelity_out =
        fidelity(prepared, CoherentSuperposition::compass(config.alpha));
  });
}

sp_status sp_protocol_scan(double alpha_re, double alpha_im, int n,
                           const char* csv_path, const char* json_path,
                           double* contrast_out) {
  return wrap([&] {
    if (n < 2) fail(ErrorCode::kInvalidArgument, "scan needs n >= 2");
    std::vector<ScanPoint> points;
    points.reserve(static_cast<std::size_t>(n) * n);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ProtocolConfig config;
        config.alpha = cplx(alpha_re, alpha_im);
        config.theta_A = 2.0 * M_PI * i / n;
        config.theta_B = 2.0 * M_PI * j / n;
        const double p = joint_probability(config);
        points.push_back({config.theta_A, config.theta_B, p});
        lo = std::min(lo, p);
        hi = std::max(hi, p);
      }
    if (csv_path) write_scan_csv(points, csv_path);
    if (json_path) {
      nlohmann::json j;
      j["alpha"] = {{"re", alpha_re}, {"im", alpha_im}};
      j["phi"] = M_PI / 4.0;
      j["phi_prime"] = M_PI / 2.0;
      j["scan"] = {{"variables", "theta1,theta2"},
                   {"range", "[0, 2 pi)"},
                   {"points_per_axis", n}};
      j["contrast"] = hi - lo;
      write_json(j, json_path);
    }
    if (contrast_out) *contrast_out = hi - lo;
  });
}

sp_status sp_protocol_completeness(double alpha_re, double alpha_im,
                                   double phi, double phi_prime,
                                   double* sum_out) {
  return wrap([&] {
    if (!sum_out) fail(ErrorCode::kInvalidArgument, "null argument");
    ProtocolConfig config;
    config.alpha = cplx(alpha_re, alpha_im);
    config.phi = phi;
    config.phi_prime = phi_prime;
    const auto state = two_atom_pass(config);
    const std::vector<AtomState> det = {
        ramsey_atom(config.eta_A_prime, config.theta_A_prime),
        ramsey_atom(config.eta_B_prime, config.theta_B_prime)};
    double total = 0.0;
    for (int sa = 0; sa < 2; ++sa)
      for (int sb = 0; sb < 2; ++sb) {
        std::vector<AtomState> d = det;
        if (sa) d[0] = d[0].orthogonal();
        if (sb) d[1] = d[1].orthogonal();
        total += conditional_project(state, d).second;
      }
    *sum_out = total;
  });
}

sp_status sp_decoherence_curve(double alpha_re, double alpha_im, double kt_max,
                               int samples, int with_oracle,
                               const char* csv_path, const char* json_path,
                               double* max_trace_distance_out) {
  return wrap([&] {
    if (samples < 2) fail(ErrorCode::kInvalidArgument, "need samples >= 2");
    if (kt_max <= 0.0) fail(ErrorCode::kInvalidArgument, "need kt_max > 0");
    const cplx alpha(alpha_re, alpha_im);
    const auto compass = CoherentSuperposition::compass(alpha);
    const int cutoff = default_cutoff(compass);
    const double mag = std::abs(alpha);

    // Coarser grid than the plotting default; the curve only tracks the
    // negativity trend.
    GridSpec spec;
    const double half = mag + 4.0;
    const int n = 2 * static_cast<int>(std::ceil(half / 0.1)) + 1;
    spec.x_min = spec.p_min = -half;
    spec.x_max = spec.p_max = half;
    spec.nx = spec.np = n;

    std::vector<DecaySample> curve;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double kt = kt_max * i / (samples - 1);
      const auto params = DecayParams::from_kappa(1.0, kt);
      const auto dyads = damp_superposition(compass, kt);
      const auto rho = dyads_to_fock(dyads, cutoff);
      const auto grid = wigner_grid_dyads(dyads.centers, dyads.coeff, spec);
      curve.push_back({kt, coherence_factor(alpha, params), purity(rho),
                       negativity_volume(grid)});
      const bool oracle_here =
          with_oracle && kt > 0.0 &&
          (i == 1 || i == samples / 2 || i == samples - 1);
      if (oracle_here) {
        const auto rho0 = pure_density(compass, cutoff);
        const double dt = std::min(1e-3, kt / 1000.0);
        const auto numeric = lindblad_rk4(rho0, 1.0, kt, dt);
        worst = std::max(worst, trace_distance(rho, numeric));
      }
    }
    if (csv_path) write_decay_csv(curve, csv_path);
    if (json_path) {
      nlohmann::json j;
      j["alpha"] = {{"re", alpha_re}, {"im", alpha_im}};
      j["kt_max"] = kt_max;
      j["samples"] = samples;
      j["cutoff"] = cutoff;
      j["lifetime_kt"] = 1.0 / (2.0 * std::norm(alpha));
      if (with_oracle) j["oracle_max_trace_distance"] = worst;
      write_json(j, json_path);
    }
    if (max_trace_distance_out) *max_trace_distance_out = worst;
  });
}

sp_status sp_probe_traces(double alpha_magnitude, double g, double t_max,
                          int samples, const char* csv_prefix,
                          const char* json_path, double revival_times_out[3]) {
  return wrap([&] {
    const struct {
      const char* name;
      CoherentSuperposition state;
    } fields[] = {
        {"compass", CoherentSuperposition::compass(alpha_magnitude)},
        {"cat", CoherentSuperposition::cat(alpha_magnitude)},
        {"coherent", CoherentSuperposition::coherent(alpha_magnitude)},
    };
    nlohmann::json j;
    j["alpha_magnitude"] = alpha_magnitude;
    j["g"] = g;
    j["t_max"] = t_max;
    j["samples"] = samples;
    double times[3];
    for (int i = 0; i < 3; ++i) {
      const auto trace = revival_trace(fields[i].state, g, t_max, samples);
      if (csv_prefix)
        write_probe_csv(trace, g,
                        std::string(csv_prefix) + "_" + fields[i].name + ".csv");
      times[i] = revival_time_estimate(trace);
      j["revival_time"][fields[i].name] = times[i];
      if (revival_times_out) revival_times_out[i] = times[i];
    }
    j["ordering_compass_cat_coherent"] =
        times[0] < times[1] && times[1] < times[2];
    if (json_path) write_json(j, json_path);
  });
}

sp_status sp_selftest(int verbose, int* failed_out) {
  return wrap([&] {
    const auto results = run_acceptance(verbose ? &std::cout : nullptr);
    int failed = 0;
    for (const auto& r : results)
      if (!r.passed) ++failed;
    if (failed_out) *failed_out = failed;
  });
}

}  // extern "C"
