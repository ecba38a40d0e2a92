// Command-line front end; links the shared C API only.
#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "subplanck.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

int fail_with(sp_status status) {
  std::fprintf(stderr, "error: %s\n", sp_last_error());
  return status == SP_ERR_INVALID_ARGUMENT ? 2 : 1;
}

#define SP_TRY(call)                              \
  do {                                            \
    const sp_status status_ = (call);             \
    if (status_ != SP_OK) return fail_with(status_); \
  } while (0)

struct AngleScale {
  bool radians = false;
  double operator()(double v) const { return radians ? v : v * kPi; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compass-state simulation toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value configuration file");
  app.allow_config_extras(false);

  AngleScale angle;
  app.add_flag("--radians", angle.radians,
               "Interpret angle options in radians instead of units of pi");

  // wigner
  auto* wigner = app.add_subcommand("wigner", "Wigner grid and tile metrics");
  std::string w_state = "compass";
  double w_alpha_re = 1.0, w_alpha_im = 0.0;
  double w_bounds = 0.0;
  int w_res = 0;
  std::string w_out = "wigner";
  bool w_tile = true;
  bool w_rotate = true;
  wigner->add_option("--state", w_state, "coherent | cat | compass")
      ->check(CLI::IsMember({"coherent", "cat", "compass"}));
  wigner->add_option("--alpha", w_alpha_re, "Amplitude (real part)");
  wigner->add_option("--alpha-im", w_alpha_im, "Amplitude (imaginary part)");
  wigner->add_option("--bounds", w_bounds, "Half-width of the grid (0 = auto)");
  wigner->add_option("--res", w_res, "Points per axis (0 = auto)");
  wigner->add_option("--out", w_out, "Output file prefix");
  wigner->add_flag("--tile,!--no-tile", w_tile,
                   "Also emit the central-tile report (compass only)");
  wigner->add_flag("--rotate,!--no-rotate", w_rotate,
                   "Apply the preparation convention alpha -> alpha e^{i pi/4} "
                   "for real-amplitude compass states");

  // protocol
  auto* protocol =
      app.add_subcommand("protocol", "Two-atom preparation and fringe scans");
  double p_alpha_re = 1.0, p_alpha_im = 0.0;
  double p_eta1 = 0.0, p_eta2 = 0.0;
  bool p_scan = false, p_completeness = false;
  int p_res = 101;
  std::string p_out = "protocol";
  protocol->add_option("--alpha", p_alpha_re, "Initial cavity amplitude (real)");
  protocol->add_option("--alpha-im", p_alpha_im, "Initial cavity amplitude (imag)");
  protocol->add_option("--eta1", p_eta1, "Ramsey phase difference eta1");
  protocol->add_option("--eta2", p_eta2, "Ramsey phase difference eta2");
  protocol->add_flag("--scan", p_scan,
                     "Scan the joint probability over (theta1, theta2)");
  protocol->add_flag("--completeness", p_completeness,
                     "Report the four-outcome probability sum");
  protocol->add_option("--res", p_res, "Scan points per axis");
  protocol->add_option("--out", p_out, "Output file prefix");

  // decohere
  auto* decohere = app.add_subcommand("decohere", "Compass decay curve");
  double d_alpha_re = 2.0, d_alpha_im = 0.0;
  double d_kt_max = 1.0;
  int d_samples = 21;
  bool d_oracle = false;
  std::string d_out = "decohere";
  decohere->add_option("--alpha", d_alpha_re, "Amplitude (real part)");
  decohere->add_option("--alpha-im", d_alpha_im, "Amplitude (imaginary part)");
  decohere->add_option("--kt-max", d_kt_max, "Largest kappa*t on the curve");
  decohere->add_option("--samples", d_samples, "Number of curve samples");
  decohere->add_flag("--oracle-check", d_oracle,
                     "Cross-check against RK4 Lindblad integration");
  decohere->add_option("--out", d_out, "Output file prefix");

  // probe
  auto* probe = app.add_subcommand("probe", "Resonant-probe revival traces");
  double b_alpha = 4.0, b_g = 1.0, b_t_max = 0.0;
  int b_samples = 4096;
  std::string b_out = "probe";
  probe->add_option("--alpha", b_alpha, "Common |alpha| of the three fields");
  probe->add_option("--g", b_g, "Resonant coupling");
  probe->add_option("--t-max", b_t_max, "Trace length (0 = auto)");
  probe->add_option("--samples", b_samples, "Trace samples");
  probe->add_option("--out", b_out, "Output file prefix");

  // selftest
  auto* selftest =
      app.add_subcommand("selftest", "Run the full acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (wigner->parsed()) {
    double re = w_alpha_re, im = w_alpha_im;
    if (w_state == "compass" && w_rotate && im == 0.0) {
      // Preparation convention: centers on the diagonals, fringes on the axes.
      const double mag = std::abs(re);
      re = mag * std::cos(kPi / 4.0) * (w_alpha_re < 0 ? -1.0 : 1.0);
      im = mag * std::sin(kPi / 4.0);
    }
    sp_state* state = nullptr;
    SP_TRY(sp_state_create(w_state.c_str(), re, im, &state));
    sp_grid* grid = nullptr;
    SP_TRY(sp_wigner_grid_compute(state, w_bounds, w_res, w_res, &grid));
    SP_TRY(sp_grid_write_csv(grid, (w_out + ".csv").c_str(),
                             (w_out + ".json").c_str()));
    double integral = 0.0;
    SP_TRY(sp_grid_integral(grid, &integral));
    std::printf("grid written to %s.csv (normalization check %.6f)\n",
                w_out.c_str(), integral);
    if (w_tile && w_state == "compass") {
      const double mag = std::hypot(re, im);
      sp_grid* central = nullptr;
      SP_TRY(sp_wigner_central_grid_compute(state, mag, &central));
      sp_tile_report report{};
      SP_TRY(sp_grid_tile_metrics(central, mag, &report));
      std::FILE* f = std::fopen((w_out + "_tile.json").c_str(), "w");
      if (!f) {
        std::fprintf(stderr, "error: cannot write %s_tile.json\n",
                     w_out.c_str());
        return 1;
      }
      std::fprintf(f,
                   "{\n  \"central_value\": %.17g,\n"
                   "  \"central_tile_area\": %.17g,\n"
                   "  \"tile_area_over_vacuum_footprint\": %.17g,\n"
                   "  \"has_chessboard\": %s\n}\n",
                   report.central_value, report.central_tile_area,
                   report.tile_area_over_vacuum_footprint,
                   report.has_chessboard ? "true" : "false");
      std::fclose(f);
      sp_grid_destroy(central);
      std::printf("has_chessboard=%s tile_area=%.6g (x vacuum footprint: %.6g)\n",
                  report.has_chessboard ? "true" : "false",
                  report.central_tile_area,
                  report.tile_area_over_vacuum_footprint);
    }
    sp_grid_destroy(grid);
    sp_state_destroy(state);
    return 0;
  }

  if (protocol->parsed()) {
    if (p_scan) {
      double contrast = 0.0;
      SP_TRY(sp_protocol_scan(p_alpha_re, p_alpha_im, p_res,
                              (p_out + "_scan.csv").c_str(),
                              (p_out + "_scan.json").c_str(), &contrast));
      std::printf("scan written to %s_scan.csv (contrast %.6g)\n",
                  p_out.c_str(), contrast);
    }
    if (p_completeness) {
      double sum = 0.0;
      SP_TRY(sp_protocol_completeness(p_alpha_re, p_alpha_im, kPi / 4.0,
                                      kPi / 2.0, &sum));
      std::printf("four-outcome probability sum: %.12f\n", sum);
    }
    if (!p_scan && !p_completeness) {
      double f = 0.0;
      SP_TRY(sp_protocol_prepare(p_alpha_re, p_alpha_im, angle(p_eta1),
                                 angle(p_eta2), &f));
      std::printf("preparation fidelity: %.12f\n", f);
    }
    return 0;
  }

  if (decohere->parsed()) {
    double worst = 0.0;
    SP_TRY(sp_decoherence_curve(d_alpha_re, d_alpha_im, d_kt_max, d_samples,
                                d_oracle ? 1 : 0, (d_out + ".csv").c_str(),
                                (d_out + ".json").c_str(), &worst));
    std::printf("decay curve written to %s.csv\n", d_out.c_str());
    if (d_oracle)
      std::printf("oracle max trace distance: %.3g\n", worst);
    return 0;
  }

  if (probe->parsed()) {
    const double t_max =
        b_t_max > 0.0 ? b_t_max : 2.0 * kPi * b_alpha * 1.3 / b_g;
    double revivals[3] = {0.0, 0.0, 0.0};
    SP_TRY(sp_probe_traces(b_alpha, b_g, t_max, b_samples, b_out.c_str(),
                           (b_out + ".json").c_str(), revivals));
    std::printf("revival times: compass %.4f, cat %.4f, coherent %.4f\n",
                revivals[0], revivals[1], revivals[2]);
    std::printf("ordering compass < cat < coherent: %s\n",
                revivals[0] < revivals[1] && revivals[1] < revivals[2]
                    ? "true"
                    : "false");
    return 0;
  }

  if (selftest->parsed()) {
    int failed = 0;
    SP_TRY(sp_selftest(1, &failed));
    if (failed > 0) {
      std::fprintf(stderr, "%d criteria failed\n", failed);
      return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
  }

  return 2;
}
