#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "subplanck.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("state lifecycle and input validation") {
  sp_state* state = nullptr;
  REQUIRE(sp_state_create("compass", 2.0, 0.0, &state) == SP_OK);
  char label[64];
  REQUIRE(sp_state_label(state, label, sizeof label) == SP_OK);
  CHECK(std::string(label).find("compass") != std::string::npos);
  sp_state_destroy(state);

  sp_state* bad = nullptr;
  CHECK(sp_state_create("squeezed", 1.0, 0.0, &bad) == SP_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(sp_last_error()).size() > 0);
  CHECK(sp_state_create("coherent", 1.0, 0.0, nullptr) ==
        SP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pointwise Wigner evaluation through the C API") {
  sp_state* vac = nullptr;
  REQUIRE(sp_state_create("coherent", 0.0, 0.0, &vac) == SP_OK);
  double w = 0.0;
  REQUIRE(sp_wigner_point(vac, 0.0, 0.0, &w) == SP_OK);
  CHECK(std::abs(w - 2.0 / M_PI) < 1e-14);
  REQUIRE(sp_wigner_point(vac, 1.0, 0.0, &w) == SP_OK);
  CHECK(std::abs(w - (2.0 / M_PI) * std::exp(-2.0)) < 1e-14);
  sp_state_destroy(vac);
}

TEST_CASE("grid computation, integral and CSV output") {
  sp_state* state = nullptr;
  REQUIRE(sp_state_create("cat", 2.0, 0.0, &state) == SP_OK);
  sp_grid* grid = nullptr;
  REQUIRE(sp_wigner_grid_compute(state, 0.0, 0, 0, &grid) == SP_OK);

  double integral = 0.0;
  REQUIRE(sp_grid_integral(grid, &integral) == SP_OK);
  CHECK(std::abs(integral - 1.0) < 2e-3);

  double neg = 0.0;
  REQUIRE(sp_grid_negativity_volume(grid, &neg) == SP_OK);
  CHECK(neg > 0.1);

  REQUIRE(sp_grid_write_csv(grid, "capi_grid.csv", "capi_grid.json") == SP_OK);
  const std::string csv = slurp("capi_grid.csv");
  CHECK(first_line(csv) == "x,p,w");
  // A second write must be byte-identical (deterministic formatting).
  REQUIRE(sp_grid_write_csv(grid, "capi_grid2.csv", "capi_grid2.json") == SP_OK);
  CHECK(csv == slurp("capi_grid2.csv"));
  CHECK(slurp("capi_grid.json").find("\"nx\"") != std::string::npos);

  CHECK(sp_grid_write_csv(grid, "/nonexistent-dir/out.csv", "x.json") ==
        SP_ERR_IO);

  sp_grid_destroy(grid);
  sp_state_destroy(state);
}

TEST_CASE("central grid and tile metrics through the C API") {
  sp_state* state = nullptr;
  const double mag = 4.0;
  REQUIRE(sp_state_create("compass", mag * std::cos(M_PI / 4.0),
                          mag * std::sin(M_PI / 4.0), &state) == SP_OK);
  sp_grid* grid = nullptr;
  REQUIRE(sp_wigner_central_grid_compute(state, mag, &grid) == SP_OK);
  sp_tile_report report{};
  REQUIRE(sp_grid_tile_metrics(grid, mag, &report) == SP_OK);
  CHECK(report.has_chessboard == 1);
  CHECK(report.tile_area_over_vacuum_footprint < 1.0);
  CHECK(std::abs(report.central_value - 2.0 / M_PI) < 1e-9);
  sp_grid_destroy(grid);
  sp_state_destroy(state);
}

TEST_CASE("protocol entry points") {
  double f = 0.0;
  REQUIRE(sp_protocol_prepare(1.0, 0.5, 0.3, -0.2, &f) == SP_OK);
  CHECK(std::abs(f - 1.0) < 1e-12);

  double sum = 0.0;
  REQUIRE(sp_protocol_completeness(1.2, -0.3, M_PI / 4.0, M_PI / 2.0, &sum) ==
          SP_OK);
  CHECK(std::abs(sum - 1.0) < 1e-10);

  double contrast = 0.0;
  REQUIRE(sp_protocol_scan(1.0, 0.0, 21, "capi_scan.csv", "capi_scan.json",
                           &contrast) == SP_OK);
  CHECK(contrast > 0.0);
  const std::string csv = slurp("capi_scan.csv");
  CHECK(first_line(csv) == "theta1,theta2,P");
}

TEST_CASE("decoherence curve through the C API") {
  double worst = 0.0;
  REQUIRE(sp_decoherence_curve(2.0, 0.0, 0.5, 6, 1, "capi_decay.csv",
                               "capi_decay.json", &worst) == SP_OK);
  CHECK(worst < 1e-6);
  const std::string csv = slurp("capi_decay.csv");
  CHECK(first_line(csv) == "kappa_t,coherence_factor,purity,negativity_volume");
  // Header plus one row per sample.
  int rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 7);
}

TEST_CASE("probe traces and revival ordering through the C API") {
  double revivals[3] = {0.0, 0.0, 0.0};
  const double a = 3.0, g = 1.0;
  REQUIRE(sp_probe_traces(a, g, 2.0 * M_PI * a * 1.3 / g, 2048, "capi_probe",
                          "capi_probe.json", revivals) == SP_OK);
  CHECK(revivals[0] < revivals[1]);
  CHECK(revivals[1] < revivals[2]);
  const std::string csv = slurp("capi_probe_compass.csv");
  CHECK(first_line(csv) == "gt,P_gg,P_ge");
  CHECK(slurp("capi_probe.json").find("revival") != std::string::npos);
}
