/* C interface to the subplanck library: opaque handles and error codes.
 * All functions return SP_OK on success; sp_last_error() describes the most
 * recent failure on the calling thread. */
#ifndef SUBPLANCK_H
#define SUBPLANCK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INVALID_ARGUMENT = 1,
  SP_ERR_NUMERIC = 2,
  SP_ERR_IO = 3,
} sp_status;

typedef struct sp_state sp_state;
typedef struct sp_grid sp_grid;

/* Thread-local message for the last failing call. */
const char* sp_last_error(void);

/* kind: "coherent", "cat" or "compass"; (re, im) is the amplitude alpha. */
sp_status sp_state_create(const char* kind, double re, double im,
                          sp_state** out);
void sp_state_destroy(sp_state* state);
sp_status sp_state_label(const sp_state* state, char* buf, size_t buf_len);

/* Single Wigner evaluation at gamma = x + i p. */
sp_status sp_wigner_point(const sp_state* state, double x, double p,
                          double* out);

/* Grid evaluation. Pass nx = np = 0 for the default grid of the state. */
sp_status sp_wigner_grid_compute(const sp_state* state, double half_width,
                                 int nx, int np, sp_grid** out);
/* Fine grid over |x|,|p| <= 2.25 sized for the central-tile metrics. */
sp_status sp_wigner_central_grid_compute(const sp_state* state,
                                         double alpha_magnitude, sp_grid** out);
void sp_grid_destroy(sp_grid* grid);
sp_status sp_grid_integral(const sp_grid* grid, double* out);
sp_status sp_grid_negativity_volume(const sp_grid* grid, double* out);
sp_status sp_grid_write_csv(const sp_grid* grid, const char* csv_path,
                            const char* sidecar_json_path);

typedef struct sp_tile_report {
  double central_value;
  double central_tile_area;
  double tile_area_over_vacuum_footprint;
  int has_chessboard;
} sp_tile_report;

sp_status sp_grid_tile_metrics(const sp_grid* grid, double alpha_magnitude,
                               sp_tile_report* out);

/* Two-atom preparation under the compass phase conditions; reports the
 * fidelity against the ideal four-component superposition. */
sp_status sp_protocol_prepare(double alpha_re, double alpha_im, double eta1,
                              double eta2, double* fidelity_out);

/* Joint-probability surface over (theta1 - eta1, theta2 - eta2) in
 * [0, 2 pi)^2 at n x n points, written as CSV plus a JSON config echo. */
sp_status sp_protocol_scan(double alpha_re, double alpha_im, int n,
                           const char* csv_path, const char* json_path,
                           double* contrast_out);

/* Sum of the four joint detection probabilities (should be 1). */
sp_status sp_protocol_completeness(double alpha_re, double alpha_im,
                                   double phi, double phi_prime,
                                   double* sum_out);

/* Decay curve of the damped compass state over kappa t in [0, kt_max].
 * When with_oracle is nonzero, every sample is cross-checked against RK4
 * integration and the worst trace distance is reported. */
sp_status sp_decoherence_curve(double alpha_re, double alpha_im, double kt_max,
                               int samples, int with_oracle,
                               const char* csv_path, const char* json_path,
                               double* max_trace_distance_out);

/* Revival traces for compass, cat and coherent fields at a common |alpha|.
 * csv_prefix yields <prefix>_compass.csv etc. plus one JSON summary.
 * revival_times_out[3] receives the estimates in that order. */
sp_status sp_probe_traces(double alpha_magnitude, double g, double t_max,
                          int samples, const char* csv_prefix,
                          const char* json_path, double revival_times_out[3]);

/* Runs the acceptance battery; prints one line per criterion to stdout when
 * verbose is nonzero. failed_out receives the number of failed criteria. */
sp_status sp_selftest(int verbose, int* failed_out);

#ifdef __cplusplus
}
#endif

#endif /* SUBPLANCK_H */
