#include "subplanck/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "subplanck/decoherence.hpp"
#include "subplanck/numerics.hpp"
#include "subplanck/probe.hpp"
#include "subplanck/protocol.hpp"
#include "subplanck/wigner.hpp"

namespace subplanck {

namespace {

const cplx kI(0.0, 1.0);

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

cplx random_complex(std::mt19937& rng, double max_magnitude,
                    double min_magnitude = 0.0) {
  std::uniform_real_distribution<double> mag(min_magnitude, max_magnitude);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * M_PI);
  return std::polar(mag(rng), arg(rng));
}

ProtocolConfig compass_config(cplx alpha, std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  ProtocolConfig c;
  c.alpha = alpha;
  c.phi = M_PI / 4.0;
  c.phi_prime = M_PI / 2.0;
  c.eta_A = angle(rng);
  c.eta_A_prime = angle(rng);
  c.eta_B = angle(rng);
  c.eta_B_prime = angle(rng);
  c.theta_A_prime = angle(rng);
  c.theta_B_prime = angle(rng);
  c.theta_A = c.theta_A_prime + c.eta1() + M_PI / 4.0;
  c.theta_B = c.theta_B_prime + c.eta2() + M_PI / 2.0;
  return c;
}

// Criterion 1: compass preparation exactness.
void check_preparation(Check& c) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx alpha = random_complex(rng, 4.0, 0.2);
    const auto config = compass_config(alpha, rng);
    const auto prepared = make_compass(config);
    const double f = fidelity(prepared, CoherentSuperposition::compass(alpha));
    c.require(f >= 1.0 - 1e-10,
              "preparation fidelity " + std::to_string(f) + " at trial " +
                  std::to_string(trial));
  }
}

// Criterion 2: triple-oracle Wigner agreement.
void check_wigner_oracles(Check& c) {
  std::mt19937 rng(23);
  for (double a : {1.0, 2.0, 3.0}) {
    const cplx alpha(a, 0.0);
    const auto compass = CoherentSuperposition::compass(alpha);
    const double gamma_max = a + 2.0;
    const int cutoff = default_cutoff(a + gamma_max);
    const FockVector fock = to_fock(compass, cutoff);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const cplx gamma = random_complex(rng, gamma_max);
      const double w_closed = wigner_compass(alpha, gamma);
      const double w_generic = wigner_superposition(compass, gamma);
      const double w_fock = wigner_fock_numeric(fock, gamma);
      worst = std::max({worst, std::abs(w_closed - w_generic),
                        std::abs(w_generic - w_fock)});
    }
    c.require(worst < 1e-8, "oracle spread " + std::to_string(worst) +
                                " at |alpha| = " + std::to_string(a));
  }
}

TileReport compass_tile_report(double alpha_mag) {
  // Preparation convention alpha0 = alpha e^{i pi/4}: central fringes align
  // with the quadrature axes.
  const cplx alpha = std::polar(alpha_mag, M_PI / 4.0);
  const auto s = CoherentSuperposition::compass(alpha);
  const auto grid = wigner_grid(s, central_grid(alpha_mag), "compass");
  return central_tile_metrics(grid, alpha_mag);
}

// Criterion 3: chessboard onset and sub-Planck tile scaling.
void check_chessboard(Check& c) {
  const TileReport small = compass_tile_report(1.0);
  c.require(!small.has_chessboard, "|alpha|=1 shows a chessboard");
  const TileReport large = compass_tile_report(5.0);
  c.require(large.has_chessboard, "|alpha|=5 shows no chessboard");
  c.require(large.tile_area_over_vacuum_footprint < 1.0,
            "|alpha|=5 central tile is not sub-Planck");
  double lo = 1e300, hi = 0.0;
  for (double a : {3.0, 4.0, 5.0}) {
    const double scaled = compass_tile_report(a).central_tile_area * a * a;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  c.require(hi <= 1.3 * lo, "tile area does not scale as 1/|alpha|^2");
}

// Criterion 4: grid normalization and four-fold symmetry.
void check_normalization_symmetry(Check& c) {
  const struct {
    const char* label;
    CoherentSuperposition state;
  } cases[] = {
      {"vacuum", CoherentSuperposition::coherent(0.0)},
      {"cat(2)", CoherentSuperposition::cat(2.0)},
      {"compass(1)", CoherentSuperposition::compass(1.0)},
      {"compass(5 e^{i pi/4})",
       CoherentSuperposition::compass(std::polar(5.0, M_PI / 4.0))},
  };
  for (const auto& [label, state] : cases) {
    const auto grid =
        wigner_grid(state, default_grid(state.max_center_magnitude()), label);
    const double integral = integrate_grid(grid);
    c.require(std::abs(integral - 1.0) < 2e-3,
              std::string(label) + " integrates to " +
                  std::to_string(integral));
  }
  std::mt19937 rng(37);
  const cplx alpha(1.7, 0.6);
  for (int trial = 0; trial < 50; ++trial) {
    const cplx gamma = random_complex(rng, std::abs(alpha) + 2.0);
    const double diff =
        std::abs(wigner_compass(alpha, gamma) - wigner_compass(alpha, kI * gamma));
    c.require(diff < 1e-10, "four-fold symmetry broken by " +
                                std::to_string(diff));
  }
}

// Criterion 5: joint-probability identities and fringe contrast.
void check_joint_probability(Check& c) {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    ProtocolConfig config;
    config.alpha = random_complex(rng, 2.0);
    config.phi = angle(rng);
    config.phi_prime = angle(rng);
    config.delta_tau = angle(rng);
    config.delta_tau_prime = angle(rng);
    config.eta_A = angle(rng);
    config.eta_A_prime = angle(rng);
    config.eta_B = angle(rng);
    config.eta_B_prime = angle(rng);
    config.theta_A = angle(rng);
    config.theta_A_prime = angle(rng);
    config.theta_B = angle(rng);
    config.theta_B_prime = angle(rng);

    const auto state = two_atom_pass(config);
    const std::vector<AtomState> det = {
        ramsey_atom(config.eta_A_prime, config.theta_A_prime),
        ramsey_atom(config.eta_B_prime, config.theta_B_prime)};
    const auto [projected, prob] = conditional_project(state, det);
    const double closed = joint_probability(config);
    c.require(std::abs(closed - prob) < 1e-12,
              "Eq-identity gap " + std::to_string(std::abs(closed - prob)));

    double total = 0.0;
    for (int sa = 0; sa < 2; ++sa)
      for (int sb = 0; sb < 2; ++sb) {
        std::vector<AtomState> d = det;
        if (sa) d[0] = d[0].orthogonal();
        if (sb) d[1] = d[1].orthogonal();
        total += conditional_project(state, d).second;
      }
    c.require(std::abs(total - 1.0) < 1e-10,
              "completeness sum " + std::to_string(total));
  }

  const auto contrast = [](double alpha_mag) {
    double lo = 1e300, hi = -1e300;
    const int n = 41;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ProtocolConfig config;
        config.alpha = alpha_mag;
        config.theta_A = 2.0 * M_PI * i / n;
        config.theta_B = 2.0 * M_PI * j / n;
        const double p = joint_probability(config);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
      }
    return hi - lo;
  };
  const double c1 = contrast(1.0);
  const double c3 = contrast(3.0);
  c.require(c3 < c1, "fringe contrast did not drop: " + std::to_string(c1) +
                         " -> " + std::to_string(c3));
}

// Criterion 6: analytic decoherence vs the Lindblad oracle.
void check_decoherence(Check& c) {
  for (double a : {1.0, 2.0}) {
    const cplx alpha(a, 0.0);
    const int cutoff = default_cutoff(CoherentSuperposition::compass(alpha));
    const auto rho0 = pure_density(CoherentSuperposition::compass(alpha), cutoff);
    for (double kt : {0.01, 0.1, 0.5}) {
      const auto params = DecayParams::from_kappa(1.0, kt);
      const auto analytic = decohere_compass(alpha, params, cutoff);
      const double dt = std::min(1e-3, kt / 1000.0);
      const auto numeric = lindblad_rk4(rho0, 1.0, kt, dt);
      const double dist = trace_distance(analytic, numeric);
      c.require(dist <= 1e-6, "trace distance " + std::to_string(dist) +
                                  " at |alpha|=" + std::to_string(a) +
                                  ", kt=" + std::to_string(kt));

      const auto dyads =
          damp_superposition(CoherentSuperposition::compass(alpha), kt);
      const cplx w0 = CoherentSuperposition::compass(alpha).terms()[0].weight;
      const double pair_weight =
          (dyads.coeff(0, 2) / (w0 * std::conj(w0))).real();
      c.require(std::abs(pair_weight - coherence_factor(alpha, params)) < 1e-12,
                "opposite-pair weight mismatch");
    }
    const double t_c = 1.0;
    const double lifetime = compass_lifetime(alpha, t_c);
    const auto at_lifetime = DecayParams::from_lifetime(t_c, lifetime);
    const double kt = at_lifetime.kt();
    const double correction = 2.0 * a * a * (kt - 1.0 + std::exp(-kt));
    c.require(std::abs(coherence_factor(alpha, at_lifetime) - std::exp(-1.0)) <=
                  correction,
              "lifetime coherence outside the small-kt correction bound");
  }
}

// Criterion 7: mod-4 photon support.
void check_photon_statistics(Check& c) {
  for (double a : {1.0, 2.0, 3.0, 4.0, 5.0}) {
    const cplx alpha = std::polar(a, 0.7);
    const auto compass = CoherentSuperposition::compass(alpha);
    const FockVector f = to_fock(compass, default_cutoff(compass));
    for (int n = 0; n <= f.cutoff; ++n)
      if (n % 4 != 0)
        c.require(std::abs(f.amplitudes[n]) < 1e-14,
                  "amplitude " + std::to_string(std::abs(f.amplitudes[n])) +
                      " at n=" + std::to_string(n));
  }
}

// Criterion 8: probe identities and the revival ordering.
void check_probe(Check& c) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const auto field = CoherentSuperposition::cat(random_complex(rng, 2.5, 0.3));
    std::uniform_real_distribution<double> time(0.0, 10.0);
    const auto probs = resonant_detection_probs(field, 1.0, time(rng));
    c.require(std::abs(probs.g_to_g + probs.g_to_e - 1.0) < 1e-12,
              "probe probabilities do not sum to 1");
  }

  const auto compass = CoherentSuperposition::compass(cplx(2.0, 0.0));
  const int cutoff = default_cutoff(compass);
  const FockVector fock = to_fock(compass, cutoff);
  const AtomState ground{0.0, 1.0};
  for (double t : {0.5, 1.0, M_PI / 2.0, 3.0}) {
    const auto closed = resonant_detection_probs(compass, 1.0, t, cutoff);
    const auto evolved = jc_propagate(fock, ground, 1.0, 0.0, t);
    const double p_gg = evolved.g_part.squaredNorm();
    c.require(std::abs(closed.g_to_g - p_gg) < 1e-10,
              "JC oracle gap " + std::to_string(std::abs(closed.g_to_g - p_gg)));
  }

  for (double a : {3.0, 4.0, 5.0}) {
    const double t_max = 2.0 * M_PI * a * 1.3;
    const int samples = 4096;
    const double t_compass = revival_time_estimate(
        revival_trace(CoherentSuperposition::compass(a), 1.0, t_max, samples));
    const double t_cat = revival_time_estimate(
        revival_trace(CoherentSuperposition::cat(a), 1.0, t_max, samples));
    const double t_coherent = revival_time_estimate(
        revival_trace(CoherentSuperposition::coherent(a), 1.0, t_max, samples));
    c.require(t_compass < t_cat && t_cat < t_coherent,
              "revival ordering broken at |alpha|=" + std::to_string(a) +
                  ": " + std::to_string(t_compass) + ", " +
                  std::to_string(t_cat) + ", " + std::to_string(t_coherent));
  }
}

double dispersive_infidelity(double delta_over_g, double phi) {
  const double g = 1.0;
  const double delta = delta_over_g;
  const double tau = phi * delta / (g * g);
  const FockVector field =
      to_fock(CoherentSuperposition::coherent(1.0), default_cutoff(1.0));
  const AtomState atom = ramsey_atom(0.0, 0.0);
  const auto exact = jc_propagate(field, atom, g, delta, tau);
  const auto effective =
      dispersive_effective_map(field, atom, g * g / delta, delta, tau);
  return 1.0 - std::norm(exact.inner(effective));
}

// Criterion 9: dispersive-limit convergence.
void check_dispersive_limit(Check& c) {
  const double i10 = dispersive_infidelity(10.0, M_PI / 8.0);
  const double i20 = dispersive_infidelity(20.0, M_PI / 8.0);
  const double ratio = i10 / i20;
  c.require(ratio >= 2.0 && ratio <= 8.0,
            "infidelity ratio " + std::to_string(ratio));
}

// Criterion 10: undetected-atom robustness.
void check_undetected_atom(Check& c) {
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 5; ++trial) {
    const cplx alpha = random_complex(rng, 2.5, 0.3);
    const double eta1 = angle(rng);
    const double eta2 = angle(rng);
    const double theta1 = eta1 + M_PI / 4.0;
    const double theta2 = eta2 + M_PI / 2.0;
    const double delta_t = (trial % 2) ? angle(rng) : 0.0;

    // Atom A detected, producing the two-component field.
    const auto after_a =
        dispersive_pass(CoherentSuperposition::coherent(alpha),
                        ramsey_atom(eta1, theta1), M_PI / 4.0, 0.0);
    const auto field_a =
        normalize(conditional_project(after_a, {ramsey_atom(0.0, 0.0)}).first);

    const auto ensemble = undetected_atom_pass(field_a, M_PI / 4.0, delta_t);
    double total_prob = 0.0;
    for (const auto& [p, branch_field] : ensemble) {
      total_prob += p;
      const auto after_b = dispersive_pass(
          branch_field, ramsey_atom(eta2, theta2), M_PI / 2.0, 0.0);
      const auto final_field = normalize(
          conditional_project(after_b, {ramsey_atom(0.0, 0.0)}).first);
      const auto target =
          CoherentSuperposition::compass(alpha * std::exp(-kI * delta_t));
      const double f = fidelity(final_field, target);
      c.require(f >= 1.0 - 1e-10,
                "branch fidelity " + std::to_string(f) + " at trial " +
                    std::to_string(trial));
    }
    c.require(std::abs(total_prob - 1.0) < 1e-10,
              "ensemble probabilities sum to " + std::to_string(total_prob));
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  const struct {
    int id;
    const char* name;
    std::function<void(Check&)> fn;
  } criteria[] = {
      {1, "compass preparation exactness", check_preparation},
      {2, "Wigner triple-oracle agreement", check_wigner_oracles},
      {3, "chessboard onset and sub-Planck tile", check_chessboard},
      {4, "grid normalization and symmetry", check_normalization_symmetry},
      {5, "joint-probability identities", check_joint_probability},
      {6, "decoherence vs Lindblad oracle", check_decoherence},
      {7, "mod-4 photon support", check_photon_statistics},
      {8, "probe identities and revival ordering", check_probe},
      {9, "dispersive-limit convergence", check_dispersive_limit},
      {10, "undetected-atom robustness", check_undetected_atom},
  };

  std::vector<CriterionResult> results;
  for (const auto& criterion : criteria) {
    CriterionResult r;
    r.id = criterion.id;
    r.name = criterion.name;
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      criterion.fn(check);
      r.passed = check.ok;
      r.detail = check.detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (progress) {
      *progress << "criterion " << r.id << " (" << r.name
                << "): " << (r.passed ? "PASS" : "FAIL");
      if (!r.passed && !r.detail.empty()) *progress << " [" << r.detail << "]";
      *progress << " (" << r.elapsed_s << " s)\n";
      progress->flush();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace subplanck
