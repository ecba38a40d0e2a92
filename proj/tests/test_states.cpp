#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "subplanck/states.hpp"
#include "test_util.hpp"

using namespace subplanck;

namespace {

// Independent number-basis amplitudes via lgamma, no recurrence shared with
// the library implementation.
std::vector<cplx> oracle_coherent(cplx alpha, int cutoff) {
  std::vector<cplx> out(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n)
    out[n] = std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) /
             std::sqrt(std::exp(std::lgamma(n + 1.0)));
  return out;
}

cplx oracle_overlap(cplx alpha, cplx beta, int cutoff) {
  const auto a = oracle_coherent(alpha, cutoff);
  const auto b = oracle_coherent(beta, cutoff);
  cplx acc = 0.0;
  for (int n = 0; n <= cutoff; ++n) acc += std::conj(b[n]) * a[n];
  return acc;
}

std::mt19937 rng(12345);

cplx random_point(double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("coherent overlap basics") {
  CHECK(std::abs(overlap(0.0, 0.0) - 1.0) < 1e-15);
  const cplx a(2.0, 3.0);
  CHECK(std::abs(overlap(a, a) - 1.0) < 1e-14);
  // |<-1|1>| = e^{-2}
  CHECK(std::abs(std::abs(overlap(1.0, -1.0)) - std::exp(-2.0)) < 1e-15);
}

TEST_CASE("overlap matches the number-basis oracle") {
  for (int trial = 0; trial < 20; ++trial) {
    const cplx a = random_point(2.0);
    const cplx b = random_point(2.0);
    CHECK(std::abs(overlap(a, b) - oracle_overlap(a, b, 60)) < 1e-12);
  }
}

TEST_CASE("overlap is Hermitian") {
  for (int trial = 0; trial < 50; ++trial) {
    const cplx a = random_point(3.0);
    const cplx b = random_point(3.0);
    CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) < 1e-14);
  }
}

TEST_CASE("coherent Gram matrices are positive semidefinite") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5;
    Eigen::MatrixXcd gram(n, n);
    std::vector<cplx> centers(n);
    for (int j = 0; j < n; ++j) centers[j] = random_point(2.5);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gram(j, k) = overlap(centers[k], centers[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    CHECK(solver.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("cat and compass factories are normalized") {
  CHECK(std::abs(norm_squared(CoherentSuperposition::cat(cplx(1.0, 0.5))) - 1.0) <
        1e-12);
  CHECK(std::abs(norm_squared(CoherentSuperposition::compass(cplx(0.7, -0.2))) -
                 1.0) < 1e-12);
}

TEST_CASE("compass normalization constant at alpha = 1") {
  // Unit-weight norm^2 is 4 + 4 e^{-2} + 8 e^{-1} cos 1 = 6.13147...
  const CoherentSuperposition raw({{1.0, 1.0},
                                   {1.0, cplx(0.0, 1.0)},
                                   {1.0, -1.0},
                                   {1.0, cplx(0.0, -1.0)}});
  CHECK(std::abs(norm_squared(raw) - 6.1314700157177535) < 1e-12);
  const auto compass = CoherentSuperposition::compass(1.0);
  for (const auto& t : compass.terms())
    CHECK(std::abs(t.weight - cplx(0.40384777604114463)) < 1e-12);
}

TEST_CASE("compass weights approach 1/2 for well-separated components") {
  const auto compass = CoherentSuperposition::compass(6.0);
  for (const auto& t : compass.terms())
    CHECK(std::abs(t.weight - cplx(0.5)) < 1e-10);
}

TEST_CASE("degenerate superpositions are rejected") {
  CHECK_FAILS_WITH(ErrorCode::kDegenerateState,
                   normalize(CoherentSuperposition({{1.0, 0.5}, {-1.0, 0.5}})));
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument, CoherentSuperposition({}));
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument,
                   CoherentSuperposition({{0.0, 1.0}, {0.0, -1.0}}));
}

TEST_CASE("number-basis expansion of the vacuum") {
  const FockVector f = to_fock(CoherentSuperposition::coherent(0.0), 10);
  CHECK(std::abs(f.amplitudes[0] - 1.0) < 1e-15);
  for (int n = 1; n <= 10; ++n) CHECK(std::abs(f.amplitudes[n]) < 1e-15);
  CHECK(f.cutoff_adequate);
}

TEST_CASE("coherent amplitudes match the lgamma oracle") {
  for (const cplx alpha : {cplx(2.0, 0.0), cplx(1.0, -1.5), cplx(0.1, 3.0)}) {
    const auto got = coherent_fock_amplitudes(alpha, 50);
    const auto want = oracle_coherent(alpha, 50);
    for (int n = 0; n <= 50; ++n) CHECK(std::abs(got[n] - want[n]) < 1e-14);
  }
}

TEST_CASE("compass amplitudes vanish except on multiples of four") {
  const FockVector f = to_fock(CoherentSuperposition::compass(2.0), 40);
  for (int n = 0; n <= 40; ++n)
    if (n % 4 != 0) CHECK(std::abs(f.amplitudes[n]) < 1e-14);
  CHECK(std::abs(f.norm() - 1.0) < 1e-10);
}

TEST_CASE("cutoff adequacy flag trips on hard truncation") {
  const FockVector f = to_fock(CoherentSuperposition::coherent(3.0), 3);
  CHECK(!f.cutoff_adequate);
  CHECK(to_fock(CoherentSuperposition::coherent(3.0), default_cutoff(3.0))
            .cutoff_adequate);
}

TEST_CASE("photon distribution of a coherent state is Poissonian") {
  const auto p = photon_distribution(CoherentSuperposition::coherent(1.0), 30);
  for (int n = 0; n <= 30; ++n) {
    const double poisson = std::exp(-1.0 - std::lgamma(n + 1.0));
    CHECK(std::abs(p[n] - poisson) < 1e-14);
  }
}

TEST_CASE("cat photon distribution has even support") {
  const auto p = photon_distribution(CoherentSuperposition::cat(2.0), 40);
  for (int n = 1; n <= 40; n += 2) CHECK(p[n] < 1e-28);
}

TEST_CASE("fidelity basics") {
  const auto compass = CoherentSuperposition::compass(cplx(1.2, 0.4));
  CHECK(std::abs(fidelity(compass, compass) - 1.0) < 1e-12);

  // |<-3|3>|^2 = e^{-36}
  CHECK(std::abs(fidelity(CoherentSuperposition::coherent(3.0),
                          CoherentSuperposition::coherent(-3.0)) -
                 std::exp(-36.0)) < 1e-15);

  // Global phase leaves fidelity untouched.
  std::vector<CoherentTerm> shifted = compass.terms();
  const cplx phase = std::exp(cplx(0.0, 0.9));
  for (auto& t : shifted) t.weight *= phase;
  const CoherentSuperposition rotated_phase(shifted, true);
  CHECK(std::abs(fidelity(compass, rotated_phase) - 1.0) < 1e-12);
}

TEST_CASE("fidelity rejects unnormalized inputs") {
  const auto compass = CoherentSuperposition::compass(1.0);
  CHECK_FAILS_WITH(ErrorCode::kNotNormalized,
                   fidelity(compass.scaled(2.0), compass));
}

TEST_CASE("analytic and number-basis norms agree on random superpositions") {
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CoherentTerm> terms;
    for (int j = 0; j < 4; ++j)
      terms.push_back({random_point(1.0), random_point(2.0)});
    CoherentSuperposition s(terms);
    const double exact = norm_squared(s);
    const FockVector f = to_fock(s, default_cutoff(s));
    CHECK(std::abs(f.norm() * f.norm() - exact) < 1e-10);
  }
}

TEST_CASE("inner products match the number-basis oracle") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = CoherentSuperposition::compass(random_point(1.5));
    const auto b = CoherentSuperposition::cat(random_point(1.5));
    const FockVector fa = to_fock(a, 60);
    const FockVector fb = to_fock(b, 60);
    cplx fock_inner = 0.0;
    for (int n = 0; n <= 60; ++n)
      fock_inner += std::conj(fa.amplitudes[n]) * fb.amplitudes[n];
    CHECK(std::abs(inner_product(a, b) - fock_inner) < 1e-10);
  }
}

TEST_CASE("rotation moves centers, not weights") {
  const auto compass = CoherentSuperposition::compass(2.0);
  const auto rotated = compass.rotated(M_PI / 4.0);
  CHECK(rotated.is_normalized());
  for (std::size_t j = 0; j < compass.size(); ++j) {
    CHECK(std::abs(rotated.terms()[j].weight - compass.terms()[j].weight) <
          1e-15);
    CHECK(std::abs(rotated.terms()[j].center -
                   compass.terms()[j].center * std::exp(cplx(0.0, M_PI / 4.0))) <
          1e-15);
  }
}

TEST_CASE("default cutoff covers the Poisson tail and grows monotonically") {
  CHECK(default_cutoff(0.0) == 30);
  double prev = default_cutoff(0.0);
  for (double a = 0.5; a <= 6.0; a += 0.5) {
    const int c = default_cutoff(a);
    CHECK(c >= prev);
    prev = c;
    // The tail beyond the cutoff must be negligible.
    const auto amps = coherent_fock_amplitudes(cplx(a, 0.0), c);
    double norm2 = 0.0;
    for (const auto& v : amps) norm2 += std::norm(v);
    CHECK(norm2 > 1.0 - 1e-9);
  }
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument, coherent_fock_amplitudes(1.0, -1));
  CHECK_FAILS_WITH(ErrorCode::kInvalidArgument,
                   to_fock(CoherentSuperposition::coherent(1.0), -2));
}
