#include "subplanck/states.hpp"

#include <cmath>
#include <utility>

namespace subplanck {

cplx overlap(cplx alpha, cplx beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) +
                  std::conj(beta) * alpha);
}

CoherentSuperposition::CoherentSuperposition(std::vector<CoherentTerm> terms,
                                             bool normalized)
    : terms_(std::move(terms)), normalized_(normalized) {
  if (terms_.empty())
    fail(ErrorCode::kInvalidArgument, "superposition needs at least one term");
  bool any = false;
  for (const auto& t : terms_) any = any || std::abs(t.weight) > 0.0;
  if (!any)
    fail(ErrorCode::kInvalidArgument, "all superposition weights are zero");
}

CoherentSuperposition CoherentSuperposition::coherent(cplx alpha) {
  return CoherentSuperposition({{1.0, alpha}}, true);
}

CoherentSuperposition CoherentSuperposition::cat(cplx alpha) {
  return normalize(CoherentSuperposition({{1.0, alpha}, {1.0, -alpha}}));
}

CoherentSuperposition CoherentSuperposition::compass(cplx alpha) {
  const cplx i(0.0, 1.0);
  return normalize(CoherentSuperposition(
      {{1.0, alpha}, {1.0, i * alpha}, {1.0, -alpha}, {1.0, -i * alpha}}));
}

double CoherentSuperposition::max_center_magnitude() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.center));
  return m;
}

CoherentSuperposition CoherentSuperposition::scaled(cplx factor) const {
  std::vector<CoherentTerm> out = terms_;
  for (auto& t : out) t.weight *= factor;
  return CoherentSuperposition(std::move(out), false);
}

CoherentSuperposition CoherentSuperposition::rotated(double angle) const {
  const cplx phase = std::exp(cplx(0.0, angle));
  std::vector<CoherentTerm> out = terms_;
  for (auto& t : out) t.center *= phase;
  return CoherentSuperposition(std::move(out), normalized_);
}

double FockVector::norm() const {
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  return std::sqrt(n2);
}

cplx inner_product(const CoherentSuperposition& a,
                   const CoherentSuperposition& b) {
  cplx acc = 0.0;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc += std::conj(ta.weight) * tb.weight * overlap(tb.center, ta.center);
  return acc;
}

double norm_squared(const CoherentSuperposition& s) {
  return inner_product(s, s).real();
}

CoherentSuperposition normalize(const CoherentSuperposition& s) {
  const double n2 = norm_squared(s);
  if (!(n2 > 1e-300))
    fail(ErrorCode::kDegenerateState,
         "superposition norm underflows; weights cancel");
  std::vector<CoherentTerm> out = s.terms();
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& t : out) t.weight *= scale;
  return CoherentSuperposition(std::move(out), true);
}

std::vector<cplx> coherent_fock_amplitudes(cplx alpha, int cutoff) {
  if (cutoff < 0) fail(ErrorCode::kInvalidArgument, "cutoff must be >= 0");
  std::vector<cplx> a(static_cast<std::size_t>(cutoff) + 1);
  a[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cutoff; ++n)
    a[n] = a[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  return a;
}

FockVector to_fock(const CoherentSuperposition& s, int cutoff) {
  if (cutoff < 0) fail(ErrorCode::kInvalidArgument, "cutoff must be >= 0");
  FockVector f;
  f.cutoff = cutoff;
  f.amplitudes.assign(static_cast<std::size_t>(cutoff) + 1, 0.0);
  for (const auto& t : s.terms()) {
    const auto a = coherent_fock_amplitudes(t.center, cutoff);
    for (int n = 0; n <= cutoff; ++n) f.amplitudes[n] += t.weight * a[n];
  }
  const double exact = std::sqrt(norm_squared(s));
  f.cutoff_adequate = f.norm() >= (1.0 - 1e-6) * exact;
  return f;
}

std::vector<double> photon_distribution(const CoherentSuperposition& s,
                                        int cutoff) {
  const FockVector f = to_fock(s, cutoff);
  std::vector<double> p(f.amplitudes.size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(f.amplitudes[n]);
  return p;
}

double fidelity(const CoherentSuperposition& a,
                const CoherentSuperposition& b) {
  if (!a.is_normalized() || !b.is_normalized())
    fail(ErrorCode::kNotNormalized, "fidelity requires normalized states");
  return std::norm(inner_product(a, b));
}

int default_cutoff(double alpha_max) {
  const double m2 = alpha_max * alpha_max;
  return static_cast<int>(std::ceil(m2 + 10.0 * std::sqrt(m2 + 1.0) + 20.0));
}

int default_cutoff(const CoherentSuperposition& s) {
  return default_cutoff(s.max_center_magnitude());
}

}  // namespace subplanck
