#pragma once

// Constructions that stay inside P_{τ,μ}(k,δ,γ). Averages, convex
// combinations and segments all follow from linearity of the coefficient
// functional; the modified Hadamard product lands in a class of larger
// order ξ.

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "gft/classify.hpp"
#include "gft/error.hpp"
#include "gft/series.hpp"

namespace gft {

/// Nonnegative weights summing to one (within 1e-12).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> q) : q_(std::move(q)) {
    detail::require(!q_.empty(), Errc::weights, "weight vector is empty", "weights");
    double sum = 0.0;
    for (double w : q_) {
      detail::require(std::isfinite(w) && w >= 0.0, Errc::weights, "weights must be nonnegative", "weights");
      sum += w;
    }
    detail::require(std::abs(sum - 1.0) <= 1e-12, Errc::weights, "weights must sum to 1", "weights");
  }

  static WeightVector uniform(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0 / n)); }

  std::span<const double> values() const noexcept { return q_; }
  std::size_t size() const noexcept { return q_.size(); }

 private:
  std::vector<double> q_;
};

/// Θ = Σ q_j f_j, i.e. coefficients Σ_j q_j a_{ν,j}.
inline GapSeries convex_combination(std::span<const GapSeries> fs, const WeightVector& w) {
  detail::require(fs.size() == w.size(), Errc::weights, "number of weights differs from number of series", "weights");
  GapSeries::Coefficients out;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    require_same_gap(fs[0], fs[j]);
    // a zero weight contributes no stored indices
    if (w.values()[j] == 0.0) continue;
    for (const auto& [nu, a] : fs[j].coefficients()) out[nu] += w.values()[j] * a;
  }
  return GapSeries(fs[0].gap(), std::move(out));
}

inline GapSeries average(const GapSeries& f1, const GapSeries& f2) {
  require_same_gap(f1, f2);
  GapSeries::Coefficients out;
  for (const auto& [nu, a] : f1.coefficients()) out[nu] += 0.5 * a;
  for (const auto& [nu, a] : f2.coefficients()) out[nu] += 0.5 * a;
  return GapSeries(f1.gap(), std::move(out));
}

/// Δ = (1−η) f + η h, with ρ_ν = (1−η) a_ν + η λ_ν.
inline GapSeries segment(const GapSeries& f, const GapSeries& h, double eta) {
  require_same_gap(f, h);
  detail::require(eta >= 0.0 && eta <= 1.0, Errc::domain, "eta must lie in [0, 1]", "eta");
  GapSeries::Coefficients out;
  if (eta < 1.0)
    for (const auto& [nu, a] : f.coefficients()) out[nu] += (1.0 - eta) * a;
  if (eta > 0.0)
    for (const auto& [nu, l] : h.coefficients()) out[nu] += eta * l;
  return GapSeries(f.gap(), std::move(out));
}

/// 1 − (1−γ)²(μ+1)_k / ((1+δk)(τ+1)_k): the largest order ξ for which the
/// modified Hadamard product of two members is guaranteed a member.
inline double hadamard_order(const ClassParams& p) {
  return 1.0 - (1.0 - p.gamma()) * extremal_coefficient(p);
}

/// Ξ(ν) = 1 − (1−γ)² / ((1+δν−δ)Φ(ν)); hadamard_order is Ξ(k+1).
inline double hadamard_order_profile(const ClassParams& p, int nu) {
  detail::require(nu >= p.k() + 1, Errc::index, "index nu must be >= k+1", "nu");
  const double g = 1.0 - p.gamma();
  return 1.0 - g * g / p.weight(nu);
}

struct HadamardResult {
  GapSeries omega;
  double xi;
  bool member_at_xi;
};

inline HadamardResult hadamard_with_order(const GapSeries& f, const GapSeries& psi, const ClassParams& p) {
  require_gap(f, p);
  require_gap(psi, p);
  detail::require(is_member(f, p).member, Errc::non_member, "first factor is not a member of the class", "series");
  detail::require(is_member(psi, p).member, Errc::non_member, "second factor is not a member of the class", "series2");
  GapSeries omega = modified_convolution(f, psi);
  const double xi = hadamard_order(p);
  const bool member = membership_at_order(omega, p, xi).member;
  return {std::move(omega), xi, member};
}

}  // namespace gft
