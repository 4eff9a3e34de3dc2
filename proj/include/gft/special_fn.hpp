#pragma once

// Gamma-function machinery. Every coefficient formula in the library is a
// ratio of gamma functions; these are always formed in log space so that
// indices in the tens of thousands neither overflow nor lose digits.

#include <array>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "gft/error.hpp"

namespace gft {

/// ln Γ(x) for x > 0.
inline double log_gamma(double x) {
  detail::require(x > 0.0 && std::isfinite(x), Errc::domain, "log_gamma requires a finite x > 0", "x");
  return boost::math::lgamma(x);
}

namespace detail {

// Below this both arguments are shifted up by the recurrence before the
// asymptotic series is used.
inline constexpr double kStirlingThreshold = 10.0;

// Σ B_{2n} / (2n(2n-1) x^{2n-1}) for n = 1..8; truncation error < 1e-16 at x = 10.
inline double stirling_tail(double x) {
  static constexpr std::array<double, 8> c = {
      1.0 / 12.0,   -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inv2 + *it;
  return acc * inv;
}

}  // namespace detail

/// ln Γ(b+d) − ln Γ(b) for an offset d given exactly. Passing d
/// separately matters when b+d is not representable: for Γ(ν+τ)/Γ(ν+μ)
/// at large ν, rounding ν+μ alone costs ψ(ν)·ulp(ν) ≈ 1e-12 relative,
/// while the ratio itself only depends on b through ψ(b+d) − ψ(b) ≈ d/b.
inline double log_gamma_ratio_delta(double b, double d) {
  detail::require(b > 0.0 && std::isfinite(b), Errc::domain, "log_gamma_ratio requires b > 0", "b");
  detail::require(std::isfinite(d) && b + d > 0.0, Errc::domain, "log_gamma_ratio requires b + d > 0", "a");
  if (d == 0.0) return 0.0;

  // ln Γ(x) = ln Γ(x+1) − ln x, applied to both arguments in step
  double shift = 0.0;
  while (b < detail::kStirlingThreshold || b + d < detail::kStirlingThreshold) {
    shift -= std::log1p(d / b);
    b += 1.0;
  }

  // (a−½)ln a − (b−½)ln b − (a−b) = (b−½)·log1p(d/b) + d·ln a − d
  const double a = b + d;
  const double lead = (b - 0.5) * std::log1p(d / b) + d * (std::log(a) - 1.0);
  return shift + lead + (detail::stirling_tail(a) - detail::stirling_tail(b));
}

/// ln Γ(a) − ln Γ(b) without forming either log-gamma separately, so
/// the ratio keeps full relative precision for large close arguments.
inline double log_gamma_ratio(double a, double b) {
  detail::require(a > 0.0 && std::isfinite(a), Errc::domain, "log_gamma_ratio requires a > 0", "a");
  detail::require(b > 0.0 && std::isfinite(b), Errc::domain, "log_gamma_ratio requires b > 0", "b");
  return log_gamma_ratio_delta(b, a - b);
}

/// Φ(ν) = Γ(ν+τ)Γ(μ+1) / (Γ(ν+μ)Γ(τ+1)).
///
/// The ratio between consecutive indices is (ν+τ)/(ν+μ), so Φ is
/// non-decreasing in ν for τ ≥ μ and non-increasing for τ ≤ μ.
/// Returns exactly 1 when τ == μ.
inline double gamma_ratio(int nu, double tau, double mu) {
  detail::require(nu >= 1, Errc::domain, "gamma_ratio requires nu >= 1", "nu");
  detail::require(tau > 0.0 && tau <= 1.0, Errc::domain, "gamma_ratio requires 0 < tau <= 1", "tau");
  detail::require(mu > 0.0 && mu <= 1.0, Errc::domain, "gamma_ratio requires 0 < mu <= 1", "mu");
  if (tau == mu) return 1.0;
  const double n = static_cast<double>(nu);
  return std::exp(log_gamma_ratio_delta(n + mu, tau - mu) + log_gamma_ratio_delta(tau + 1.0, mu - tau));
}

/// Rising factorial (λ)_k = Γ(λ+k)/Γ(λ).
inline double pochhammer(double lambda, int k) {
  detail::require(lambda > 0.0 && std::isfinite(lambda), Errc::domain, "pochhammer requires lambda > 0", "lambda");
  detail::require(k >= 0, Errc::domain, "pochhammer requires k >= 0", "k");
  // Exact products for the small integer orders that appear in the
  // extremal coefficients.
  if (k <= 64) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= lambda + i;
    return p;
  }
  return std::exp(log_gamma_ratio_delta(lambda, k));
}

}  // namespace gft
