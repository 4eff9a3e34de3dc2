#pragma once

// Distortion envelopes for |f(z)| and |T^{β,α}f(z)| over the class, and the
// radii of starlikeness and convexity obtained by scanning the index ν.

#include <algorithm>
#include <cmath>

#include "gft/classify.hpp"
#include "gft/error.hpp"
#include "gft/special_fn.hpp"

namespace gft {

struct Interval {
  double lo;
  double hi;

  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

namespace detail {

inline void require_radius(double r) {
  require(r >= 0.0 && r < 1.0, Errc::domain, "radius r must satisfy 0 <= r < 1", "r");
}

inline Interval envelope(double scale, double r, double spread) {
  return {std::max(0.0, scale * r * (1.0 - spread)), scale * r * (1.0 + spread)};
}

}  // namespace detail

/// r ∓ C r^{k+1} with C the extremal coefficient. The lower edge is
/// attained by the extremal function on the positive real axis.
inline Interval distortion_function(const ClassParams& p, double r) {
  detail::require_radius(r);
  return detail::envelope(1.0, r, extremal_coefficient(p) * std::pow(r, p.k()));
}

/// ω(ν) = (β+1)_{ν−1} / (α+1)_{ν−1}, the factor T^{β,α} puts on a_ν
/// relative to its leading coefficient β/α. This is Φ(ν) with (τ, μ)
/// replaced by (β, α_op), which keeps full precision for large ν.
inline double omega(double beta, double alpha_op, int nu) {
  return gamma_ratio(nu, beta, alpha_op);
}

/// (β/α) r (1 ∓ r^k ω(k+1) C) for |T^{β,α} f(z)| with |z| = r, lower edge
/// clamped at zero.
///
/// The envelope needs ω(ν) ≤ ω(k+1) for every ν, which holds exactly when
/// β ≤ α_op. For β > α_op it fails on members of the class (for example
/// k = 1, τ = μ = 1, δ = γ = 0, β = 1, α_op = 0.5, f = z − z³ at |z| = 0.9),
/// so that direction is rejected.
inline Interval distortion_operator(const ClassParams& p, double beta, double alpha_op, double r) {
  detail::require(beta > 0.0 && beta <= 1.0, Errc::domain, "beta must lie in (0, 1]", "beta");
  detail::require(alpha_op > 0.0 && alpha_op <= 1.0, Errc::domain, "alpha_op must lie in (0, 1]", "alpha_op");
  detail::require(beta <= alpha_op, Errc::domain,
                  "operator distortion envelope requires beta <= alpha_op", "beta");
  detail::require_radius(r);
  const int k = p.k();
  const double spread = std::pow(r, k) * extremal_coefficient(p) * pochhammer(beta + 1.0, k) /
                        pochhammer(alpha_op + 1.0, k);
  return detail::envelope(beta / alpha_op, r, spread);
}

enum class RadiusKind { starlike, convex };

struct RadiusResult {
  double r;
  int nu_star;  // 0 when capped
  bool capped;
};

struct ScanOptions {
  int scan_limit = 10000;
  int patience = 64;
};

namespace detail {

inline void require_order(double alpha) {
  require(alpha >= 0.0 && alpha < 1.0, Errc::domain, "order alpha must satisfy 0 <= alpha < 1", "alpha");
}

}  // namespace detail

/// t(ν) = (1−α)(1+δν−δ)Φ(ν) / ((ν−α)(1−γ)), divided by ν for convexity.
inline double radius_base(const ClassParams& p, double alpha, int nu, RadiusKind kind) {
  detail::require_order(alpha);
  detail::require(nu >= p.k() + 1, Errc::index, "index nu must be >= k+1", "nu");
  double t = (1.0 - alpha) * p.weight(nu) / ((nu - alpha) * (1.0 - p.gamma()));
  if (kind == RadiusKind::convex) t /= nu;
  return t;
}

/// t(ν)^{1/(ν−1)}: the exact radius for the single-term member z − a_ν z^ν
/// with a_ν at its maximum, before capping at 1.
inline double radius_term(const ClassParams& p, double alpha, int nu, RadiusKind kind) {
  return std::exp(std::log(radius_base(p, alpha, nu, kind)) / (nu - 1));
}

/// Infimum of radius_term over ν = k+1 .. scan_limit. The scan stops early
/// once a minimum below 1 is established and t(ν) > 1 has failed to
/// improve it for `patience` consecutive indices.
inline RadiusResult radius(const ClassParams& p, double alpha, RadiusKind kind, ScanOptions opts = {}) {
  detail::require_order(alpha);
  detail::require(opts.scan_limit >= 1 && opts.patience >= 1, Errc::domain, "scan limits must be positive", "scan_limit");
  const int first = p.k() + 1;
  const int last = std::max(first, opts.scan_limit);
  double best = radius_term(p, alpha, first, kind);
  int best_nu = first;
  int stale = 0;
  for (int nu = first + 1; nu <= last; ++nu) {
    const double t = radius_base(p, alpha, nu, kind);
    const double term = std::exp(std::log(t) / (nu - 1));
    if (term < best) {
      best = term;
      best_nu = nu;
      stale = 0;
    } else if (++stale >= opts.patience && best < 1.0 && t > 1.0) {
      break;
    }
  }
  if (best >= 1.0) return {1.0, 0, true};
  return {best, best_nu, false};
}

inline RadiusResult radius_starlike(const ClassParams& p, double alpha, ScanOptions opts = {}) {
  return radius(p, alpha, RadiusKind::starlike, opts);
}

inline RadiusResult radius_convex(const ClassParams& p, double alpha, ScanOptions opts = {}) {
  return radius(p, alpha, RadiusKind::convex, opts);
}

}  // namespace gft
