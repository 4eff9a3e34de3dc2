#pragma once

// The class P_{τ,μ}(k,δ,γ): parameters, the coefficient functional
//
//   L(f) = Σ_{ν≥k+1} (1+δν−δ) Φ(ν) a_ν,
//
// and membership, which holds exactly when L(f) ≤ 1 − γ.

#include <cmath>

#include "gft/error.hpp"
#include "gft/fracops.hpp"
#include "gft/series.hpp"
#include "gft/special_fn.hpp"

namespace gft {

/// Values of the functional within this distance above 1 − γ still count
/// as members, so the extremal function classifies as a member.
inline constexpr double kMembershipTolerance = 1e-12;

/// δ = 1 is admitted only on request; it is the range of the τ = μ = 1
/// reduction (including the k = δ = 1 case).
enum class DeltaRange { half_open, closed };

class ClassParams {
 public:
  static ClassParams make(int k, double tau, double mu, double delta, double gamma,
                          DeltaRange delta_range = DeltaRange::half_open) {
    detail::require(k >= 1, Errc::domain, "k must be >= 1", "k");
    detail::require(tau > 0.0 && tau <= 1.0, Errc::domain, "tau must lie in (0, 1]", "tau");
    detail::require(mu > 0.0 && mu <= 1.0, Errc::domain, "mu must lie in (0, 1]", "mu");
    detail::require(tau - mu >= 0.0 && tau - mu < 1.0, Errc::domain, "tau - mu must lie in [0, 1)", "tau");
    const bool delta_ok = delta_range == DeltaRange::closed ? (delta >= 0.0 && delta <= 1.0)
                                                            : (delta >= 0.0 && delta < 1.0);
    detail::require(delta_ok, Errc::domain,
                    delta_range == DeltaRange::closed ? "delta must lie in [0, 1]" : "delta must lie in [0, 1)",
                    "delta");
    detail::require(gamma >= 0.0 && gamma < 1.0, Errc::domain, "gamma must lie in [0, 1)", "gamma");
    detail::require(tau - mu + gamma < 1.0, Errc::domain, "tau - mu + gamma must be < 1", "gamma");
    return ClassParams(k, tau, mu, delta, gamma);
  }

  int k() const noexcept { return k_; }
  double tau() const noexcept { return tau_; }
  double mu() const noexcept { return mu_; }
  double delta() const noexcept { return delta_; }
  double gamma() const noexcept { return gamma_; }

  TremblayParams operator_orders() const { return TremblayParams::make(tau_, mu_); }

  /// (1+δν−δ)·Φ(ν), the weight of a_ν in the coefficient functional.
  double weight(int nu) const { return (1.0 + delta_ * nu - delta_) * gamma_ratio(nu, tau_, mu_); }

 private:
  ClassParams(int k, double tau, double mu, double delta, double gamma)
      : k_(k), tau_(tau), mu_(mu), delta_(delta), gamma_(gamma) {}

  int k_;
  double tau_;
  double mu_;
  double delta_;
  double gamma_;
};

inline void require_gap(const GapSeries& f, const ClassParams& p) {
  detail::require(f.gap() == p.k(), Errc::gap_mismatch, "series gap k differs from the class parameter k", "k");
}

inline double coefficient_functional(const GapSeries& f, const ClassParams& p) {
  require_gap(f, p);
  double sum = 0.0;
  for (const auto& [nu, a] : f.coefficients()) sum += p.weight(nu) * a;
  return sum;
}

struct Membership {
  bool member;
  double functional;
  double margin;  // (1 − order) − functional
};

/// Membership with γ replaced by `order`. Used directly for the Hadamard
/// product, whose guaranteed order need not satisfy τ − μ + order < 1.
inline Membership membership_at_order(const GapSeries& f, const ClassParams& p, double order) {
  const double functional = coefficient_functional(f, p);
  const double margin = (1.0 - order) - functional;
  return {margin >= -kMembershipTolerance, functional, margin};
}

inline Membership is_member(const GapSeries& f, const ClassParams& p) {
  return membership_at_order(f, p, p.gamma());
}

/// (1−γ)(μ+1)_k / ((1+δk)(τ+1)_k)
inline double extremal_coefficient(const ClassParams& p) {
  const int k = p.k();
  return (1.0 - p.gamma()) * pochhammer(p.mu() + 1.0, k) /
         ((1.0 + p.delta() * k) * pochhammer(p.tau() + 1.0, k));
}

/// z − extremal_coefficient(p) z^{k+1}: equality holds in the coefficient bound.
inline GapSeries extremal(const ClassParams& p) {
  return GapSeries::monomial(p.k(), p.k() + 1, extremal_coefficient(p));
}

/// Largest a_ν for which z − a_ν z^ν is a member: (1−γ) / ((1+δν−δ)Φ(ν)).
inline double max_coefficient(const ClassParams& p, int nu) {
  detail::require(nu >= p.k() + 1, Errc::index, "index nu must be >= k+1", "nu");
  if (nu == p.k() + 1) return extremal_coefficient(p);
  return (1.0 - p.gamma()) / p.weight(nu);
}

}  // namespace gft
