#pragma once

// Fractional integral and derivative in the complex plane, and the
// Tremblay operator, realized as exact transforms on power-function
// coefficients. On z^p the Riemann-Liouville integrals have closed forms
//
//   I^σ z^p = Γ(p+1)/Γ(p+1+σ) z^{p+σ},   D^σ z^p = Γ(p+1)/Γ(p+1−σ) z^{p−σ},
//
// so nothing here integrates numerically. The quadrature check of the
// defining integral lives in the oracle.

#include <cmath>
#include <map>
#include <utility>

#include "gft/error.hpp"
#include "gft/series.hpp"
#include "gft/special_fn.hpp"

namespace gft {

/// Generalized power series Σ c_p z^p with real exponents p ≥ 0.
class FracSeries {
 public:
  using Terms = std::map<double, double>;

  FracSeries() = default;
  explicit FracSeries(Terms terms) : terms_(std::move(terms)) {
    for (const auto& [p, c] : terms_) {
      detail::require(std::isfinite(p) && p >= 0.0, Errc::domain, "exponents must be finite and >= 0", "p");
      detail::require(std::isfinite(c), Errc::domain, "coefficients must be finite", "c");
    }
  }

  static FracSeries monomial(double p, double c = 1.0) { return FracSeries(Terms{{p, c}}); }

  static FracSeries from(const GapSeries& f) {
    Terms t{{1.0, 1.0}};
    for (const auto& [nu, a] : f.coefficients()) t.emplace(static_cast<double>(nu), -a);
    return FracSeries(std::move(t));
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of the term whose exponent lies within `tol` of p, or 0.
  double coefficient_near(double p, double tol = 1e-9) const {
    auto it = terms_.lower_bound(p - tol);
    return (it != terms_.end() && it->first <= p + tol) ? it->second : 0.0;
  }

  /// z^s · this
  FracSeries shifted(double s) const {
    Terms out;
    for (const auto& [p, c] : terms_) add_term(out, p + s, c);
    return FracSeries(std::move(out));
  }

  FracSeries scaled(double factor) const {
    Terms out;
    for (const auto& [p, c] : terms_) out.emplace(p, c * factor);
    return FracSeries(std::move(out));
  }

  /// Value at a point of the positive real axis, where every branch is real.
  double evaluate(double x) const {
    detail::require(x > 0.0, Errc::domain, "FracSeries is evaluated on x > 0 only", "x");
    double s = 0.0;
    for (const auto& [p, c] : terms_) s += c * std::pow(x, p);
    return s;
  }

  static void add_term(Terms& t, double p, double c) { t[p] += c; }

 private:
  Terms terms_;
};

/// I^σ: c z^p ↦ c Γ(p+1)/Γ(p+1+σ) z^{p+σ}
inline FracSeries frac_integral(const FracSeries& s, double sigma) {
  detail::require(sigma >= 0.0 && sigma < 1.0, Errc::domain, "order sigma must satisfy 0 <= sigma < 1", "sigma");
  FracSeries::Terms out;
  for (const auto& [p, c] : s.terms())
    FracSeries::add_term(out, p + sigma, c * std::exp(-log_gamma_ratio_delta(p + 1.0, sigma)));
  return FracSeries(std::move(out));
}

/// D^σ: c z^p ↦ c Γ(p+1)/Γ(p+1−σ) z^{p−σ}
///
/// Every exponent must satisfy p ≥ σ so the image stays a power series
/// with nonnegative exponents (this also gives p+1−σ > 0).
inline FracSeries frac_derivative(const FracSeries& s, double sigma) {
  detail::require(sigma >= 0.0 && sigma < 1.0, Errc::domain, "order sigma must satisfy 0 <= sigma < 1", "sigma");
  FracSeries::Terms out;
  for (const auto& [p, c] : s.terms()) {
    detail::require(p + 1.0 - sigma > 0.0 && p >= sigma, Errc::domain,
                    "fractional derivative would produce a negative exponent", "sigma");
    FracSeries::add_term(out, p - sigma, c * std::exp(-log_gamma_ratio_delta(p + 1.0, -sigma)));
  }
  return FracSeries(std::move(out));
}

/// D^{n+σ} = dⁿ/dzⁿ ∘ D^σ. Constant terms differentiate to zero and are
/// dropped; a term whose exponent would fall below zero is an error.
inline FracSeries frac_derivative_n(const FracSeries& s, int n, double sigma) {
  detail::require(n >= 0, Errc::domain, "derivative count n must be >= 0", "n");
  FracSeries cur = frac_derivative(s, sigma);
  for (int step = 0; step < n; ++step) {
    FracSeries::Terms out;
    for (const auto& [p, c] : cur.terms()) {
      if (std::abs(p) <= 1e-12) continue;
      detail::require(p >= 1.0, Errc::domain, "ordinary derivative would produce a negative exponent", "n");
      FracSeries::add_term(out, p - 1.0, c * p);
    }
    cur = FracSeries(std::move(out));
  }
  return cur;
}

/// Orders (τ, μ) of the Tremblay operator T^{τ,μ}.
class TremblayParams {
 public:
  /// 0 < τ ≤ 1, 0 < μ ≤ 1, 0 ≤ τ − μ < 1: the inner operator is a
  /// fractional derivative of order τ − μ.
  static TremblayParams make(double tau, double mu) {
    check_unit(tau, "tau");
    check_unit(mu, "mu");
    detail::require(tau - mu >= 0.0 && tau - mu < 1.0, Errc::domain, "tremblay orders require 0 <= tau - mu < 1", "tau");
    return TremblayParams(tau, mu);
  }

  /// Also admits τ < μ, where the inner operator becomes the fractional
  /// integral of order μ − τ. The coefficient formula is unchanged.
  static TremblayParams make_extended(double tau, double mu) {
    check_unit(tau, "tau");
    check_unit(mu, "mu");
    return TremblayParams(tau, mu);
  }

  double tau() const noexcept { return tau_; }
  double mu() const noexcept { return mu_; }
  double leading() const noexcept { return tau_ / mu_; }

 private:
  TremblayParams(double tau, double mu) : tau_(tau), mu_(mu) {}

  static void check_unit(double v, const char* field) {
    detail::require(v > 0.0 && v <= 1.0, Errc::domain, "tremblay orders must lie in (0, 1]", field);
  }

  double tau_;
  double mu_;
};

/// T^{τ,μ} f(z) = (τ/μ) z − Σ (τ/μ) Φ(ν) a_ν z^ν, using
/// Γ(ν+τ)Γ(μ)/(Γ(ν+μ)Γ(τ)) = (τ/μ)·Φ(ν).
inline SparsePolynomial tremblay(const GapSeries& f, const TremblayParams& p) {
  const double lead = p.leading();
  SparsePolynomial::Terms t{{1, lead}};
  for (const auto& [nu, a] : f.coefficients()) t.emplace(nu, -lead * gamma_ratio(nu, p.tau(), p.mu()) * a);
  return SparsePolynomial(std::move(t));
}

/// (T^{τ,μ} f)′(z) = τ/μ − Σ (τ/μ) ν Φ(ν) a_ν z^{ν−1}
inline SparsePolynomial tremblay_derivative(const GapSeries& f, const TremblayParams& p) {
  const double lead = p.leading();
  SparsePolynomial::Terms t{{0, lead}};
  for (const auto& [nu, a] : f.coefficients())
    t.emplace(nu - 1, -lead * nu * gamma_ratio(nu, p.tau(), p.mu()) * a);
  return SparsePolynomial(std::move(t));
}

/// T^{τ,μ} f assembled from its definition Γ(μ)/Γ(τ) · z^{1−μ} · D^{τ−μ}[z^{τ−1} f]
/// through FracSeries (I^{μ−τ} in place of D when τ < μ). Independent of
/// the closed-form `tremblay` and used to cross-check it.
inline FracSeries tremblay_composed(const GapSeries& f, const TremblayParams& p) {
  const double order = p.tau() - p.mu();
  const FracSeries inner = FracSeries::from(f).shifted(p.tau() - 1.0);
  const FracSeries transformed = order >= 0.0 ? frac_derivative(inner, order) : frac_integral(inner, -order);
  const double prefactor = std::exp(log_gamma(p.mu()) - log_gamma(p.tau()));
  return transformed.shifted(1.0 - p.mu()).scaled(prefactor);
}

}  // namespace gft
