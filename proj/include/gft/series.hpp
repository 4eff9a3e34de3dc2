#pragma once

// Normalized negative-coefficient functions f(z) = z − Σ_{ν>k} a_ν z^ν,
// stored as finite sparse truncations, and their evaluation on the disk.

#include <atomic>
#include <cmath>
#include <complex>
#include <iostream>
#include <map>
#include <utility>

#include "gft/error.hpp"

namespace gft {

using Complex = std::complex<double>;

namespace detail {

inline Complex ipow(Complex z, int n) {
  Complex r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

// Σ coefficient(ν, a) · z^{exponent(ν)} over an ascending map, accumulated
// from the highest exponent down: acc ← acc·z^{gap} + c.
template <class Terms, class Exponent, class Coefficient>
Complex sparse_horner(const Terms& terms, Complex z, Exponent exponent, Coefficient coefficient) {
  if (terms.empty()) return {0.0, 0.0};
  Complex acc{0.0, 0.0};
  int prev = 0;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const int e = exponent(it->first);
    const double c = coefficient(it->first, it->second);
    acc = first ? Complex{c, 0.0} : acc * ipow(z, prev - e) + c;
    prev = e;
    first = false;
  }
  return acc * ipow(z, prev);
}

inline void warn_outside_disk(Complex z) {
  static std::atomic<bool> warned{false};
  if (std::abs(z) >= 1.0 && !warned.exchange(true)) {
    std::clog << "gft: warning: series evaluated at |z| = " << std::abs(z)
              << " >= 1, outside the unit disk\n";
  }
}

}  // namespace detail

/// f(z) = z − Σ a_ν z^ν with a_ν ≥ 0 stored for ν ≥ k+1. The leading
/// coefficient 1 is implicit; indices not stored read as zero.
class GapSeries {
 public:
  using Coefficients = std::map<int, double>;

  explicit GapSeries(int k, Coefficients coeffs = {}) : k_(k), coeffs_(std::move(coeffs)) {
    detail::require(k_ >= 1, Errc::domain, "gap index k must be >= 1", "k");
    for (const auto& [nu, a] : coeffs_) {
      detail::require(nu >= k_ + 1, Errc::index, "coefficient index nu must be >= k+1", "nu");
      detail::require(std::isfinite(a) && a >= 0.0, Errc::domain,
                      "coefficients must be finite and nonnegative", "a");
    }
  }

  static GapSeries identity(int k) { return GapSeries(k); }

  static GapSeries monomial(int k, int nu, double a) { return GapSeries(k, {{nu, a}}); }

  int gap() const noexcept { return k_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  double coefficient(int nu) const noexcept {
    const auto it = coeffs_.find(nu);
    return it == coeffs_.end() ? 0.0 : it->second;
  }

  /// Truncation order N: the largest stored index, or k when nothing is stored.
  int order() const noexcept { return coeffs_.empty() ? k_ : coeffs_.rbegin()->first; }

  friend bool operator==(const GapSeries&, const GapSeries&) = default;

 private:
  int k_;
  Coefficients coeffs_;
};

inline void require_same_gap(const GapSeries& f, const GapSeries& g) {
  detail::require(f.gap() == g.gap(), Errc::gap_mismatch, "series have different gap index k", "k");
}

/// f(z)
inline Complex evaluate(const GapSeries& f, Complex z) {
  detail::warn_outside_disk(z);
  return z - detail::sparse_horner(
                 f.coefficients(), z, [](int nu) { return nu; }, [](int, double a) { return a; });
}

/// f′(z) = 1 − Σ ν a_ν z^{ν−1}
inline Complex evaluate_derivative(const GapSeries& f, Complex z) {
  detail::warn_outside_disk(z);
  return 1.0 - detail::sparse_horner(
                   f.coefficients(), z, [](int nu) { return nu - 1; },
                   [](int nu, double a) { return nu * a; });
}

/// f″(z) = −Σ ν(ν−1) a_ν z^{ν−2}
inline Complex evaluate_second_derivative(const GapSeries& f, Complex z) {
  detail::warn_outside_disk(z);
  return -detail::sparse_horner(
      f.coefficients(), z, [](int nu) { return nu - 2; },
      [](int nu, double a) { return static_cast<double>(nu) * (nu - 1) * a; });
}

/// f * ψ = z − Σ a_ν λ_ν z^ν over indices stored in both series.
inline GapSeries modified_convolution(const GapSeries& f, const GapSeries& psi) {
  require_same_gap(f, psi);
  GapSeries::Coefficients out;
  for (const auto& [nu, a] : f.coefficients()) {
    const auto it = psi.coefficients().find(nu);
    if (it != psi.coefficients().end()) out.emplace(nu, a * it->second);
  }
  return GapSeries(f.gap(), std::move(out));
}

/// Real-coefficient polynomial with sparse nonnegative integer exponents.
/// Holds the images of the fractional operators, whose leading and
/// trailing coefficients no longer fit the normalized form.
class SparsePolynomial {
 public:
  using Terms = std::map<int, double>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(Terms terms) : terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_) {
      detail::require(e >= 0, Errc::domain, "polynomial exponents must be >= 0", "exponent");
      (void)c;
    }
  }

  const Terms& terms() const noexcept { return terms_; }

  double coefficient(int e) const noexcept {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
  }

  Complex evaluate(Complex z) const {
    return detail::sparse_horner(
        terms_, z, [](int e) { return e; }, [](int, double c) { return c; });
  }

  SparsePolynomial derivative() const {
    Terms out;
    for (const auto& [e, c] : terms_)
      if (e > 0) out.emplace(e - 1, e * c);
    return SparsePolynomial(std::move(out));
  }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  Terms terms_;
};

inline SparsePolynomial to_polynomial(const GapSeries& f) {
  SparsePolynomial::Terms t{{1, 1.0}};
  for (const auto& [nu, a] : f.coefficients()) t.emplace(nu, -a);
  return SparsePolynomial(std::move(t));
}

}  // namespace gft
