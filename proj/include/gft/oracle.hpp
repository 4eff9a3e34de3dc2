#pragma once

// Independent numerical checks of the analytic results: the defining
// real-part condition sampled on the disk, starlikeness and convexity
// radii by bisection, distortion containment over random members, and a
// quadrature evaluation of the fractional derivative's defining integral.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gft/bounds.hpp"
#include "gft/classify.hpp"
#include "gft/closure.hpp"
#include "gft/error.hpp"
#include "gft/fracops.hpp"
#include "gft/sampling.hpp"
#include "gft/series.hpp"
#include "gft/special_fn.hpp"

namespace gft {

/// Points r·e^{iθ} with r = r_max·i/n_radial (i = 1..n_radial) and
/// θ = 2πj/n_angular, plus θ = π when n_angular is odd so both real points
/// ±r_max are always sampled. Doubling either count refines the grid to
/// a superset.
class DiskGrid {
 public:
  static DiskGrid make(int n_radial, int n_angular, double r_max) {
    detail::require(n_radial >= 2, Errc::domain, "n_radial must be >= 2", "n_radial");
    detail::require(n_angular >= 8, Errc::domain, "n_angular must be >= 8", "n_angular");
    detail::require(r_max > 0.0 && r_max < 1.0, Errc::domain, "r_max must lie in (0, 1)", "r_max");
    return DiskGrid(n_radial, n_angular, r_max);
  }

  int n_radial() const noexcept { return n_radial_; }
  int n_angular() const noexcept { return n_angular_; }
  double r_max() const noexcept { return r_max_; }

  std::vector<double> radii() const {
    std::vector<double> r(n_radial_);
    for (int i = 0; i < n_radial_; ++i) r[i] = r_max_ * (i + 1) / n_radial_;
    r.back() = r_max_;
    return r;
  }

  std::vector<double> angles() const {
    std::vector<double> t(n_angular_);
    for (int j = 0; j < n_angular_; ++j) t[j] = 2.0 * std::numbers::pi * j / n_angular_;
    if (n_angular_ % 2 == 1) t.push_back(std::numbers::pi);
    return t;
  }

  template <class Fn>
  void for_each_point(Fn&& fn) const {
    const auto th = angles();
    std::vector<Complex> unit(th.size());
    for (std::size_t j = 0; j < th.size(); ++j) unit[j] = std::polar(1.0, th[j]);
    // exact real points on the axis
    for (std::size_t j = 0; j < th.size(); ++j) {
      if (th[j] == 0.0) unit[j] = {1.0, 0.0};
      if (th[j] == std::numbers::pi) unit[j] = {-1.0, 0.0};
    }
    const auto rs = radii();
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (const Complex& u : unit) fn(rs[i] * u, i);
  }

 private:
  DiskGrid(int n_radial, int n_angular, double r_max)
      : n_radial_(n_radial), n_angular_(n_angular), r_max_(r_max) {}

  int n_radial_;
  int n_angular_;
  double r_max_;
};

/// 1 − Σ (1+δν−δ)Φ(ν) a_ν z^{ν−1}: the defining expression after the
/// operator is expanded. Well defined at z = 0.
class SeriesFunctional {
 public:
  SeriesFunctional(const GapSeries& f, const ClassParams& p) {
    require_gap(f, p);
    for (const auto& [nu, a] : f.coefficients()) weighted_.emplace(nu, p.weight(nu) * a);
  }

  Complex operator()(Complex z) const {
    return 1.0 - detail::sparse_horner(
                     weighted_, z, [](int nu) { return nu - 1; }, [](int, double c) { return c; });
  }

 private:
  std::map<int, double> weighted_;
};

/// Γ(μ+1)Γ(τ)/(Γ(τ+1)Γ(μ)) · z^{−1} [(1−δ) T f(z) + δ z (T f)′(z)], evaluated
/// literally from the operator images. Requires z ≠ 0.
class DefinitionFunctional {
 public:
  DefinitionFunctional(const GapSeries& f, const ClassParams& p)
      : prefactor_(std::exp(log_gamma(p.mu() + 1.0) + log_gamma(p.tau()) - log_gamma(p.tau() + 1.0) -
                            log_gamma(p.mu()))),
        delta_(p.delta()),
        image_(tremblay(f, p.operator_orders())),
        image_derivative_(tremblay_derivative(f, p.operator_orders())) {
    require_gap(f, p);
  }

  Complex operator()(Complex z) const {
    return prefactor_ / z * ((1.0 - delta_) * image_.evaluate(z) + delta_ * z * image_derivative_.evaluate(z));
  }

 private:
  double prefactor_;
  double delta_;
  SparsePolynomial image_;
  SparsePolynomial image_derivative_;
};

enum class FunctionalForm { series, definition };

struct GridMinimum {
  double value;
  Complex at;
};

inline GridMinimum grid_minimum(const GapSeries& f, const ClassParams& p, const DiskGrid& g,
                                FunctionalForm form = FunctionalForm::series) {
  GridMinimum best{std::numeric_limits<double>::infinity(), {0.0, 0.0}};
  auto scan = [&](const auto& functional) {
    g.for_each_point([&](Complex z, std::size_t) {
      const double v = functional(z).real();
      if (v < best.value) best = {v, z};
    });
  };
  if (form == FunctionalForm::series)
    scan(SeriesFunctional(f, p));
  else
    scan(DefinitionFunctional(f, p));
  return best;
}

/// Minimum over the grid of the defining real part, series form.
inline double min_real_part_functional(const GapSeries& f, const ClassParams& p, const DiskGrid& g) {
  return grid_minimum(f, p, g).value;
}

/// Minimum of the defining real part along both halves of the real axis,
/// r_lo ≤ |z| ≤ r_hi, on n equally spaced moduli.
inline GridMinimum real_axis_minimum(const GapSeries& f, const ClassParams& p, double r_lo, double r_hi, int n,
                                     FunctionalForm form = FunctionalForm::definition) {
  detail::require(0.0 < r_lo && r_lo <= r_hi && r_hi < 1.0, Errc::domain, "need 0 < r_lo <= r_hi < 1", "r");
  detail::require(n >= 2, Errc::domain, "need at least two samples", "n");
  GridMinimum best{std::numeric_limits<double>::infinity(), {0.0, 0.0}};
  auto scan = [&](const auto& functional) {
    for (int i = 0; i < n; ++i) {
      const double x = r_lo + (r_hi - r_lo) * i / (n - 1);
      for (double sign : {-1.0, 1.0}) {
        const Complex z{sign * x, 0.0};
        const double v = functional(z).real();
        if (v < best.value) best = {v, z};
      }
    }
  };
  if (form == FunctionalForm::series)
    scan(SeriesFunctional(f, p));
  else
    scan(DefinitionFunctional(f, p));
  return best;
}

namespace detail {

inline constexpr int kRadiusAngles = 1024;

inline constexpr int kRadiusSteps = 256;

// Largest r in (0, 1] with min_on_circle ≥ alpha on every circle up to r.
// While the quotient is harmonic the minimum over |z| ≤ r sits on the
// circle, so the predicate is monotone up to the first zero of the
// denominator, and the quotient always drops below alpha just before that
// zero. Past it the circle can look admissible again, so the first failing
// radius is located by an outward scan and then refined by bisection.
template <class MinOnCircle>
double bisect_radius(MinOnCircle min_on_circle, double alpha, double tol) {
  require(tol > 0.0 && tol < 0.5, Errc::domain, "tolerance must lie in (0, 0.5)", "tol");
  const double top = 1.0 - tol / 4.0;
  double lo = 0.0;
  double hi = 0.0;
  for (int i = 1; i <= kRadiusSteps; ++i) {
    const double r = i == kRadiusSteps ? top : top * i / kRadiusSteps;
    if (min_on_circle(r) < alpha) {
      hi = r;
      break;
    }
    lo = r;
  }
  if (hi == 0.0) return 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (min_on_circle(mid) >= alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

template <class Quotient>
double min_on_circle(double r, Quotient q) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kRadiusAngles; ++j) {
    const Complex z = j == 0 ? Complex{r, 0.0} : std::polar(r, 2.0 * std::numbers::pi * j / kRadiusAngles);
    const double v = q(z);
    // a zero of the denominator ends the admissible disk
    if (!std::isfinite(v)) return -std::numeric_limits<double>::infinity();
    m = std::min(m, v);
  }
  return m;
}

}  // namespace detail

/// Largest r with Re(z f′/f) ≥ α on |z| = r, to within tol. 1 when no
/// violation occurs inside the unit disk.
inline double numeric_radius_starlike(const GapSeries& f, double alpha, double tol = 1e-7) {
  detail::require_order(alpha);
  if (f.empty()) return 1.0;
  return detail::bisect_radius(
      [&](double r) {
        return detail::min_on_circle(r, [&](Complex z) {
          const Complex fz = evaluate(f, z);
          if (std::abs(fz) < 1e-300) return std::numeric_limits<double>::quiet_NaN();
          return (z * evaluate_derivative(f, z) / fz).real();
        });
      },
      alpha, tol);
}

/// Largest r with Re(1 + z f″/f′) ≥ α on |z| = r, to within tol.
inline double numeric_radius_convex(const GapSeries& f, double alpha, double tol = 1e-7) {
  detail::require_order(alpha);
  if (f.empty()) return 1.0;
  return detail::bisect_radius(
      [&](double r) {
        return detail::min_on_circle(r, [&](Complex z) {
          const Complex d1 = evaluate_derivative(f, z);
          if (std::abs(d1) < 1e-300) return std::numeric_limits<double>::quiet_NaN();
          return (1.0 + z * evaluate_second_derivative(f, z) / d1).real();
        });
      },
      alpha, tol);
}

/// One failed check. Lists of these are sorted before reporting so the
/// order never depends on evaluation order.
struct Violation {
  std::string check;
  std::string detail;
  double error;

  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.check, a.detail, a.error) < std::tie(b.check, b.detail, b.error);
  }
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  Report(std::string suite_name, std::uint64_t seed_value) : suite(std::move(suite_name)), seed(seed_value) {}

  std::string suite;
  std::uint64_t seed = 0;
  long long cases = 0;
  std::vector<Violation> violations;
  double max_error = 0.0;

  void record(double error) { max_error = std::max(max_error, error); }
  void fail(std::string check, std::string detail, double error) {
    violations.push_back({std::move(check), std::move(detail), error});
  }
  void finish() { std::sort(violations.begin(), violations.end()); }
  bool passed() const { return violations.empty(); }
};

namespace detail {

inline std::string describe(const GapSeries& f) {
  std::ostringstream os;
  os.precision(17);
  os << "k=" << f.gap() << " {";
  bool first = true;
  for (const auto& [nu, a] : f.coefficients()) {
    os << (first ? "" : ", ") << nu << ": " << a;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace detail

struct DistortionOptions {
  int n_radii = 64;
  int n_angles = 64;
  double r_max = 0.999;
  double slack = 1e-9;
};

/// Draws `n_samples` random members and checks that |f(z)| and
/// |T^{β,α} f(z)| lie in their distortion envelopes at every sampled
/// point. `max_error` is the largest excursion outside either envelope
/// (0 when all points are inside).
inline Report check_distortion(const ClassParams& p, double beta, double alpha_op, int n_samples,
                               std::uint64_t seed, DistortionOptions opts = {}) {
  detail::require(n_samples >= 0, Errc::domain, "n_samples must be >= 0", "n_samples");
  const auto orders = TremblayParams::make_extended(beta, alpha_op);
  const DiskGrid grid = DiskGrid::make(opts.n_radii, opts.n_angles, opts.r_max);
  std::vector<Interval> fn_env, op_env;
  for (double r : grid.radii()) {
    fn_env.push_back(distortion_function(p, r));
    op_env.push_back(distortion_operator(p, beta, alpha_op, r));
  }

  Report rep("distortion", seed);
  Rng rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    const GapSeries f = random_member(p, rng);
    const SparsePolynomial image = tremblay(f, orders);
    grid.for_each_point([&](Complex z, std::size_t ring) {
      ++rep.cases;
      auto check = [&](const char* name, double m, const Interval& env) {
        const double excess = std::max({env.lo - m, m - env.hi, 0.0});
        rep.record(excess);
        if (excess > opts.slack) {
          std::ostringstream os;
          os.precision(17);
          os << "sample " << s << " " << detail::describe(f) << " z=" << z << " modulus=" << m << " envelope=["
             << env.lo << ", " << env.hi << "]";
          rep.fail(name, os.str(), excess);
        }
      };
      check("function_envelope", std::abs(evaluate(f, z)), fn_env[ring]);
      check("operator_envelope", std::abs(image.evaluate(z)), op_env[ring]);
    });
  }
  rep.finish();
  return rep;
}

/// (1/Γ(1−σ)) d/dx ∫₀ˣ ζ^p (x−ζ)^{−σ} dζ at a point of the positive real
/// axis. The substitution ζ = x(1 − u^{1/(1−σ)}) absorbs the endpoint
/// singularity, leaving (x^{1−σ}/(1−σ)) ∫₀¹ ζ(u)^p du; d/dx is a central
/// difference with step 1e-5.
inline double quadrature_spot_check(double p_exponent, double sigma, double x) {
  detail::require(p_exponent >= 0.0, Errc::domain, "exponent must be >= 0", "p");
  detail::require(sigma > 0.0 && sigma < 1.0, Errc::domain, "sigma must lie in (0, 1)", "sigma");
  detail::require(x > 0.0 && x < 1.0, Errc::domain, "x must lie in (0, 1)", "x");

  boost::math::quadrature::tanh_sinh<double> integrator;
  const double c = 1.0 / (1.0 - sigma);
  auto integral = [&](double at) {
    auto integrand = [&](double u) {
      const double zeta = at * (1.0 - std::pow(u, c));
      return std::pow(zeta, p_exponent);
    };
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(integrand, 0.0, 1.0, 1e-14, &error, &l1);
    detail::require(std::isfinite(value) && error <= 1e-10 * std::max(1.0, l1), Errc::quadrature,
                    "singular integral did not converge", "p");
    return std::pow(at, 1.0 - sigma) * c * value;
  };
  const double h = std::min(1e-5, 0.5 * x);
  const double derivative = (integral(x + h) - integral(x - h)) / (2.0 * h);
  return derivative / std::exp(log_gamma(1.0 - sigma));
}

/// Indices ν in [2, nu_max) where ω(ν+1) > ω(ν). Empty whenever β ≤ α_op.
inline std::vector<int> omega_increases(double beta, double alpha_op, int nu_max) {
  std::vector<int> bad;
  double prev = omega(beta, alpha_op, 2);
  for (int nu = 3; nu <= nu_max; ++nu) {
    const double cur = omega(beta, alpha_op, nu);
    if (cur > prev * (1.0 + 1e-14)) bad.push_back(nu - 1);
    prev = cur;
  }
  return bad;
}

/// Indices ν in [k+1, nu_max) where Ξ(ν+1) < Ξ(ν).
inline std::vector<int> hadamard_profile_decreases(const ClassParams& p, int nu_max) {
  std::vector<int> bad;
  double prev = hadamard_order_profile(p, p.k() + 1);
  for (int nu = p.k() + 2; nu <= nu_max; ++nu) {
    const double cur = hadamard_order_profile(p, nu);
    if (cur < prev - 1e-14) bad.push_back(nu - 1);
    prev = cur;
  }
  return bad;
}

}  // namespace gft
