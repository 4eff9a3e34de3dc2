#pragma once

// Seeded verification suites behind `gft verify`. Each suite draws its
// cases from the seed alone, so a report is reproducible from its header.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "gft/bounds.hpp"
#include "gft/classify.hpp"
#include "gft/closure.hpp"
#include "gft/fracops.hpp"
#include "gft/oracle.hpp"
#include "gft/sampling.hpp"

namespace gft {

namespace detail {

inline std::string describe(const ClassParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "k=" << p.k() << " tau=" << p.tau() << " mu=" << p.mu() << " delta=" << p.delta()
     << " gamma=" << p.gamma();
  return os.str();
}

inline void verify_membership(Report& rep, Rng& rng) {
  const DiskGrid grid = DiskGrid::make(64, 64, 0.999);
  for (int i = 0; i < 40; ++i) {
    const ClassParams p = random_class_params(rng);

    const double sharp = std::abs(coefficient_functional(extremal(p), p) - (1.0 - p.gamma()));
    ++rep.cases;
    rep.record(sharp);
    if (sharp > 1e-10) rep.fail("extremal_sharpness", describe(p), sharp);

    const GapSeries f = random_member(p, rng);
    const GridMinimum m = grid_minimum(f, p, grid, FunctionalForm::definition);
    ++rep.cases;
    if (m.value <= p.gamma() - 1e-7) rep.fail("forward_membership", describe(p) + " " + describe(f), p.gamma() - m.value);

    const int nu = p.k() + 1 + rng.integer(0, 7);
    const GapSeries over = GapSeries::monomial(p.k(), nu, 1.05 * max_coefficient(p, nu));
    const GridMinimum w = real_axis_minimum(over, p, 0.999, 0.9999, 64);
    ++rep.cases;
    if (!(w.value < p.gamma())) rep.fail("reverse_witness", describe(p) + " " + describe(over), w.value - p.gamma());
  }
}

inline void verify_radius(Report& rep, Rng& rng) {
  for (int i = 0; i < 12; ++i) {
    const ClassParams p = random_class_params(rng, 3);
    const double alpha = rng.chance(0.3) ? 0.0 : rng.uniform(0.0, 0.9);
    for (int offset : {1, 2, 5}) {
      const int nu = p.k() + offset;
      const GapSeries f = GapSeries::monomial(p.k(), nu, max_coefficient(p, nu));
      for (RadiusKind kind : {RadiusKind::starlike, RadiusKind::convex}) {
        const double analytic = std::min(1.0, radius_term(p, alpha, nu, kind));
        const double numeric = kind == RadiusKind::starlike ? numeric_radius_starlike(f, alpha, 1e-7)
                                                            : numeric_radius_convex(f, alpha, 1e-7);
        const double err = std::abs(analytic - numeric);
        ++rep.cases;
        rep.record(err);
        if (err > 1e-6) {
          std::ostringstream os;
          os << describe(p) << " alpha=" << alpha << " nu=" << nu
             << (kind == RadiusKind::starlike ? " starlike" : " convex");
          rep.fail("single_term_radius", os.str(), err);
        }
      }
    }
    const double r1 = radius_starlike(p, alpha).r;
    const double r3 = radius_convex(p, alpha).r;
    ++rep.cases;
    if (r3 > r1) rep.fail("convex_within_starlike", describe(p), r3 - r1);
  }
}

inline void verify_distortion(Report& rep, Rng& rng) {
  for (int i = 0; i < 8; ++i) {
    const ClassParams p = random_class_params(rng);
    const OperatorOrders o = random_operator_orders(rng);
    DistortionOptions opts;
    opts.n_radii = 32;
    opts.n_angles = 32;
    const Report sub = check_distortion(p, o.beta, o.alpha_op, 25, rep.seed + 1 + i, opts);
    rep.cases += sub.cases;
    rep.record(sub.max_error);
    for (const Violation& v : sub.violations) rep.fail(v.check, describe(p) + " " + v.detail, v.error);
  }
}

inline void verify_fracops(Report& rep, Rng& rng) {
  for (int i = 0; i < 20; ++i) {
    const double p = rng.chance(0.5) ? rng.integer(0, 4) : rng.uniform(0.0, 4.0);
    const double sigma = rng.uniform(0.05, 0.95);
    const double x = rng.uniform(0.1, 0.9);
    const double closed = std::exp(log_gamma_ratio(p + 1.0, p + 1.0 - sigma)) * std::pow(x, p - sigma);
    const double quad = quadrature_spot_check(p, sigma, x);
    const double rel = std::abs(quad - closed) / std::abs(closed);
    ++rep.cases;
    rep.record(rel);
    if (rel > 1e-5) {
      std::ostringstream os;
      os.precision(17);
      os << "p=" << p << " sigma=" << sigma << " x=" << x;
      rep.fail("quadrature", os.str(), rel);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const ClassParams p = random_class_params(rng);
    const GapSeries f = random_member(p, rng);
    const auto orders = p.operator_orders();
    const SparsePolynomial direct = tremblay(f, orders);
    const FracSeries composed = tremblay_composed(f, orders);
    for (const auto& [e, c] : direct.terms()) {
      const double other = composed.coefficient_near(e);
      const double rel = std::abs(other - c) / std::abs(c);
      ++rep.cases;
      rep.record(rel);
      if (rel > 1e-11) rep.fail("operator_composition", describe(p) + " " + describe(f), rel);
    }
  }
}

}  // namespace detail

inline constexpr std::string_view kSuites[] = {"membership", "radius", "distortion", "fracops"};

inline bool is_suite(std::string_view name) {
  if (name == "all") return true;
  for (auto s : kSuites)
    if (s == name) return true;
  return false;
}

/// Runs one suite, or every suite when `name` is "all".
inline Report run_suite(std::string_view name, std::uint64_t seed) {
  detail::require(is_suite(name), Errc::domain, "unknown suite", "suite");
  Report rep(std::string(name), seed);
  Rng rng(seed);
  auto want = [&](std::string_view s) { return name == "all" || name == s; };
  if (want("membership")) detail::verify_membership(rep, rng);
  if (want("radius")) detail::verify_radius(rep, rng);
  if (want("distortion")) detail::verify_distortion(rep, rng);
  if (want("fracops")) detail::verify_fracops(rep, rng);
  rep.finish();
  return rep;
}

}  // namespace gft
