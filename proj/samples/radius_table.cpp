// Prints starlikeness and convexity radii over a small parameter sweep,
// next to the bisection radius of the single-term function at ν*.

#include <cstdio>

#include "gft/gft.hpp"

int main() {
  using namespace gft;
  std::printf("%3s %5s %5s %5s %5s %5s  %-10s %5s %-10s  %-10s %5s\n", "k", "tau", "mu", "delta", "gamma", "alpha",
              "r_star", "nu*", "numeric", "r_convex", "nu*");
  for (int k : {1, 2})
    for (double delta : {0.0, 0.5})
      for (double gamma : {0.0, 0.5}) {
        const ClassParams p = ClassParams::make(k, 0.8, 0.5, delta, gamma);
        const double alpha = 0.25;
        const RadiusResult s = radius_starlike(p, alpha);
        const RadiusResult c = radius_convex(p, alpha);
        double numeric = 1.0;
        if (!s.capped)
          numeric = numeric_radius_starlike(GapSeries::monomial(k, s.nu_star, max_coefficient(p, s.nu_star)), alpha);
        std::printf("%3d %5.2f %5.2f %5.2f %5.2f %5.2f  %-10.6f %5d %-10.6f  %-10.6f %5d\n", k, p.tau(), p.mu(), delta,
                    gamma, alpha, s.r, s.nu_star, numeric, c.r, c.nu_star);
      }
}
