// Samples random members of one class and reports how close |f(z)| comes
// to each edge of the distortion envelope.

#include <algorithm>
#include <cstdio>
#include <numbers>

#include "gft/gft.hpp"

int main() {
  using namespace gft;
  const ClassParams p = ClassParams::make(2, 0.9, 0.6, 0.3, 0.2);
  Rng rng(2024);
  const DiskGrid grid = DiskGrid::make(8, 32, 0.95);
  const auto radii = grid.radii();
  std::vector<double> lo_gap(radii.size(), 1.0), hi_gap(radii.size(), 1.0);
  for (int s = 0; s < 200; ++s) {
    const GapSeries f = random_member(p, rng);
    grid.for_each_point([&](Complex z, std::size_t ring) {
      const Interval env = distortion_function(p, radii[ring]);
      const double m = std::abs(evaluate(f, z));
      lo_gap[ring] = std::min(lo_gap[ring], m - env.lo);
      hi_gap[ring] = std::min(hi_gap[ring], env.hi - m);
    });
  }
  std::printf("%-6s %-10s %-10s %-12s %-12s\n", "r", "lo", "hi", "min(m-lo)", "min(hi-m)");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const Interval env = distortion_function(p, radii[i]);
    std::printf("%-6.3f %-10.6f %-10.6f %-12.3e %-12.3e\n", radii[i], env.lo, env.hi, lo_gap[i], hi_gap[i]);
  }
}
