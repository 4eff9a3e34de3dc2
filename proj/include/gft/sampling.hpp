#pragma once

// Seeded generators for class parameters and class members. Draws go
// through std::mt19937_64 directly (its output sequence is fixed by the
// standard) so a seed reproduces the same cases on every platform.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gft/classify.hpp"
#include "gft/series.hpp"

namespace gft {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on {lo, ..., hi}.
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  double exponential() { return -std::log1p(-uniform()); }

  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Valid (k, τ, μ, δ, γ) with k ≤ max_k. About a fifth of draws have τ = μ
/// and a tenth are the τ = μ = 1 reduction.
inline ClassParams random_class_params(Rng& rng, int max_k = 6) {
  const int k = rng.integer(1, max_k);
  double mu = rng.uniform(0.05, 1.0);
  double tau = rng.uniform(mu, 1.0);
  if (rng.chance(0.2)) tau = mu;
  if (rng.chance(0.1)) tau = mu = 1.0;
  const double gamma = rng.uniform() * (1.0 - (tau - mu)) * 0.999;
  const double delta = rng.uniform();
  return ClassParams::make(k, tau, mu, delta, gamma);
}

/// A random member: 1–8 distinct indices in [k+1, k+32] with exponentially
/// distributed magnitudes, rescaled so the coefficient functional equals
/// u·(1−γ) for u uniform on [0, 1].
inline GapSeries random_member(const ClassParams& p, Rng& rng) {
  const int k = p.k();
  const int n = rng.integer(1, 8);
  std::vector<int> pool(32);
  for (int i = 0; i < 32; ++i) pool[i] = k + 1 + i;
  // partial Fisher-Yates
  for (int i = 0; i < n; ++i) std::swap(pool[i], pool[rng.integer(i, 31)]);

  GapSeries::Coefficients c;
  double functional = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = rng.exponential();
    c.emplace(pool[i], a);
    functional += p.weight(pool[i]) * a;
  }
  const double scale = rng.uniform() * (1.0 - p.gamma()) / functional;
  for (auto& [nu, a] : c) a *= scale;
  return GapSeries(k, std::move(c));
}

/// Operator orders (β, α_op) with 0 < β ≤ α_op ≤ 1.
struct OperatorOrders {
  double beta;
  double alpha_op;
};

inline OperatorOrders random_operator_orders(Rng& rng) {
  const double alpha_op = rng.uniform(0.05, 1.0);
  double beta = alpha_op * rng.uniform(0.05, 1.0);
  if (rng.chance(0.2)) beta = alpha_op;
  return {beta, alpha_op};
}

}  // namespace gft
