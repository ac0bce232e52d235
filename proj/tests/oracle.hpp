#pragma once

// Test-only reference implementations. They deliberately avoid the library's
// walker: full box enumeration 0 <= z_j <= j with direct Rational sums and
// no pruning.

#include <cstdint>
#include <random>
#include <vector>

#include "harmonic/rational.hpp"

namespace harmonic::oracle {

struct BoxPoint {
  std::vector<std::int64_t> z;
  Rational score;
  Rational cost;
};

inline Rational direct_score(const std::vector<std::int64_t>& z, const Rational& mu) {
  Rational total = mu;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::int64_t j = static_cast<std::int64_t>(i) + 1;
    total += Rational(z[i]) * (Rational(BigInt(1), BigInt(j)) - mu * Rational(BigInt(1), BigInt(j + 1)));
  }
  return total;
}

inline Rational direct_cost(const std::vector<std::int64_t>& z) {
  Rational total;
  for (std::size_t i = 0; i < z.size(); ++i) {
    total += Rational(BigInt(z[i]), BigInt(static_cast<std::int64_t>(i) + 2));
  }
  return total;
}

/// Every feasible point (cost < 1) of the box, in lexicographic order.
inline std::vector<BoxPoint> feasible_points(int k, const Rational& mu) {
  std::vector<BoxPoint> out;
  std::vector<std::int64_t> z(static_cast<std::size_t>(k - 1), 0);
  while (true) {
    const Rational c = direct_cost(z);
    if (c < Rational(1)) out.push_back({z, direct_score(z, mu), c});
    // Odometer increment, last coordinate fastest.
    int i = k - 2;
    while (i >= 0 && z[static_cast<std::size_t>(i)] == i + 1) {
      z[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++z[static_cast<std::size_t>(i)];
  }
  return out;
}

struct Optimum {
  Rational value;
  std::vector<std::int64_t> argmax;
};

inline Optimum box_optimum(int k, const Rational& mu) {
  const auto points = feasible_points(k, mu);
  Optimum best{points.front().score, points.front().z};
  for (const auto& p : points) {
    if (p.score > best.value) best = {p.score, p.z};
  }
  return best;
}

/// Random rational in [0, 1] with denominator up to max_den.
inline Rational random_unit(std::mt19937_64& rng, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
  const std::int64_t den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(0, den);
  return Rational(BigInt(num_dist(rng)), BigInt(den));
}

/// All reduced a/b in [lo, hi) with b <= max_den.
inline std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, std::int64_t max_den) {
  std::vector<Rational> out;
  for (std::int64_t b = 1; b <= max_den; ++b) {
    for (std::int64_t a = 0; a <= 3 * b; ++a) {
      const Rational x{BigInt(a), BigInt(b)};
      if (x.den() != BigInt(b)) continue;  // keep reduced representatives only
      if (x >= lo && x < hi) out.push_back(x);
    }
  }
  return out;
}

}  // namespace harmonic::oracle
