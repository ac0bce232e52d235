#pragma once

#include <cstddef>
#include <vector>

#include "harmonic/bigint.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Harmonic (Sylvester) numbers r_1 = 1, r_j = r_{j-1}(r_{j-1} + 1), and the
/// prefix sums S_t = sum_{j<=t} 1/r_j. Indices are 1-based; S_0 = 0.
class SylvesterTable {
 public:
  /// r_j has roughly 0.1 * 2^j decimal digits; r_24 is already ~1.7M digits.
  static constexpr std::size_t kMaxTerms = 24;

  /// Throws std::invalid_argument unless 1 <= t_max <= kMaxTerms.
  explicit SylvesterTable(std::size_t t_max);

  /// Shortest table whose last term exceeds `bound`, so that
  /// largest_index_below(bound) is certified and r_{Q+1} is available.
  static SylvesterTable covering(const BigInt& bound);

  std::size_t size() const { return r_.size(); }

  /// r_j for 1 <= j <= size().
  const BigInt& r(std::size_t j) const;
  /// S_t for 0 <= t <= size().
  const Rational& prefix_sum(std::size_t t) const;

  /// sum_{j=1}^t 1/(r_j + 1), summed term by term. Requires t + 1 <= size().
  Rational telescope_sum(std::size_t t) const;

  /// Largest Q with r_Q <= bound. Throws std::invalid_argument when
  /// bound < 1 and std::out_of_range when the table is too short to tell.
  std::size_t largest_index_below(const BigInt& bound) const;

 private:
  std::vector<BigInt> r_;    // r_[j-1] = r_j
  std::vector<Rational> s_;  // s_[t] = S_t
};

}  // namespace harmonic
