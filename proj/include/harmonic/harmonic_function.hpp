#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "harmonic/bigint.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// The pair (k, mu) parameterizing f_k and IP(k, mu).
///
/// k >= 1 and 0 <= mu <= k. k is arbitrary precision so that the closed form
/// can be evaluated at k = r_t + 2 for large t.
class HarmonicParams {
 public:
  /// Throws std::invalid_argument when k < 1 or mu is outside [0, k].
  HarmonicParams(BigInt k, Rational mu);

  const BigInt& k() const { return k_; }
  const Rational& mu() const { return mu_; }

  /// k as a machine integer, or std::out_of_range when it exceeds `limit`.
  std::size_t k_at_most(std::size_t limit) const;

 private:
  BigInt k_;
  Rational mu_;
};

/// Index j of the interval containing x: I_j = (1/(j+1), 1/j] for
/// j in [1, k-1] and I_k = [0, 1/k].
struct IntervalIndex {
  BigInt j;

  friend bool operator==(const IntervalIndex&, const IntervalIndex&) = default;
  friend std::strong_ordering operator<=>(const IntervalIndex& a, const IntervalIndex& b) {
    return a.j <=> b.j;
  }
};

/// Ordered multiset of item sizes, each in [0, 1].
class KnapsackInstance {
 public:
  KnapsackInstance() = default;
  /// Throws std::invalid_argument if any item is outside [0, 1].
  explicit KnapsackInstance(std::vector<Rational> items);

  void push_back(Rational item);

  const std::vector<Rational>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Rational total() const;

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;

 private:
  std::vector<Rational> items_;
};

/// Throws std::invalid_argument when x is outside [0, 1].
IntervalIndex classify(const HarmonicParams& params, const Rational& x);

/// f_k(x; mu): 1/j on I_j for j < k, mu * x on I_k.
Rational eval_fk(const HarmonicParams& params, const Rational& x);

/// Sum of f_k over the instance; 0 for an empty instance.
Rational profit(const HarmonicParams& params, const KnapsackInstance& instance);

}  // namespace harmonic
