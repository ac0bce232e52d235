#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "harmonic/bigint.hpp"
#include "harmonic/harmonic_function.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

struct Bin {
  IntervalIndex cls;
  std::vector<std::size_t> items;  // indices into the packed instance
  Rational load;
};

struct PackingResult {
  std::size_t bins_used = 0;
  std::map<IntervalIndex, std::size_t> per_class_bins;
  /// max(ceil(total size), #items > 1/2).
  BigInt opt_lower_bound;
  /// bins_used / opt_lower_bound; 0 for an empty instance.
  Rational ratio;
  std::vector<Bin> bins;  // in opening order
};

/// Online harmonic packing. Items of class j < k share a bin with at most
/// j - 1 others of the same class; class-k items are packed next-fit.
/// Items must lie in (0, 1].
PackingResult harmonic_pack(const HarmonicParams& params, const KnapsackInstance& items);

/// n_bundles copies of the greedy witness for (k, mu), each summing to
/// exactly 1, with items in descending class order inside a bundle (smallest
/// items arrive first). With a seed the whole sequence is shuffled
/// reproducibly.
KnapsackInstance adversarial_instance(const HarmonicParams& params, std::size_t n_bundles,
                                      const Rational& eps,
                                      std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Fisher-Yates driven by mt19937_64 with a fixed reduction, so a seed gives
/// the same order on every platform.
void reproducible_shuffle(std::vector<Rational>& items, std::uint64_t seed);

}  // namespace harmonic
