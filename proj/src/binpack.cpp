#include "harmonic/binpack.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "harmonic/analysis.hpp"
#include "harmonic/solvers.hpp"

namespace harmonic {

PackingResult harmonic_pack(const HarmonicParams& params, const KnapsackInstance& items) {
  PackingResult out;
  std::map<IntervalIndex, std::size_t> open;  // class -> index into out.bins
  const Rational half(BigInt(1), BigInt(2));
  BigInt large_items = 0;

  for (std::size_t n = 0; n < items.size(); ++n) {
    const Rational& x = items.items()[n];
    if (x.sign() <= 0) {
      throw std::invalid_argument("item " + std::to_string(n) + " must be > 0, got " +
                                  x.to_string());
    }
    if (x > half) large_items += BigInt(1);
    const IntervalIndex cls = classify(params, x);

    auto it = open.find(cls);
    bool fits = false;
    if (it != open.end()) {
      const Bin& bin = out.bins[it->second];
      fits = cls.j == params.k()
                 ? bin.load + x <= Rational(1)
                 : BigInt(static_cast<std::uint64_t>(bin.items.size())) < cls.j;
    }
    if (!fits) {
      out.bins.push_back(Bin{cls, {}, Rational()});
      out.per_class_bins[cls] += 1;
      it = open.insert_or_assign(cls, out.bins.size() - 1).first;
    }
    Bin& bin = out.bins[it->second];
    bin.items.push_back(n);
    bin.load += x;
  }

  out.bins_used = out.bins.size();
  out.opt_lower_bound = std::max(items.total().ceil(), large_items);
  if (!out.opt_lower_bound.is_zero()) {
    out.ratio = Rational(BigInt(static_cast<std::uint64_t>(out.bins_used)), out.opt_lower_bound);
  }
  return out;
}

void reproducible_shuffle(std::vector<Rational>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

KnapsackInstance adversarial_instance(const HarmonicParams& params, std::size_t n_bundles,
                                      const Rational& eps,
                                      std::optional<std::uint64_t> shuffle_seed) {
  const GreedyResult greedy = greedy_solution(params);
  const KnapsackInstance bundle = build_witness(params, greedy.z, eps);

  std::vector<Rational> ordered = bundle.items();
  // Descending class index == ascending size; stable keeps the remainder
  // after the 1/k fillers.
  std::stable_sort(ordered.begin(), ordered.end(), [&](const Rational& a, const Rational& b) {
    return classify(params, a).j > classify(params, b).j;
  });

  std::vector<Rational> all;
  all.reserve(ordered.size() * n_bundles);
  for (std::size_t b = 0; b < n_bundles; ++b) all.insert(all.end(), ordered.begin(), ordered.end());
  if (shuffle_seed) reproducible_shuffle(all, *shuffle_seed);
  return KnapsackInstance(std::move(all));
}

}  // namespace harmonic
