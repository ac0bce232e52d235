#include "harmonic/harmonic_function.hpp"

#include <stdexcept>
#include <string>

namespace harmonic {

namespace {

void require_unit_interval(const Rational& x, const char* what) {
  if (x.sign() < 0 || x > Rational(1)) {
    throw std::invalid_argument(std::string(what) + " " + x.to_string() + " is outside [0, 1]");
  }
}

}  // namespace

HarmonicParams::HarmonicParams(BigInt k, Rational mu) : k_(std::move(k)), mu_(std::move(mu)) {
  if (k_ < BigInt(1)) throw std::invalid_argument("k must be >= 1, got " + k_.to_string());
  if (mu_.sign() < 0 || mu_ > Rational(k_)) {
    throw std::invalid_argument("mu must lie in [0, k], got mu=" + mu_.to_string() +
                                " with k=" + k_.to_string());
  }
}

std::size_t HarmonicParams::k_at_most(std::size_t limit) const {
  if (k_ > BigInt(static_cast<std::uint64_t>(limit))) {
    throw std::out_of_range("k=" + k_.to_string() + " exceeds the limit " + std::to_string(limit));
  }
  return static_cast<std::size_t>(k_.to_int64());
}

KnapsackInstance::KnapsackInstance(std::vector<Rational> items) : items_(std::move(items)) {
  for (const auto& item : items_) require_unit_interval(item, "item");
}

void KnapsackInstance::push_back(Rational item) {
  require_unit_interval(item, "item");
  items_.push_back(std::move(item));
}

Rational KnapsackInstance::total() const {
  Rational sum;
  for (const auto& item : items_) sum += item;
  return sum;
}

IntervalIndex classify(const HarmonicParams& params, const Rational& x) {
  require_unit_interval(x, "x");
  if (x * Rational(params.k()) <= Rational(1)) return {params.k()};
  // x in (1/(j+1), 1/j]  <=>  j <= 1/x < j+1.
  return {x.reciprocal().floor()};
}

Rational eval_fk(const HarmonicParams& params, const Rational& x) {
  const IntervalIndex index = classify(params, x);
  if (index.j == params.k()) return params.mu() * x;
  return Rational(BigInt(1), index.j);
}

Rational profit(const HarmonicParams& params, const KnapsackInstance& instance) {
  Rational sum;
  for (const auto& item : instance.items()) sum += eval_fk(params, item);
  return sum;
}

}  // namespace harmonic
