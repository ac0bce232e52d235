#include "harmonic/ip_model.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace harmonic {

namespace {

void require_shape(const IpSolution& solution, const HarmonicParams& params) {
  if (BigInt(static_cast<std::uint64_t>(solution.z.size())) + BigInt(1) != params.k()) {
    throw std::invalid_argument("solution has length " + std::to_string(solution.z.size()) +
                                " but k-1 = " + (params.k() - BigInt(1)).to_string());
  }
  for (std::int64_t zj : solution.z) {
    if (zj < 0) throw std::invalid_argument("solution entries must be non-negative");
  }
}

std::size_t checked_k(const HarmonicParams& params, std::size_t cap) {
  if (params.k() > BigInt(static_cast<std::uint64_t>(cap))) {
    throw std::out_of_range("k=" + params.k().to_string() + " exceeds the brute-force cap " +
                            std::to_string(cap) +
                            "; raise it with --brute-cap or HARMONIC_BRUTE_CAP");
  }
  return static_cast<std::size_t>(params.k().to_int64());
}

// Depth-first walk over z in lexicographic order. Cost and score are kept as
// integer numerators over fixed common denominators so every node update is
// a single integer addition; comparisons stay exact.
class FeasibleWalker {
 public:
  FeasibleWalker(const HarmonicParams& params, std::size_t k) : k_(k) {
    solution_.z.assign(k - 1, 0);

    BigInt cost_den = 1;
    for (std::size_t j = 1; j < k; ++j) cost_den = BigInt::lcm(cost_den, BigInt(j + 1));
    cost_den_ = cost_den;
    cost_step_.reserve(k - 1);
    for (std::size_t j = 1; j < k; ++j) cost_step_.push_back(cost_den / BigInt(j + 1));

    std::vector<Rational> coeff;
    coeff.reserve(k - 1);
    BigInt score_den = params.mu().den();
    for (std::size_t j = 1; j < k; ++j) {
      coeff.push_back(Rational(BigInt(1), BigInt(j)) -
                      params.mu() / Rational(BigInt(j + 1)));
      score_den = BigInt::lcm(score_den, coeff.back().den());
    }
    score_den_ = score_den;
    score_base_ = params.mu().num() * (score_den / params.mu().den());
    score_step_.reserve(k - 1);
    for (const auto& c : coeff) score_step_.push_back(c.num() * (score_den / c.den()));
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    descend(0, BigInt(0), score_base_, leaf);
  }

  const IpSolution& solution() const { return solution_; }
  Rational score_of(const BigInt& scaled) const { return Rational(scaled, score_den_); }
  std::uint64_t nodes() const { return nodes_; }
  const BigInt& count() const { return count_; }

 private:
  template <class Leaf>
  void descend(std::size_t index, const BigInt& partial_cost, const BigInt& partial_score,
               Leaf& leaf) {
    ++nodes_;
    if (index + 1 == k_) {
      count_ += BigInt(1);
      leaf(partial_score);
      return;
    }
    BigInt c = partial_cost;
    BigInt s = partial_score;
    for (std::int64_t v = 0; c < cost_den_; ++v) {
      solution_.z[index] = v;
      descend(index + 1, c, s, leaf);
      c += cost_step_[index];
      s += score_step_[index];
    }
    solution_.z[index] = 0;
  }

  std::size_t k_;
  IpSolution solution_;
  BigInt cost_den_;
  std::vector<BigInt> cost_step_;
  BigInt score_den_;
  BigInt score_base_;
  std::vector<BigInt> score_step_;
  std::uint64_t nodes_ = 0;
  BigInt count_;
};

}  // namespace

std::size_t brute_cap_from_env() {
  const char* raw = std::getenv("HARMONIC_BRUTE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultBruteCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw std::invalid_argument(std::string("HARMONIC_BRUTE_CAP must be a positive integer, got '") +
                                raw + "'");
  }
  return static_cast<std::size_t>(value);
}

Rational score(const IpSolution& solution, const HarmonicParams& params) {
  require_shape(solution, params);
  Rational total = params.mu();
  for (std::size_t i = 0; i < solution.z.size(); ++i) {
    if (solution.z[i] == 0) continue;
    const std::uint64_t j = i + 1;
    const Rational coeff = Rational(BigInt(1), BigInt(j)) - params.mu() / Rational(BigInt(j + 1));
    total += Rational(BigInt(solution.z[i])) * coeff;
  }
  return total;
}

Rational cost(const IpSolution& solution, const HarmonicParams& params) {
  require_shape(solution, params);
  Rational total;
  for (std::size_t i = 0; i < solution.z.size(); ++i) {
    if (solution.z[i] == 0) continue;
    total += Rational(BigInt(solution.z[i]), BigInt(static_cast<std::uint64_t>(i + 2)));
  }
  return total;
}

bool is_feasible(const IpSolution& solution, const HarmonicParams& params) {
  return cost(solution, params) < Rational(1);
}

EnumerationStats enumerate_feasible(const HarmonicParams& params, const FeasibleVisitor& visit,
                                    std::size_t cap) {
  const std::size_t k = checked_k(params, cap);
  FeasibleWalker walker(params, k);
  walker.run([&](const BigInt&) {
    if (visit) visit(walker.solution());
  });
  return {walker.count(), walker.nodes()};
}

SolveReport solve_brute(const HarmonicParams& params, std::size_t cap) {
  const std::size_t k = checked_k(params, cap);
  FeasibleWalker walker(params, k);
  bool have_best = false;
  BigInt best;
  IpSolution argmax;
  walker.run([&](const BigInt& scaled_score) {
    // Strict improvement keeps the lexicographically first maximizer.
    if (!have_best || scaled_score > best) {
      have_best = true;
      best = scaled_score;
      argmax = walker.solution();
    }
  });
  return {walker.score_of(best), std::move(argmax), walker.count(), walker.nodes()};
}

}  // namespace harmonic
