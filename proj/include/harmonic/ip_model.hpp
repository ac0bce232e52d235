#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "harmonic/bigint.hpp"
#include "harmonic/harmonic_function.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Multiplicities z_1..z_{k-1} of IP(k, mu); z[0] holds z_1.
struct IpSolution {
  std::vector<std::int64_t> z;

  friend bool operator==(const IpSolution&, const IpSolution&) = default;
};

inline constexpr std::size_t kDefaultBruteCap = 14;

/// Cap from HARMONIC_BRUTE_CAP when set to a positive integer, else the default.
std::size_t brute_cap_from_env();

/// mu + sum_j z_j (1/j - mu/(j+1)).
Rational score(const IpSolution& solution, const HarmonicParams& params);
/// sum_j z_j / (j+1).
Rational cost(const IpSolution& solution, const HarmonicParams& params);
/// cost < 1, compared exactly.
bool is_feasible(const IpSolution& solution, const HarmonicParams& params);

struct EnumerationStats {
  BigInt feasible_count;
  std::uint64_t nodes_visited = 0;
};

using FeasibleVisitor = std::function<void(const IpSolution&)>;

/// Visits every feasible z exactly once in lexicographic order. Prefixes
/// whose partial cost reaches 1 are cut. Throws std::out_of_range when
/// k > cap.
EnumerationStats enumerate_feasible(const HarmonicParams& params, const FeasibleVisitor& visit,
                                    std::size_t cap = kDefaultBruteCap);

struct SolveReport {
  Rational opt;
  IpSolution argmax;  // lexicographically smallest maximizer
  BigInt feasible_count;
  std::uint64_t nodes_visited = 0;
};

/// Exhaustive maximization of score over the feasible set.
SolveReport solve_brute(const HarmonicParams& params, std::size_t cap = kDefaultBruteCap);

}  // namespace harmonic
