#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "harmonic/bigint.hpp"
#include "harmonic/harmonic_function.hpp"
#include "harmonic/ip_model.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Largest j <= k-1 with 1/j - mu/(j+1) > 0, i.e. ceil(1/max(mu-1, 1/k)) - 1.
/// Requires k >= 2 and mu < 2 (std::domain_error otherwise).
BigInt compute_m(const HarmonicParams& params);

enum class ClosedFormCase { k_equals_1, mu_ge_2, sylvester_sum };

std::string_view case_name(ClosedFormCase kind);

struct ClosedFormResult {
  ClosedFormCase kind = ClosedFormCase::sylvester_sum;
  Rational opt;
  // Populated only for the sylvester_sum case.
  std::optional<BigInt> m;
  std::optional<std::size_t> q;
  std::optional<BigInt> r_next;       // r_{Q+1}
  std::optional<Rational> s_next;     // S_{Q+1}
};

/// opt(IP(k, mu)) without enumeration:
///   k = 1 or mu >= 2  ->  mu
///   1 <= mu < 2       ->  S_{Q+1} + (mu-1)/r_{Q+1},  Q = max{j : r_j <= m}
/// Throws std::domain_error for k >= 2 and mu < 1, where no closed form is
/// claimed; use solve_brute there.
ClosedFormResult solve_closed_form(const HarmonicParams& params);

struct GreedyResult {
  IpSolution z;
  Rational score;
  /// Set when mu < 1: the greedy run is well defined but not known optimal.
  bool heuristic = false;
};

/// Start from z = 0 and repeatedly bump the smallest index i <= m that keeps
/// cost < 1. Requires k >= 2 and mu < 2; k - 1 must fit in memory
/// (`max_length` entries).
GreedyResult greedy_solution(const HarmonicParams& params, std::size_t max_length = 1u << 24);

enum class Method { automatic, brute, closed, greedy };

std::string_view method_name(Method method);
/// Accepts "auto", "brute", "closed", "greedy".
Method parse_method(std::string_view name);

struct SolveSummary {
  Method requested = Method::automatic;
  Method used = Method::automatic;
  Rational opt;
  bool heuristic = false;
  std::optional<IpSolution> argmax;
  std::optional<BigInt> feasible_count;
  std::optional<std::uint64_t> nodes_visited;
  std::optional<ClosedFormResult> closed;
};

/// Dispatcher. `automatic` takes the closed form whenever it applies
/// (k = 1, mu >= 2, or mu >= 1) and falls back to brute force otherwise.
SolveSummary solve(const HarmonicParams& params, Method method = Method::automatic,
                   std::size_t brute_cap = kDefaultBruteCap);

}  // namespace harmonic
