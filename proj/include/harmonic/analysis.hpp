#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/bigint.hpp"
#include "harmonic/harmonic_function.hpp"
#include "harmonic/ip_model.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/solvers.hpp"

namespace harmonic {

/// lee: k/(k-1); caprara: k/(k-2); refined: k(k-2)/(k^2-3k+1).
enum class MuFamily { lee, caprara, refined };

std::string_view family_name(MuFamily family);
MuFamily parse_family(std::string_view name);
/// Smallest k the family is defined for: 2 for lee, 3 otherwise.
std::int64_t family_min_k(MuFamily family);

/// Throws std::invalid_argument when k is below family_min_k.
Rational mu_for(MuFamily family, const BigInt& k);

/// eps reduced to the largest value build_witness accepts for z.
Rational clamp_eps(const HarmonicParams& params, const IpSolution& z, const Rational& eps);

/// Knapsack instance realizing score(z) up to mu * eps: z_j copies of
/// (1+eps)/(j+1), then copies of 1/k and one exact remainder so the total
/// is exactly 1. Requires z feasible, 0 < eps <= 1/s - 1 and eps <= 1/j for
/// the largest j with z_j > 0 (no upper bound when z = 0).
KnapsackInstance build_witness(const HarmonicParams& params, const IpSolution& z,
                               const Rational& eps);

struct SweepRow {
  std::int64_t k = 0;
  Rational mu;
  Rational value;
  Method used = Method::closed;
};

struct SweepResult {
  MuFamily family = MuFamily::lee;
  std::vector<SweepRow> rows;  // ascending k
  bool non_increasing = true;
};

/// T_k = opt(IP(k, mu_k)) for k in [k_min, k_max], solved with Method::automatic.
/// Rows are computed concurrently and returned in k order.
SweepResult monotonic_sweep(MuFamily family, std::int64_t k_min, std::int64_t k_max);

struct LimitBracket {
  std::size_t t = 0;
  BigInt k;        // r_{t-1} + 2
  Rational lower;  // S_t
  Rational upper;  // T_k under mu = k/(k-1)
  std::string lower_decimal;
  std::string upper_decimal;

  Rational width() const { return upper - lower; }
};

/// S_t <= T_inf <= T_k at k = r_{t-1} + 2. The upper end is computed through
/// solve_closed_form and checked against S_t + 1/(r_t (r_{t-1} + 1)).
/// Requires 2 <= t <= 12.
LimitBracket tinf_bracket(std::size_t t, int digits = 15);

}  // namespace harmonic
