#include "harmonic/analysis.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>

#include "harmonic/sylvester.hpp"

namespace harmonic {

std::string_view family_name(MuFamily family) {
  switch (family) {
    case MuFamily::lee:
      return "lee";
    case MuFamily::caprara:
      return "caprara";
    case MuFamily::refined:
      return "refined";
  }
  return "unknown";
}

MuFamily parse_family(std::string_view name) {
  if (name == "lee") return MuFamily::lee;
  if (name == "caprara") return MuFamily::caprara;
  if (name == "refined") return MuFamily::refined;
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected lee, caprara or refined)");
}

std::int64_t family_min_k(MuFamily family) { return family == MuFamily::lee ? 2 : 3; }

Rational mu_for(MuFamily family, const BigInt& k) {
  if (k < BigInt(family_min_k(family))) {
    throw std::invalid_argument(std::string(family_name(family)) + " family needs k >= " +
                                std::to_string(family_min_k(family)) + ", got " + k.to_string());
  }
  switch (family) {
    case MuFamily::lee:
      return Rational(k, k - BigInt(1));
    case MuFamily::caprara:
      return Rational(k, k - BigInt(2));
    case MuFamily::refined:
      return Rational(k * (k - BigInt(2)), k * k - BigInt(3) * k + BigInt(1));
  }
  throw std::logic_error("unreachable");
}

namespace {

// Largest eps the witness accepts for z, or nullopt when unbounded (z = 0).
// (1+eps)/(j+1) stays in I_j iff eps <= 1/j, and the grown items fit in the
// knapsack iff eps <= 1/s - 1.
std::optional<Rational> eps_limit(const HarmonicParams& params, const IpSolution& z) {
  const Rational s = cost(z, params);
  if (s.is_zero()) return std::nullopt;
  Rational limit = s.reciprocal() - Rational(1);
  for (std::size_t i = z.z.size(); i-- > 0;) {
    if (z.z[i] > 0) {
      limit = std::min(limit, Rational(BigInt(1), BigInt(static_cast<std::uint64_t>(i + 1))));
      break;
    }
  }
  return limit;
}

}  // namespace

Rational clamp_eps(const HarmonicParams& params, const IpSolution& z, const Rational& eps) {
  const auto limit = eps_limit(params, z);
  if (!limit) return eps;
  return eps > *limit ? *limit : eps;
}

KnapsackInstance build_witness(const HarmonicParams& params, const IpSolution& z,
                               const Rational& eps) {
  if (!is_feasible(z, params)) throw std::invalid_argument("witness needs a feasible z");
  if (eps.sign() <= 0) throw std::invalid_argument("witness needs eps > 0");
  if (const auto limit = eps_limit(params, z); limit && eps > *limit) {
    throw std::invalid_argument("eps=" + eps.to_string() + " exceeds the admissible bound " +
                                limit->to_string() + " for this z");
  }

  KnapsackInstance out;
  const Rational grown = Rational(1) + eps;
  for (std::size_t i = 0; i < z.z.size(); ++i) {
    const Rational item = grown / Rational(BigInt(static_cast<std::uint64_t>(i + 2)));
    for (std::int64_t c = 0; c < z.z[i]; ++c) out.push_back(item);
  }

  // Fill to exactly 1 with items from (0, 1/k].
  const Rational filler(BigInt(1), params.k());
  Rational remaining = Rational(1) - out.total();
  const BigInt copies = (remaining / filler).floor();
  if (copies > BigInt(std::int64_t{1} << 32)) {
    throw std::out_of_range("witness would need " + copies.to_string() + " filler items");
  }
  for (std::int64_t c = 0; c < copies.to_int64(); ++c) out.push_back(filler);
  remaining -= filler * Rational(copies);
  if (remaining.sign() > 0) out.push_back(remaining);
  return out;
}

SweepResult monotonic_sweep(MuFamily family, std::int64_t k_min, std::int64_t k_max) {
  if (k_min < family_min_k(family)) {
    throw std::invalid_argument(std::string(family_name(family)) + " family needs k >= " +
                                std::to_string(family_min_k(family)));
  }
  if (k_max < k_min) throw std::invalid_argument("k_max must be >= k_min");

  std::vector<std::future<SweepRow>> pending;
  pending.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    pending.push_back(std::async(std::launch::async, [family, k] {
      const Rational mu = mu_for(family, BigInt(k));
      const SolveSummary summary = solve(HarmonicParams(BigInt(k), mu), Method::automatic);
      return SweepRow{k, mu, summary.opt, summary.used};
    }));
  }

  SweepResult out;
  out.family = family;
  for (auto& row : pending) out.rows.push_back(row.get());
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].value > out.rows[i - 1].value) out.non_increasing = false;
  }
  return out;
}

LimitBracket tinf_bracket(std::size_t t, int digits) {
  if (t < 2 || t > 12) {
    throw std::out_of_range("limit bracket needs 2 <= t <= 12, got " + std::to_string(t));
  }
  const SylvesterTable table(t);
  LimitBracket out;
  out.t = t;
  out.k = table.r(t - 1) + BigInt(2);
  out.lower = table.prefix_sum(t);

  const HarmonicParams params(out.k, mu_for(MuFamily::lee, out.k));
  out.upper = solve_closed_form(params).opt;

  const Rational expected =
      out.lower + Rational(BigInt(1), table.r(t) * (table.r(t - 1) + BigInt(1)));
  if (out.upper != expected) {
    throw std::logic_error("closed form at k = r_{t-1} + 2 disagrees with S_t + 1/(r_t(r_{t-1}+1))");
  }
  out.lower_decimal = out.lower.to_decimal(digits);
  out.upper_decimal = out.upper.to_decimal(digits);
  return out;
}

}  // namespace harmonic
