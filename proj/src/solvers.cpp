#include "harmonic/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "harmonic/sylvester.hpp"

namespace harmonic {

namespace {

void require_greedy_domain(const HarmonicParams& params, const char* what) {
  if (params.k() < BigInt(2) || params.mu() >= Rational(2)) {
    throw std::domain_error(std::string(what) + " requires k >= 2 and mu < 2 (got k=" +
                            params.k().to_string() + ", mu=" + params.mu().to_string() + ")");
  }
}

}  // namespace

BigInt compute_m(const HarmonicParams& params) {
  require_greedy_domain(params, "m");
  const Rational slack = std::max(params.mu() - Rational(1), Rational(BigInt(1), params.k()));
  return slack.reciprocal().ceil() - BigInt(1);
}

std::string_view case_name(ClosedFormCase kind) {
  switch (kind) {
    case ClosedFormCase::k_equals_1:
      return "k_equals_1";
    case ClosedFormCase::mu_ge_2:
      return "mu_ge_2";
    case ClosedFormCase::sylvester_sum:
      return "sylvester_sum";
  }
  return "unknown";
}

ClosedFormResult solve_closed_form(const HarmonicParams& params) {
  ClosedFormResult out;
  if (params.k() == BigInt(1)) {
    out.kind = ClosedFormCase::k_equals_1;
    out.opt = params.mu();
    return out;
  }
  if (params.mu() >= Rational(2)) {
    out.kind = ClosedFormCase::mu_ge_2;
    out.opt = params.mu();
    return out;
  }
  if (params.mu() < Rational(1)) {
    throw std::domain_error("closed form needs mu >= 1 when k >= 2 (got mu=" +
                            params.mu().to_string() + "); use the brute-force method");
  }
  const BigInt m = compute_m(params);
  const SylvesterTable table = SylvesterTable::covering(m);
  const std::size_t q = table.largest_index_below(m);
  out.kind = ClosedFormCase::sylvester_sum;
  out.m = m;
  out.q = q;
  out.r_next = table.r(q + 1);
  out.s_next = table.prefix_sum(q + 1);
  out.opt = *out.s_next + (params.mu() - Rational(1)) / Rational(*out.r_next);
  return out;
}

GreedyResult greedy_solution(const HarmonicParams& params, std::size_t max_length) {
  require_greedy_domain(params, "greedy");
  const BigInt length = params.k() - BigInt(1);
  if (length > BigInt(static_cast<std::uint64_t>(max_length))) {
    throw std::out_of_range("greedy would materialize " + length.to_string() +
                            " entries; use the closed form for large k");
  }
  const BigInt m = compute_m(params);

  GreedyResult out;
  out.z.z.assign(static_cast<std::size_t>(length.to_int64()), 0);
  Rational used;
  while (true) {
    // Smallest i with used + 1/(i+1) < 1 is floor(1/(1 - used)).
    const BigInt i = (Rational(1) - used).reciprocal().floor();
    if (i > m) break;
    const auto index = static_cast<std::size_t>(i.to_int64());
    out.z.z[index - 1] += 1;
    used += Rational(BigInt(1), i + BigInt(1));
  }
  out.score = score(out.z, params);
  out.heuristic = params.mu() < Rational(1);
  return out;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::automatic:
      return "auto";
    case Method::brute:
      return "brute";
    case Method::closed:
      return "closed";
    case Method::greedy:
      return "greedy";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "auto") return Method::automatic;
  if (name == "brute") return Method::brute;
  if (name == "closed") return Method::closed;
  if (name == "greedy") return Method::greedy;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected auto, brute, closed or greedy)");
}

SolveSummary solve(const HarmonicParams& params, Method method, std::size_t brute_cap) {
  SolveSummary out;
  out.requested = method;
  if (method == Method::automatic) {
    const bool closed_applies = params.k() == BigInt(1) || params.mu() >= Rational(1);
    method = closed_applies ? Method::closed : Method::brute;
  }
  out.used = method;
  switch (method) {
    case Method::closed: {
      ClosedFormResult closed = solve_closed_form(params);
      out.opt = closed.opt;
      out.closed = std::move(closed);
      break;
    }
    case Method::brute: {
      SolveReport report = solve_brute(params, brute_cap);
      out.opt = report.opt;
      out.argmax = std::move(report.argmax);
      out.feasible_count = std::move(report.feasible_count);
      out.nodes_visited = report.nodes_visited;
      break;
    }
    case Method::greedy: {
      GreedyResult greedy = greedy_solution(params);
      out.opt = greedy.score;
      out.heuristic = greedy.heuristic;
      out.argmax = std::move(greedy.z);
      break;
    }
    case Method::automatic:
      break;
  }
  return out;
}

}  // namespace harmonic
