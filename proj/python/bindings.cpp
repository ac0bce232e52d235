#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "harmonic/analysis.hpp"
#include "harmonic/binpack.hpp"
#include "harmonic/harmonic_function.hpp"
#include "harmonic/ip_model.hpp"
#include "harmonic/solvers.hpp"
#include "harmonic/sylvester.hpp"

namespace py = pybind11;
using namespace harmonic;

namespace {

// Fraction, int and str all print as something Rational::parse accepts.
Rational to_rational(const py::handle& value) { return Rational::parse(py::str(value).cast<std::string>()); }

BigInt to_bigint(const py::handle& value) { return BigInt::parse(py::str(value).cast<std::string>()); }

py::object to_py(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.to_string());
}

py::object to_py(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(to_py(value.num()), to_py(value.den()));
}

HarmonicParams params_of(const py::handle& k, const py::handle& mu) {
  return HarmonicParams(to_bigint(k), to_rational(mu));
}

KnapsackInstance instance_of(const py::iterable& items) {
  KnapsackInstance out;
  for (const auto& item : items) out.push_back(to_rational(item));
  return out;
}

py::list items_to_py(const KnapsackInstance& instance) {
  py::list out;
  for (const auto& item : instance.items()) out.append(to_py(item));
  return out;
}

py::dict closed_to_py(const ClosedFormResult& closed) {
  py::dict out;
  out["case"] = std::string(case_name(closed.kind));
  out["opt"] = to_py(closed.opt);
  if (closed.kind == ClosedFormCase::sylvester_sum) {
    out["m"] = to_py(*closed.m);
    out["Q"] = *closed.q;
    out["r_next"] = to_py(*closed.r_next);
    out["s_next"] = to_py(*closed.s_next);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact max-knapsack-profit of the generalized harmonic function f_k";

  m.def("to_decimal", [](const py::object& x, int digits) { return to_rational(x).to_decimal(digits); },
        py::arg("x"), py::arg("digits") = 8);

  m.def("classify", [](const py::object& k, const py::object& mu, const py::object& x) {
    return to_py(classify(params_of(k, mu), to_rational(x)).j);
  }, py::arg("k"), py::arg("mu"), py::arg("x"));

  m.def("eval_fk", [](const py::object& k, const py::object& mu, const py::object& x) {
    return to_py(eval_fk(params_of(k, mu), to_rational(x)));
  }, py::arg("k"), py::arg("mu"), py::arg("x"));

  m.def("profit", [](const py::object& k, const py::object& mu, const py::iterable& items) {
    return to_py(profit(params_of(k, mu), instance_of(items)));
  }, py::arg("k"), py::arg("mu"), py::arg("items"));

  m.def("sylvester_table", [](std::size_t t_max) {
    const SylvesterTable table(t_max);
    py::list rows;
    for (std::size_t j = 1; j <= table.size(); ++j) {
      rows.append(py::make_tuple(to_py(table.r(j)), to_py(table.prefix_sum(j))));
    }
    return rows;
  }, py::arg("t_max"), "[(r_j, S_j)] for j = 1..t_max");

  m.def("score", [](const py::object& k, const py::object& mu, std::vector<std::int64_t> z) {
    return to_py(score(IpSolution{std::move(z)}, params_of(k, mu)));
  }, py::arg("k"), py::arg("mu"), py::arg("z"));

  m.def("cost", [](const py::object& k, const py::object& mu, std::vector<std::int64_t> z) {
    return to_py(cost(IpSolution{std::move(z)}, params_of(k, mu)));
  }, py::arg("k"), py::arg("mu"), py::arg("z"));

  m.def("is_feasible", [](const py::object& k, const py::object& mu, std::vector<std::int64_t> z) {
    return is_feasible(IpSolution{std::move(z)}, params_of(k, mu));
  }, py::arg("k"), py::arg("mu"), py::arg("z"));

  m.def("enumerate_feasible", [](const py::object& k, const py::object& mu, std::size_t cap) {
    std::vector<std::vector<std::int64_t>> out;
    enumerate_feasible(params_of(k, mu), [&](const IpSolution& z) { out.push_back(z.z); }, cap);
    return out;
  }, py::arg("k"), py::arg("mu"), py::arg("cap") = kDefaultBruteCap);

  m.def("solve_brute", [](const py::object& k, const py::object& mu, std::size_t cap) {
    const SolveReport report = solve_brute(params_of(k, mu), cap);
    py::dict out;
    out["opt"] = to_py(report.opt);
    out["argmax"] = report.argmax.z;
    out["feasible_count"] = to_py(report.feasible_count);
    out["nodes_visited"] = report.nodes_visited;
    return out;
  }, py::arg("k"), py::arg("mu"), py::arg("cap") = kDefaultBruteCap);

  m.def("compute_m", [](const py::object& k, const py::object& mu) {
    return to_py(compute_m(params_of(k, mu)));
  }, py::arg("k"), py::arg("mu"));

  m.def("solve_closed_form", [](const py::object& k, const py::object& mu) {
    return closed_to_py(solve_closed_form(params_of(k, mu)));
  }, py::arg("k"), py::arg("mu"));

  m.def("greedy_solution", [](const py::object& k, const py::object& mu) {
    const GreedyResult greedy = greedy_solution(params_of(k, mu));
    py::dict out;
    out["z"] = greedy.z.z;
    out["score"] = to_py(greedy.score);
    out["heuristic"] = greedy.heuristic;
    return out;
  }, py::arg("k"), py::arg("mu"));

  m.def("solve", [](const py::object& k, const py::object& mu, const std::string& method,
                    std::size_t cap) {
    const SolveSummary summary = solve(params_of(k, mu), parse_method(method), cap);
    py::dict out;
    out["method"] = std::string(method_name(summary.used));
    out["opt"] = to_py(summary.opt);
    out["heuristic"] = summary.heuristic;
    if (summary.argmax) out["argmax"] = summary.argmax->z;
    if (summary.feasible_count) out["feasible_count"] = to_py(*summary.feasible_count);
    if (summary.closed) out["closed"] = closed_to_py(*summary.closed);
    return out;
  }, py::arg("k"), py::arg("mu"), py::arg("method") = "auto", py::arg("cap") = kDefaultBruteCap);

  m.def("mu_for", [](const std::string& family, const py::object& k) {
    return to_py(mu_for(parse_family(family), to_bigint(k)));
  }, py::arg("family"), py::arg("k"));

  m.def("monotonic_sweep", [](const std::string& family, std::int64_t k_min, std::int64_t k_max) {
    const SweepResult sweep = monotonic_sweep(parse_family(family), k_min, k_max);
    py::list rows;
    for (const auto& row : sweep.rows) rows.append(py::make_tuple(row.k, to_py(row.mu), to_py(row.value)));
    py::dict out;
    out["rows"] = rows;
    out["non_increasing"] = sweep.non_increasing;
    return out;
  }, py::arg("family"), py::arg("k_min"), py::arg("k_max"));

  m.def("tinf_bracket", [](std::size_t t, int digits) {
    const LimitBracket b = tinf_bracket(t, digits);
    py::dict out;
    out["t"] = b.t;
    out["k"] = to_py(b.k);
    out["lower"] = to_py(b.lower);
    out["upper"] = to_py(b.upper);
    out["lower_decimal"] = b.lower_decimal;
    out["upper_decimal"] = b.upper_decimal;
    return out;
  }, py::arg("t"), py::arg("digits") = 15);

  m.def("build_witness", [](const py::object& k, const py::object& mu, std::vector<std::int64_t> z,
                            const py::object& eps) {
    return items_to_py(build_witness(params_of(k, mu), IpSolution{std::move(z)}, to_rational(eps)));
  }, py::arg("k"), py::arg("mu"), py::arg("z"), py::arg("eps"));

  m.def("harmonic_pack", [](const py::object& k, const py::object& mu, const py::iterable& items) {
    const PackingResult result = harmonic_pack(params_of(k, mu), instance_of(items));
    py::dict per_class;
    for (const auto& [cls, n] : result.per_class_bins) per_class[to_py(cls.j)] = n;
    py::dict out;
    out["bins_used"] = result.bins_used;
    out["per_class_bins"] = per_class;
    out["opt_lower_bound"] = to_py(result.opt_lower_bound);
    out["ratio"] = to_py(result.ratio);
    return out;
  }, py::arg("k"), py::arg("mu"), py::arg("items"));

  m.def("adversarial_instance", [](const py::object& k, const py::object& mu, std::size_t n_bundles,
                                   const py::object& eps, std::optional<std::uint64_t> seed) {
    return items_to_py(adversarial_instance(params_of(k, mu), n_bundles, to_rational(eps), seed));
  }, py::arg("k"), py::arg("mu"), py::arg("n_bundles"), py::arg("eps"), py::arg("seed") = py::none());
}
