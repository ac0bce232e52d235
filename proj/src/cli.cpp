#include "harmonic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harmonic/analysis.hpp"
#include "harmonic/binpack.hpp"
#include "harmonic/harmonic_function.hpp"
#include "harmonic/ip_model.hpp"
#include "harmonic/json_io.hpp"
#include "harmonic/solvers.hpp"
#include "harmonic/sylvester.hpp"

namespace harmonic::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + name + "' (expected text, csv or json)");
}

std::string frac_dec(const Rational& value, int digits) {
  return value.to_string() + " = " + value.to_decimal(digits);
}

std::string format_z(const IpSolution& z, const char* sep = ", ") {
  std::string out = "(";
  for (std::size_t i = 0; i < z.z.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(z.z[i]);
  }
  return out + ")";
}

IpSolution parse_z(const std::string& text) {
  IpSolution out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const BigInt value = BigInt::parse(part);
    if (value.sign() < 0) throw UsageError("--z entries must be non-negative");
    out.z.push_back(value.to_int64());
  }
  return out;
}

// --k plus exactly one of --mu / --family.
struct ParamOptions {
  std::string k;
  std::string mu;
  std::string family;

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", k, "harmonic parameter k >= 1 (arbitrary precision)")->required();
    cmd->add_option("--mu", mu, "mu as p/q, integer or decimal");
    cmd->add_option("--family", family, "derive mu from k: lee, caprara or refined");
  }

  HarmonicParams resolve(bool default_to_lee = false) const {
    if (!mu.empty() && !family.empty()) throw UsageError("give either --mu or --family, not both");
    const BigInt kk = BigInt::parse(k);
    if (!mu.empty()) return HarmonicParams(kk, parse_rational_arg(mu));
    if (!family.empty()) return HarmonicParams(kk, mu_for(parse_family(family), kk));
    if (default_to_lee) {
      if (kk == BigInt(1)) return HarmonicParams(kk, Rational(1));
      return HarmonicParams(kk, mu_for(MuFamily::lee, kk));
    }
    throw UsageError("one of --mu or --family is required");
  }
};

json params_json(const HarmonicParams& params) {
  return {{"k", params.k().to_string()}, {"mu", fraction_json(params.mu())}};
}

// ---------------------------------------------------------------- eval

struct EvalCommand {
  ParamOptions params;
  std::string x;
  std::string format = "text";
  int digits = 8;

  void run(std::ostream& out) const {
    const HarmonicParams p = params.resolve();
    const Rational xv = parse_rational_arg(x);
    const IntervalIndex cls = classify(p, xv);
    const Rational value = eval_fk(p, xv);
    switch (parse_format(format)) {
      case OutputFormat::text:
        out << frac_dec(value, digits) << "\n";
        break;
      case OutputFormat::csv:
        out << "k,mu,x,class,value,decimal\n"
            << p.k() << "," << p.mu() << "," << xv << "," << cls.j << "," << value << ","
            << value.to_decimal(digits) << "\n";
        break;
      case OutputFormat::json: {
        json doc = params_json(p);
        doc["x"] = fraction_json(xv);
        doc["class"] = cls.j.to_string();
        doc["value"] = fraction_json(value);
        doc["decimal"] = value.to_decimal(digits);
        out << doc.dump(2) << "\n";
        break;
      }
    }
  }
};

// ---------------------------------------------------------------- ip-opt

struct IpOptCommand {
  ParamOptions params;
  std::string method = "auto";
  std::string format = "text";
  int digits = 8;
  bool explain = false;
  std::size_t brute_cap = 0;

  void run(std::ostream& out) const {
    const HarmonicParams p = params.resolve();
    const std::size_t cap = brute_cap > 0 ? brute_cap : brute_cap_from_env();
    const SolveSummary summary = solve(p, parse_method(method), cap);

    std::optional<ClosedFormResult> closed = summary.closed;
    if (explain && !closed) {
      try {
        closed = solve_closed_form(p);
      } catch (const std::domain_error&) {
        // --explain on a point without a closed form just omits the section.
      }
    }

    switch (parse_format(format)) {
      case OutputFormat::text: {
        out << "k = " << p.k() << "\n";
        out << "mu = " << frac_dec(p.mu(), digits) << "\n";
        out << "method = " << method_name(summary.used);
        if (summary.heuristic) out << " (heuristic)";
        out << "\n";
        out << "opt = " << frac_dec(summary.opt, digits) << "\n";
        if (summary.argmax) out << "argmax = " << format_z(*summary.argmax) << "\n";
        if (summary.feasible_count) out << "feasible_count = " << *summary.feasible_count << "\n";
        if (summary.nodes_visited) out << "nodes_visited = " << *summary.nodes_visited << "\n";
        if (explain) {
          if (closed && closed->kind == ClosedFormCase::sylvester_sum) {
            out << "m = " << *closed->m << "\n";
            out << "Q = " << *closed->q << "\n";
            out << "r_{Q+1} = " << *closed->r_next << "\n";
            out << "S_{Q+1} = " << frac_dec(*closed->s_next, digits) << "\n";
          } else if (closed) {
            out << "closed form case = " << case_name(closed->kind) << "\n";
          } else {
            out << "closed form not applicable (mu < 1)\n";
          }
        }
        break;
      }
      case OutputFormat::csv: {
        out << "k,mu,method,opt,decimal,argmax,feasible_count\n";
        out << p.k() << "," << p.mu() << "," << method_name(summary.used) << "," << summary.opt
            << "," << summary.opt.to_decimal(digits) << ","
            << (summary.argmax ? "\"" + format_z(*summary.argmax, " ") + "\"" : "") << ","
            << (summary.feasible_count ? summary.feasible_count->to_string() : "") << "\n";
        break;
      }
      case OutputFormat::json: {
        json doc = params_json(p);
        doc["method"] = method_name(summary.used);
        doc["heuristic"] = summary.heuristic;
        doc["opt"] = fraction_json(summary.opt);
        doc["decimal"] = summary.opt.to_decimal(digits);
        if (summary.argmax) doc["argmax"] = summary.argmax->z;
        if (summary.feasible_count) doc["feasible_count"] = summary.feasible_count->to_string();
        if (summary.nodes_visited) doc["nodes_visited"] = *summary.nodes_visited;
        if (explain && closed) {
          json ex = {{"case", case_name(closed->kind)}};
          if (closed->kind == ClosedFormCase::sylvester_sum) {
            ex["m"] = closed->m->to_string();
            ex["Q"] = *closed->q;
            ex["r_next"] = closed->r_next->to_string();
            ex["s_next"] = fraction_json(*closed->s_next);
          }
          doc["explain"] = ex;
        }
        out << doc.dump(2) << "\n";
        break;
      }
    }
  }
};

// ---------------------------------------------------------------- table

struct TableCommand {
  std::string family = "all";
  std::int64_t k_min = 2;
  std::int64_t k_max = 12;
  std::string format = "text";
  int digits = 8;

  static std::string_view formula(MuFamily f) {
    switch (f) {
      case MuFamily::lee:
        return "k/(k-1)";
      case MuFamily::caprara:
        return "k/(k-2)";
      case MuFamily::refined:
        return "k(k-2)/(k^2-3k+1)";
    }
    return "";
  }

  void run(std::ostream& out) const {
    if (k_min < 1 || k_max < k_min) throw UsageError("need 1 <= --k-min <= --k-max");
    std::vector<MuFamily> families;
    if (family == "all") {
      families = {MuFamily::lee, MuFamily::caprara, MuFamily::refined};
    } else {
      families = {parse_family(family)};
    }

    // Cells for k below the family's range stay empty ("--").
    std::vector<SweepResult> columns;
    for (MuFamily f : families) {
      const std::int64_t lo = std::max(k_min, family_min_k(f));
      if (lo > k_max) {
        columns.push_back(SweepResult{f, {}, true});
      } else {
        columns.push_back(monotonic_sweep(f, lo, k_max));
      }
    }
    const auto cell = [&](const SweepResult& col, std::int64_t k) -> const SweepRow* {
      for (const auto& row : col.rows) {
        if (row.k == k) return &row;
      }
      return nullptr;
    };

    switch (parse_format(format)) {
      case OutputFormat::text: {
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> header = {"k"};
        for (const auto& col : columns) header.emplace_back(formula(col.family));
        grid.push_back(header);
        for (std::int64_t k = k_min; k <= k_max; ++k) {
          std::vector<std::string> line = {std::to_string(k)};
          for (const auto& col : columns) {
            const SweepRow* row = cell(col, k);
            line.push_back(row ? frac_dec(row->value, digits) : "--");
          }
          grid.push_back(line);
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& line : grid) {
          for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
        }
        for (const auto& line : grid) {
          for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) out << " | ";
            if (c == 0) {
              out << std::setw(static_cast<int>(width[c])) << line[c];
            } else if (c + 1 == line.size()) {
              out << line[c];
            } else {
              out << std::left << std::setw(static_cast<int>(width[c])) << line[c] << std::right;
            }
          }
          out << "\n";
        }
        break;
      }
      case OutputFormat::csv: {
        out << "family,k,mu,value,decimal\n";
        for (const auto& col : columns) {
          for (std::int64_t k = k_min; k <= k_max; ++k) {
            out << family_name(col.family) << "," << k << ",";
            if (const SweepRow* row = cell(col, k)) {
              out << row->mu << "," << row->value << "," << row->value.to_decimal(digits) << "\n";
            } else {
              out << "--,--,--\n";
            }
          }
        }
        break;
      }
      case OutputFormat::json: {
        json doc = {{"digits", digits}, {"columns", json::array()}};
        for (const auto& col : columns) {
          json rows = json::array();
          for (std::int64_t k = k_min; k <= k_max; ++k) {
            if (const SweepRow* row = cell(col, k)) {
              rows.push_back({{"k", k},
                              {"mu", fraction_json(row->mu)},
                              {"value", fraction_json(row->value)},
                              {"decimal", row->value.to_decimal(digits)},
                              {"method", method_name(row->used)}});
            } else {
              rows.push_back({{"k", k}, {"mu", nullptr}, {"value", nullptr}, {"decimal", nullptr}});
            }
          }
          doc["columns"].push_back({{"family", family_name(col.family)},
                                    {"mu_formula", formula(col.family)},
                                    {"non_increasing", col.non_increasing},
                                    {"rows", rows}});
        }
        out << doc.dump(2) << "\n";
        break;
      }
    }
  }
};

// ---------------------------------------------------------------- sylvester

struct SylvesterCommand {
  std::size_t count = 7;
  std::string format = "text";
  int digits = 15;

  void run(std::ostream& out) const {
    const SylvesterTable table(count);
    switch (parse_format(format)) {
      case OutputFormat::text:
        for (std::size_t j = 1; j <= table.size(); ++j) {
          out << "j=" << j << " r=" << table.r(j) << " S=" << frac_dec(table.prefix_sum(j), digits)
              << "\n";
        }
        break;
      case OutputFormat::csv:
        out << "j,r,S,S_decimal\n";
        for (std::size_t j = 1; j <= table.size(); ++j) {
          out << j << "," << table.r(j) << "," << table.prefix_sum(j) << ","
              << table.prefix_sum(j).to_decimal(digits) << "\n";
        }
        break;
      case OutputFormat::json: {
        json rows = json::array();
        for (std::size_t j = 1; j <= table.size(); ++j) {
          rows.push_back({{"j", j},
                          {"r", table.r(j).to_string()},
                          {"S", fraction_json(table.prefix_sum(j))},
                          {"S_decimal", table.prefix_sum(j).to_decimal(digits)}});
        }
        out << rows.dump(2) << "\n";
        break;
      }
    }
  }
};

// ---------------------------------------------------------------- limit

struct LimitCommand {
  std::size_t terms = 10;
  std::string format = "text";
  int digits = 15;

  void run(std::ostream& out) const {
    const LimitBracket b = tinf_bracket(terms, digits);
    switch (parse_format(format)) {
      case OutputFormat::text:
        out << "t = " << b.t << "\n";
        out << "k = r_" << b.t - 1 << " + 2 = " << b.k << "\n";
        out << "lower = S_" << b.t << " = " << b.lower << " = " << b.lower_decimal << "\n";
        out << "upper = T_k = " << b.upper << " = " << b.upper_decimal << "\n";
        out << "width = " << frac_dec(b.width(), digits) << "\n";
        break;
      case OutputFormat::csv:
        out << "t,bound,value,decimal\n";
        out << b.t << ",lower," << b.lower << "," << b.lower_decimal << "\n";
        out << b.t << ",upper," << b.upper << "," << b.upper_decimal << "\n";
        break;
      case OutputFormat::json: {
        json doc = {{"t", b.t},
                    {"k", b.k.to_string()},
                    {"lower", fraction_json(b.lower)},
                    {"upper", fraction_json(b.upper)},
                    {"lower_decimal", b.lower_decimal},
                    {"upper_decimal", b.upper_decimal},
                    {"width", fraction_json(b.width())}};
        out << doc.dump(2) << "\n";
        break;
      }
    }
  }
};

// ---------------------------------------------------------------- witness

IpSolution default_witness_z(const HarmonicParams& p, std::size_t cap) {
  if (p.k() >= BigInt(2) && p.mu() >= Rational(1) && p.mu() < Rational(2)) {
    return greedy_solution(p).z;
  }
  return solve_brute(p, cap).argmax;
}

struct WitnessCommand {
  ParamOptions params;
  std::string z;
  std::string eps = "1/1000";
  std::string format = "text";
  int digits = 8;
  std::size_t brute_cap = 0;

  void run(std::ostream& out) const {
    const HarmonicParams p = params.resolve();
    const std::size_t cap = brute_cap > 0 ? brute_cap : brute_cap_from_env();
    const IpSolution zz = z.empty() ? default_witness_z(p, cap) : parse_z(z);
    const Rational e = clamp_eps(p, zz, parse_rational_arg(eps));
    const KnapsackInstance witness = build_witness(p, zz, e);

    switch (parse_format(format)) {
      case OutputFormat::text:
        out << instance_to_json(witness) << "\n";
        break;
      case OutputFormat::csv:
        out << "index,item,class,profit\n";
        for (std::size_t i = 0; i < witness.size(); ++i) {
          const Rational& x = witness.items()[i];
          out << i << "," << x << "," << classify(p, x).j << "," << eval_fk(p, x) << "\n";
        }
        break;
      case OutputFormat::json: {
        json doc = params_json(p);
        doc["z"] = zz.z;
        doc["eps"] = fraction_json(e);
        doc["score"] = fraction_json(score(zz, p));
        doc["items"] = instance_json(witness);
        doc["sum"] = fraction_json(witness.total());
        doc["profit"] = fraction_json(profit(p, witness));
        doc["profit_decimal"] = profit(p, witness).to_decimal(digits);
        out << doc.dump(2) << "\n";
        break;
      }
    }
  }
};

// ---------------------------------------------------------------- simulate

struct SimulateCommand {
  ParamOptions params;
  std::string items_file;
  std::size_t adversarial = 0;
  std::string eps = "1/1000";
  std::optional<std::uint64_t> shuffle;
  std::string format = "json";
  int digits = 8;

  void run(std::ostream& out) const {
    const HarmonicParams p = params.resolve(/*default_to_lee=*/true);
    if (items_file.empty() == (adversarial == 0)) {
      throw UsageError("give exactly one of --items FILE or --adversarial N");
    }

    KnapsackInstance instance;
    std::optional<Rational> used_eps;
    if (!items_file.empty()) {
      std::ifstream in(items_file);
      if (!in) throw std::runtime_error("cannot open items file '" + items_file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      std::vector<Rational> items = instance_from_json(buffer.str()).items();
      if (shuffle) reproducible_shuffle(items, *shuffle);
      instance = KnapsackInstance(std::move(items));
    } else {
      const GreedyResult greedy = greedy_solution(p);
      used_eps = clamp_eps(p, greedy.z, parse_rational_arg(eps));
      instance = adversarial_instance(p, adversarial, *used_eps, shuffle);
    }

    const PackingResult result = harmonic_pack(p, instance);
    const Rational t_k = p.k() == BigInt(1)
                             ? Rational(1)
                             : solve_closed_form(HarmonicParams(p.k(), mu_for(MuFamily::lee, p.k()))).opt;
    const Rational bound = t_k * Rational(result.opt_lower_bound) + Rational(p.k());
    const bool holds = Rational(BigInt(static_cast<std::uint64_t>(result.bins_used))) <= bound;

    switch (parse_format(format)) {
      case OutputFormat::json: {
        json doc = params_json(p);
        doc["items"] = instance.size();
        if (used_eps) {
          doc["adversarial_bundles"] = adversarial;
          doc["eps"] = fraction_json(*used_eps);
        }
        if (shuffle) doc["shuffle_seed"] = *shuffle;
        doc["bins_used"] = result.bins_used;
        json per_class = json::object();
        for (const auto& [cls, n] : result.per_class_bins) per_class[cls.j.to_string()] = n;
        doc["per_class_bins"] = per_class;
        doc["opt_lower_bound"] = result.opt_lower_bound.to_string();
        doc["ratio"] = fraction_json(result.ratio);
        doc["ratio_decimal"] = result.ratio.to_decimal(digits);
        doc["t_k"] = fraction_json(t_k);
        doc["t_k_decimal"] = t_k.to_decimal(digits);
        doc["guarantee_bound"] = fraction_json(bound);
        doc["guarantee_holds"] = holds;
        out << doc.dump(2) << "\n";
        break;
      }
      case OutputFormat::text: {
        out << "k = " << p.k() << "\n";
        out << "items = " << instance.size() << "\n";
        out << "bins_used = " << result.bins_used << "\n";
        for (const auto& [cls, n] : result.per_class_bins) {
          out << "class " << cls.j << " bins = " << n << "\n";
        }
        out << "opt_lower_bound = " << result.opt_lower_bound << "\n";
        out << "ratio = " << frac_dec(result.ratio, digits) << "\n";
        out << "T_k = " << frac_dec(t_k, digits) << "\n";
        out << "bins_used <= T_k * opt_lower_bound + k: " << (holds ? "yes" : "no") << "\n";
        break;
      }
      case OutputFormat::csv: {
        out << "k,items,bins_used,opt_lower_bound,ratio,ratio_decimal,t_k,guarantee_holds\n";
        out << p.k() << "," << instance.size() << "," << result.bins_used << ","
            << result.opt_lower_bound << "," << result.ratio << ","
            << result.ratio.to_decimal(digits) << "," << t_k << "," << (holds ? "true" : "false")
            << "\n";
        break;
      }
    }
  }
};

void add_format(CLI::App* cmd, std::string& format, int& digits) {
  cmd->add_option("--format", format, "text, csv or json")->capture_default_str();
  cmd->add_option("--digits", digits, "decimal places")
      ->capture_default_str()
      ->check(CLI::Range(1, 10000));
}

}  // namespace

Rational parse_rational_arg(std::string_view text) { return Rational::parse(text); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-knapsack-profit of the generalized harmonic function", "harmonic"};
  app.require_subcommand(1);

  EvalCommand eval_cmd;
  auto* eval = app.add_subcommand("eval", "evaluate f_k(x; mu)");
  eval_cmd.params.attach(eval);
  eval->add_option("--x", eval_cmd.x, "point in [0, 1]")->required();
  add_format(eval, eval_cmd.format, eval_cmd.digits);

  IpOptCommand ip_cmd;
  auto* ip = app.add_subcommand("ip-opt", "solve IP(k, mu)");
  ip_cmd.params.attach(ip);
  ip->add_option("--method", ip_cmd.method, "auto, brute, closed or greedy")->capture_default_str();
  ip->add_flag("--explain", ip_cmd.explain, "print m, Q, r_{Q+1}, S_{Q+1}");
  ip->add_option("--brute-cap", ip_cmd.brute_cap, "largest k brute force accepts");
  add_format(ip, ip_cmd.format, ip_cmd.digits);

  TableCommand table_cmd;
  auto* table = app.add_subcommand("table", "T_k per mu family");
  table->add_option("--family", table_cmd.family, "lee, caprara, refined or all")
      ->capture_default_str();
  table->add_option("--k-min", table_cmd.k_min)->capture_default_str();
  table->add_option("--k-max", table_cmd.k_max)->capture_default_str();
  add_format(table, table_cmd.format, table_cmd.digits);

  SylvesterCommand syl_cmd;
  auto* syl = app.add_subcommand("sylvester", "harmonic numbers r_j and prefix sums S_j");
  syl->add_option("--count", syl_cmd.count, "number of terms")->capture_default_str();
  add_format(syl, syl_cmd.format, syl_cmd.digits);

  LimitCommand limit_cmd;
  auto* limit = app.add_subcommand("limit", "two-sided bracket on T_inf");
  limit->add_option("--terms", limit_cmd.terms, "t in [2, 12]")->capture_default_str();
  add_format(limit, limit_cmd.format, limit_cmd.digits);

  WitnessCommand wit_cmd;
  auto* wit = app.add_subcommand("witness", "knapsack instance realizing score(z)");
  wit_cmd.params.attach(wit);
  wit->add_option("--z", wit_cmd.z, "comma-separated z_1..z_{k-1} (default: optimal z)");
  wit->add_option("--eps", wit_cmd.eps, "growth factor, clamped to the admissible range")
      ->capture_default_str();
  wit->add_option("--brute-cap", wit_cmd.brute_cap, "largest k brute force accepts");
  add_format(wit, wit_cmd.format, wit_cmd.digits);

  SimulateCommand sim_cmd;
  auto* sim = app.add_subcommand("simulate", "online harmonic bin packing");
  sim_cmd.params.attach(sim);
  sim->add_option("--items", sim_cmd.items_file, "JSON array of \"p/q\" item sizes");
  sim->add_option("--adversarial", sim_cmd.adversarial, "number of witness bundles");
  sim->add_option("--eps", sim_cmd.eps, "witness eps for --adversarial")->capture_default_str();
  sim->add_option("--shuffle", sim_cmd.shuffle, "seed for a reproducible arrival shuffle");
  add_format(sim, sim_cmd.format, sim_cmd.digits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) eval_cmd.run(out);
    if (ip->parsed()) ip_cmd.run(out);
    if (table->parsed()) table_cmd.run(out);
    if (syl->parsed()) syl_cmd.run(out);
    if (limit->parsed()) limit_cmd.run(out);
    if (wit->parsed()) wit_cmd.run(out);
    if (sim->parsed()) sim_cmd.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace harmonic::cli
