#pragma once

#include <iosfwd>
#include <string_view>

#include "harmonic/rational.hpp"

namespace harmonic::cli {

enum class OutputFormat { text, csv, json };

/// "p/q", an integer, or a finite decimal ("1.75" -> 7/4).
Rational parse_rational_arg(std::string_view text);

/// Runs one subcommand: eval, ip-opt, table, sylvester, limit, witness,
/// simulate. Returns 0 on success, 2 on usage errors, 1 on domain errors.
/// Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmonic::cli
