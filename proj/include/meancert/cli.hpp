#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace meancert {

enum class Subcommand { means, constants, curve, certify, witness };
enum class OutputFormat { text, csv, json };

struct RunConfig {
  Subcommand subcommand = Subcommand::means;
  long precision_bits = 53;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::text;
};

// Exit codes: 0 success (for `certify`: every certificate definite with the
// expected sign), 1 certificate/search/domain failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Writes the equality-curve CSV (header t,p_eq,M,S_lambda,S_mu,residual) and
// returns the number of data rows written.
int emit_curve(double t_min, double t_max, int samples, bool log_spacing,
               const std::string& out_path);

}  // namespace meancert
