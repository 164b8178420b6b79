#include "meancert/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "meancert/constants.hpp"
#include "meancert/curve.hpp"
#include "meancert/errors.hpp"
#include "meancert/means.hpp"
#include "meancert/proof.hpp"
#include "meancert/report.hpp"

namespace meancert {

namespace {

// Shortest round-trip rendering for the double path.
std::string fmt_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Fixed significant digits for high-precision output.
std::string fmt_bf(const BigFloat& v, int digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*R*g", digits, MPFR_RNDN, v.raw());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

double lambda_double() {
  static const double v = lambda_sharp(128).to_double();
  return v;
}

double mu_double() {
  static const double v = mu_sharp(128).to_double();
  return v;
}

int cmd_means(double a, double b, long prec, std::ostream& out) {
  PositivePair ab(a, b);
  if (prec <= 53) {
    out << "A = " << fmt_double(arithmetic_mean(ab)) << "\n"
        << "M = " << fmt_double(neuman_sandor(ab)) << "\n"
        << "T = " << fmt_double(second_seiffert(ab)) << "\n"
        << "S = " << fmt_double(root_mean_square(ab)) << "\n";
  } else {
    out << "A = " << fmt_bf(arithmetic_mean(ab, prec), 40) << "\n"
        << "M = " << fmt_bf(neuman_sandor(ab, prec), 40) << "\n"
        << "T = " << fmt_bf(second_seiffert(ab, prec), 40) << "\n"
        << "S = " << fmt_bf(root_mean_square(ab, prec), 40) << "\n";
  }
  return 0;
}

int cmd_constants(int digits, std::ostream& out) {
  long prec = std::max<long>(128, static_cast<long>(digits * 3.33) + 32);
  out << "lambda = " << fmt_bf(lambda_sharp(prec), digits)
      << "  [(1/2)(1 + sqrt(1/L^2 - 1)), L = ln(1+sqrt(2))]\n";
  out << "mu     = " << fmt_bf(mu_sharp(prec), digits)
      << "  [(3 + sqrt(3))/6]\n";
  for (const SharpConstant& c : prior_constants(prec)) {
    out << c.name << " = " << fmt_bf(c.value, digits) << "  [" << c.closed_form
        << "]  (" << c.source << ")\n";
  }
  return 0;
}

int cmd_certify(long prec, const std::optional<std::string>& report_path,
                std::ostream& out) {
  CertificationRun run = certify_all(prec);
  for (const auto& c : run.certificates) {
    out << (c.ok ? "[ ok ] " : "[FAIL] ") << c.id << ": sign "
        << to_string(c.sign) << " (" << to_string(c.status) << ", "
        << c.precision_bits << " bits)\n";
  }
  out << (run.identity_ok ? "[ ok ] " : "[FAIL] ")
      << "squared-difference identity, coefficientwise, 100 sampled weights\n";
  out << (run.tower_ok ? "[ ok ] " : "[FAIL] ")
      << "derivative tower g2 = g1'/2, g3 = g2'/6, g4 = g3'\n";
  out << (run.mu_ok ? "[ ok ] " : "[FAIL] ")
      << "exact factorization of g1 at the upper sharp weight\n";
  out << (run.cascade_ordering_ok ? "[ ok ] " : "[FAIL] ")
      << "root ordering t0 < t1 < t2 < t3\n";
  if (report_path) write_certification_report(run, *report_path);
  out << (run.all_passed ? "CERTIFIED" : "NOT CERTIFIED") << " ("
      << run.certificates.size() << " certificates at " << run.precision_bits
      << " bits)\n";
  return run.all_passed ? 0 : 1;
}

int cmd_witness(double p, const std::string& side, long prec,
                std::ostream& out) {
  Weight w(p);
  if (side == "near-one") {
    SmallRatioWitness sw = mu_witness(w, prec);
    out << "delta = " << fmt_double(sw.delta)
        << "  (M > S_w certified at ratio 1 + delta/2 = "
        << fmt_double(1.0 + sw.delta / 2) << ", " << sw.precision_bits
        << " bits)\n";
  } else {
    CrossingWitness cw = lambda_witness(w, prec);
    out << "t0 = " << fmt_double(cw.t0) << "  (S_w > M certified at 2*t0 and "
           "10*t0, "
        << cw.precision_bits << " bits)\n";
    if (cw.has_bracket)
      out << "crossing bracket = [" << fmt_double(cw.bracket_lo) << ", "
          << fmt_double(cw.bracket_hi) << "], S_w < M certified at t0/2\n";
    else
      out << "no crossing bracket: S_w - M already positive at every probe\n";
  }
  return 0;
}

}  // namespace

int emit_curve(double t_min, double t_max, int samples, bool log_spacing,
               const std::string& out_path) {
  std::vector<CurveSample> rows = sample_curve(t_min, t_max, samples, log_spacing);
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << "t,p_eq,M,S_lambda,S_mu,residual\n";
  for (const CurveSample& r : rows) {
    PositivePair ab(r.t, 1.0);
    double sl = weighted_rms(ab, Weight(lambda_double()));
    double su = weighted_rms(ab, Weight(mu_double()));
    f << fmt_double(r.t) << ',' << fmt_double(r.p_eq) << ','
      << fmt_double(r.m_value) << ',' << fmt_double(sl) << ','
      << fmt_double(su) << ',' << fmt_double(r.residual) << '\n';
  }
  if (!f) throw std::runtime_error("failed writing: " + out_path);
  return static_cast<int>(rows.size());
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Certified evaluation of the mean M(a,b) = (a-b)/(2 arcsinh((a-b)/(a+b)))"
      " and its sharp weighted root-mean-square bounds"};
  app.require_subcommand(1);

  RunConfig config;

  double a = 0, b = 0;
  long precision = 53;
  auto* means_cmd =
      app.add_subcommand("means", "Evaluate A, M, T and S for a pair");
  means_cmd->add_option("--a", a, "first value (> 0)")->required();
  means_cmd->add_option("--b", b, "second value (> 0)")->required();
  means_cmd->add_option("--precision", precision, "working precision in bits")
      ->check(CLI::Range(53L, 4096L));

  int digits = 15;
  auto* constants_cmd =
      app.add_subcommand("constants", "Print the sharp constants");
  constants_cmd->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 1000));

  double t_min = 0, t_max = 0;
  int samples = 0;
  bool log_spacing = false;
  std::string curve_out;
  auto* curve_cmd =
      app.add_subcommand("curve", "Write the equality-weight curve as CSV");
  curve_cmd->add_option("--t-min", t_min, "smallest ratio (> 1)")->required();
  curve_cmd->add_option("--t-max", t_max, "largest ratio")->required();
  curve_cmd->add_option("--samples", samples, "number of rows")
      ->required()
      ->check(CLI::Range(1, 10000000));
  curve_cmd->add_flag("--log", log_spacing, "logarithmic spacing");
  curve_cmd->add_option("--out", curve_out, "output CSV path")->required();

  long cert_precision = 256;
  std::string report_path;
  auto* certify_cmd =
      app.add_subcommand("certify", "Run the full certificate pipeline");
  certify_cmd
      ->add_option("--precision", cert_precision, "working precision in bits")
      ->check(CLI::Range(53L, 4096L));
  certify_cmd->add_option("--report", report_path, "JSON report path");

  double witness_p = 0;
  std::string side;
  long witness_precision = 256;
  auto* witness_cmd =
      app.add_subcommand("witness", "Find a sharpness witness for a weight");
  witness_cmd->add_option("--p", witness_p, "weight in [1/2, 1]")->required();
  witness_cmd->add_option("--side", side, "near-one or infinity")
      ->required()
      ->check(CLI::IsMember({"near-one", "infinity"}));
  witness_cmd
      ->add_option("--precision", witness_precision, "working precision in bits")
      ->check(CLI::Range(53L, 4096L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*means_cmd) {
      config.subcommand = Subcommand::means;
      config.precision_bits = precision;
      return cmd_means(a, b, precision, out);
    }
    if (*constants_cmd) {
      config.subcommand = Subcommand::constants;
      return cmd_constants(digits, out);
    }
    if (*curve_cmd) {
      config.subcommand = Subcommand::curve;
      config.format = OutputFormat::csv;
      config.output_path = curve_out;
      if (!(t_min > 1.0) || !(t_max >= t_min)) {
        err << "usage error: need 1 < t-min <= t-max\n";
        return 2;
      }
      int rows = emit_curve(t_min, t_max, samples, log_spacing, curve_out);
      out << "wrote " << rows << " rows to " << curve_out << "\n";
      return 0;
    }
    if (*certify_cmd) {
      config.subcommand = Subcommand::certify;
      config.precision_bits = cert_precision;
      config.format = OutputFormat::json;
      if (!report_path.empty()) config.output_path = report_path;
      return cmd_certify(cert_precision,
                         report_path.empty()
                             ? std::nullopt
                             : std::optional<std::string>(report_path),
                         out);
    }
    config.subcommand = Subcommand::witness;
    config.precision_bits = witness_precision;
    return cmd_witness(witness_p, side, witness_precision, out);
  } catch (const WeightOutOfRange& e) {
    err << "weight out of range: " << e.what() << "\n";
    return 1;
  } catch (const NoRootInBracket& e) {
    err << "search failure: " << e.what() << "\n";
    return 1;
  } catch (const InconclusiveSign& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace meancert
