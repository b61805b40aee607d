// Command-line front end: exact tables, certified enclosures, verification
// suites, and seeded Monte Carlo checks, in line-oriented text or JSON.
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbell/cigler_q.hpp"
#include "qbell/classical_bell.hpp"
#include "qbell/dobinski.hpp"
#include "qbell/power_series.hpp"

namespace {

using namespace qbell;
using ordered_json = nlohmann::ordered_json;

// Usage / verification failures carry their intended process exit code.
struct CliError {
  int code;
  std::string message;
};

unsigned long max_n_cap() {
  const char* raw = std::getenv("QBELL_MAX_N");
  if (raw == nullptr || *raw == '\0') return 64;
  errno = 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (errno != 0 || end == raw || *end != '\0') {
    throw CliError{2, std::string("QBELL_MAX_N is not a nonnegative integer: ") + raw};
  }
  return value;
}

void check_cap(const std::string& flag, unsigned long value) {
  const unsigned long cap = max_n_cap();
  if (value > cap) {
    throw CliError{2, flag + "=" + std::to_string(value) + " exceeds the QBELL_MAX_N cap of " +
                          std::to_string(cap)};
  }
}

std::string double_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string coeff_text(const QPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (i > 0) out += ' ';
    out += plain_string(p.coeff(i));
  }
  return out;
}

std::vector<std::string> coeff_strings(const QPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.degree() + 1);
  for (std::size_t i = 0; i <= p.degree(); ++i) out.push_back(plain_string(p.coeff(i)));
  return out;
}

void emit(const ordered_json& record, bool json_mode, const std::string& text) {
  if (json_mode) {
    std::cout << record.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
}

int cmd_bell(unsigned max, bool json_mode) {
  check_cap("--max", max);
  const std::vector<Integer> bells = bell_sequence(max);
  for (unsigned n = 0; n <= max; ++n) {
    const std::string value = bells[n].get_str();
    emit({{"kind", "bell"}, {"n", n}, {"value", value}}, json_mode,
         std::to_string(n) + "\t" + value);
  }
  return 0;
}

int cmd_stirling(unsigned n, bool json_mode) {
  check_cap("--n", n);
  const StirlingTable table(n);
  for (unsigned k = 0; k <= n; ++k) {
    const std::string value = table.at(n, k).get_str();
    emit({{"kind", "stirling"}, {"n", n}, {"k", k}, {"value", value}}, json_mode,
         std::to_string(k) + "\t" + value);
  }
  return 0;
}

int cmd_qstirling(unsigned n, unsigned k, bool json_mode) {
  check_cap("--n", n);
  const QPolynomial p = cigler_qstirling(n, k);
  emit({{"kind", "qstirling"}, {"n", n}, {"k", k}, {"coeffs", coeff_strings(p)}}, json_mode,
       coeff_text(p));
  return 0;
}

int cmd_qbell_poly(unsigned n, bool json_mode) {
  check_cap("--n", n);
  const QPolynomial p = qbell_poly(n);
  emit({{"kind", "qbell"}, {"n", n}, {"coeffs", coeff_strings(p)}}, json_mode, coeff_text(p));
  return 0;
}

int cmd_qbell_eval(unsigned n, const std::string& q_text, bool json_mode) {
  check_cap("--n", n);
  const Rational q0 = parse_rational(q_text);
  const Rational value = qbell_poly(n).eval(q0);
  emit({{"kind", "qbell"}, {"n", n}, {"q", fraction_string(q0)}, {"value", fraction_string(value)}},
       json_mode, fraction_string(value));
  return 0;
}

int cmd_dobinski(unsigned n, const std::string& q_text, const std::string& width_text,
                 bool json_mode) {
  check_cap("--n", n);
  DobinskiResult result;
  if (q_text.empty()) {
    const Rational width = width_text.empty() ? Rational(1, 2) : parse_rational(width_text);
    result = dobinski_bell(n, width);
  } else {
    const Rational q0 = parse_rational(q_text);
    const Rational width = width_text.empty() ? Rational(1, 1000000) : parse_rational(width_text);
    result = dobinski_qbell(n, q0, width);
  }

  ordered_json record{{"kind", "dobinski"}, {"n", n}};
  std::string text = "n=" + std::to_string(n);
  if (result.q0.has_value()) {
    record["q"] = fraction_string(*result.q0);
    text += "\tq=" + fraction_string(*result.q0);
  }
  record["J"] = result.truncation;
  record["K"] = result.bracket_index;
  record["lo"] = fraction_string(result.enclosure.lo());
  record["hi"] = fraction_string(result.enclosure.hi());
  text += "\tJ=" + std::to_string(result.truncation) + "\tK=" + std::to_string(result.bracket_index) +
          "\tlo=" + fraction_string(result.enclosure.lo()) +
          "\thi=" + fraction_string(result.enclosure.hi());
  std::string certified_text = "none";
  if (result.certified.has_value()) {
    // Classical mode pins a bare integer; the q mode records the exact rational.
    certified_text =
        result.q0.has_value() ? fraction_string(*result.certified) : plain_string(*result.certified);
    record["certified"] = certified_text;
  } else {
    record["certified"] = nullptr;
  }
  const bool pass = result.certified.has_value();
  record["status"] = pass ? "pass" : "fail";
  text += "\tcertified=" + certified_text + "\tstatus=" + (pass ? "pass" : "fail");
  emit(record, json_mode, text);
  return pass ? 0 : 1;
}

int cmd_mc(unsigned n, const std::string& q_text, std::uint64_t samples, std::uint64_t seed,
           bool json_mode) {
  check_cap("--n", n);
  const Rational q0 = parse_rational(q_text);
  const McEstimate est = poisson_mc(n, q0, samples, seed);
  const Rational target = qbell_poly(n).eval(q0);
  const double z = mc_z_score(est, target);
  const bool pass = z <= 5.0;
  const ordered_json record{{"kind", "mc"},
                            {"n", n},
                            {"q", fraction_string(q0)},
                            {"samples", est.samples},
                            {"seed", est.seed},
                            {"mean", est.mean},
                            {"std_error", est.std_error},
                            {"target", fraction_string(target)},
                            {"z", z},
                            {"status", pass ? "pass" : "fail"}};
  const std::string text = "n=" + std::to_string(n) + "\tq=" + fraction_string(q0) +
                           "\tsamples=" + std::to_string(est.samples) +
                           "\tseed=" + std::to_string(est.seed) + "\tmean=" + double_text(est.mean) +
                           "\tstd_error=" + double_text(est.std_error) +
                           "\ttarget=" + fraction_string(target) + "\tz=" + double_text(z) +
                           "\tstatus=" + (pass ? "pass" : "fail");
  emit(record, json_mode, text);
  return pass ? 0 : 1;
}

struct VerifyCase {
  std::string label;
  bool pass = false;
};

std::vector<VerifyCase> run_verify_suite(const std::string& suite, unsigned max) {
  std::vector<VerifyCase> cases;
  if (suite == "cigler") {
    const IdentityReport report = verify_cigler_identity(max);
    for (const IdentityCase& c : report.cases) {
      cases.push_back({"n=" + std::to_string(c.n), c.pass});
    }
  } else if (suite == "egf") {
    const std::vector<Integer> from_egf = egf_extract_bell(max);
    const std::vector<Integer> from_triangle = bell_sequence(max);
    for (unsigned n = 0; n <= max; ++n) {
      cases.push_back({"n=" + std::to_string(n), from_egf[n] == from_triangle[n]});
    }
  } else if (suite == "dobinski") {
    for (unsigned n = 0; n <= max; ++n) {
      const DobinskiResult r = dobinski_bell(n);
      const bool pass = r.certified.has_value() && *r.certified == Rational(bell(n));
      cases.push_back({"n=" + std::to_string(n), pass});
    }
  } else if (suite == "q-dobinski") {
    const std::vector<Rational> grid = {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                        Rational(-1, 2)};
    for (unsigned n = 0; n <= max; ++n) {
      for (const Rational& q0 : grid) {
        const DobinskiResult r = dobinski_qbell(n, q0);
        cases.push_back({"n=" + std::to_string(n) + " q=" + fraction_string(q0),
                         r.certified.has_value()});
      }
    }
  } else if (suite == "q0-shift") {
    for (unsigned n = 1; n <= max; ++n) {
      const bool pass = qbell_poly(n).eval(Rational(0)) == Rational(bell(n - 1));
      cases.push_back(
          {"B_" + std::to_string(n) + "(0)=B_" + std::to_string(n - 1), pass});
    }
  } else if (suite == "oracle") {
    if (max > 12) throw CliError{2, "--max for the oracle suite is capped at 12"};
    for (unsigned n = 0; n <= max; ++n) {
      cases.push_back({"bell n=" + std::to_string(n), bell(n) == enumerate_set_partitions(n)});
      const QStirlingRow fast = qstirling_row(n);
      const QStirlingRow slow = qstirling_oracle(n);
      cases.push_back({"row n=" + std::to_string(n), fast.entries == slow.entries});
    }
  } else {
    throw CliError{2, "unknown suite: " + suite};
  }
  return cases;
}

int cmd_verify(const std::string& suite, long max_arg, bool json_mode) {
  unsigned max = 0;
  if (max_arg >= 0) {
    max = static_cast<unsigned>(max_arg);
  } else if (suite == "cigler") {
    max = 12;
  } else if (suite == "egf") {
    max = 25;
  } else if (suite == "dobinski") {
    max = 10;
  } else if (suite == "q-dobinski") {
    max = 8;
  } else if (suite == "q0-shift") {
    max = 12;
  } else if (suite == "oracle") {
    max = 10;
  } else {
    throw CliError{2, "unknown suite: " + suite};
  }
  check_cap("--max", max);
  const std::vector<VerifyCase> cases = run_verify_suite(suite, max);
  bool all_pass = true;
  for (const VerifyCase& c : cases) {
    all_pass = all_pass && c.pass;
    emit({{"kind", "verify"}, {"suite", suite}, {"case", c.label},
          {"status", c.pass ? "pass" : "fail"}},
         json_mode, suite + "\t" + c.label + "\t" + (c.pass ? "pass" : "fail"));
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bell numbers, Cigler q-Stirling polynomials, and q-Bell polynomials\n"
               "with certified series enclosures and seeded Monte Carlo checks."};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  unsigned bell_max = 0;
  CLI::App* bell_cmd = app.add_subcommand("bell", "Bell numbers B_0..B_max, one per line");
  bell_cmd->add_option("--max", bell_max, "Largest index")->required();

  unsigned stirling_n = 0;
  CLI::App* stirling_cmd =
      app.add_subcommand("stirling", "Row n of the Stirling (2nd kind) triangle");
  stirling_cmd->add_option("--n", stirling_n, "Row index")->required();

  unsigned qstirling_n = 0;
  unsigned qstirling_k = 0;
  CLI::App* qstirling_cmd =
      app.add_subcommand("qstirling", "Coefficients of the q-Stirling polynomial {n k}_q");
  qstirling_cmd->add_option("--n", qstirling_n, "Row index")->required();
  qstirling_cmd->add_option("--k", qstirling_k, "Column index")->required();

  unsigned qbell_poly_n = 0;
  CLI::App* qbell_poly_cmd =
      app.add_subcommand("qbell-poly", "Coefficients of the q-Bell polynomial B_n(q)");
  qbell_poly_cmd->add_option("--n", qbell_poly_n, "Index")->required();

  unsigned qbell_eval_n = 0;
  std::string qbell_eval_q;
  CLI::App* qbell_eval_cmd =
      app.add_subcommand("qbell-eval", "Exact value of B_n(q) at a rational q");
  qbell_eval_cmd->add_option("--n", qbell_eval_n, "Index")->required();
  qbell_eval_cmd->add_option("--q", qbell_eval_q, "Evaluation point, P or P/Q")->required();

  std::string verify_suite;
  long verify_max = -1;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run an invariant suite: cigler, egf, dobinski, q-dobinski, q0-shift, oracle");
  verify_cmd->add_option("--suite", verify_suite, "Suite name")->required();
  verify_cmd->add_option("--max", verify_max, "Largest index (per-suite default)");

  unsigned dobinski_n = 0;
  std::string dobinski_q;
  std::string dobinski_width;
  CLI::App* dobinski_cmd = app.add_subcommand(
      "dobinski", "Certified series enclosure of B_n (or B_n(q) with --q)");
  dobinski_cmd->add_option("--n", dobinski_n, "Index")->required();
  dobinski_cmd->add_option("--q", dobinski_q, "Deformation point, P or P/Q");
  dobinski_cmd->add_option("--width", dobinski_width, "Enclosure width target, P or P/Q");

  unsigned mc_n = 0;
  std::string mc_q;
  std::uint64_t mc_samples = 0;
  std::uint64_t mc_seed = 1;
  CLI::App* mc_cmd =
      app.add_subcommand("mc", "Seeded Monte Carlo average of the q-moment under Poisson(1)");
  mc_cmd->add_option("--n", mc_n, "Index")->required();
  mc_cmd->add_option("--q", mc_q, "Deformation point, P or P/Q")->required();
  mc_cmd->add_option("--samples", mc_samples, "Sample count (>= 1000)")->required();
  mc_cmd->add_option("--seed", mc_seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
    const bool json_mode = format == "json";
    if (bell_cmd->parsed()) return cmd_bell(bell_max, json_mode);
    if (stirling_cmd->parsed()) return cmd_stirling(stirling_n, json_mode);
    if (qstirling_cmd->parsed()) return cmd_qstirling(qstirling_n, qstirling_k, json_mode);
    if (qbell_poly_cmd->parsed()) return cmd_qbell_poly(qbell_poly_n, json_mode);
    if (qbell_eval_cmd->parsed()) return cmd_qbell_eval(qbell_eval_n, qbell_eval_q, json_mode);
    if (verify_cmd->parsed()) return cmd_verify(verify_suite, verify_max, json_mode);
    if (dobinski_cmd->parsed())
      return cmd_dobinski(dobinski_n, dobinski_q, dobinski_width, json_mode);
    if (mc_cmd->parsed()) return cmd_mc(mc_n, mc_q, mc_samples, mc_seed, json_mode);
    return 2;  // unreachable with require_subcommand(1)
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
