// Acceptance gate: one binary running every top-level criterion with its
// stated bound, printing one PASS/FAIL line each. Exit code is the number
// of failed criteria, so a zero exit means the whole gate is green.
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qbell/cigler_q.hpp"
#include "qbell/classical_bell.hpp"
#include "qbell/dobinski.hpp"
#include "qbell/power_series.hpp"
#include "qbell/umbral.hpp"

using namespace qbell;

namespace {

std::string g_cli_path;
std::string g_golden_dir;

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_command(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CommandResult result;
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return "<unreadable: " + path + ">";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool criterion_bell_oracle() {
  for (unsigned n = 0; n <= 12; ++n) {
    if (bell(n) != enumerate_set_partitions(n)) return false;
  }
  return true;
}

bool criterion_egf_route() {
  const std::vector<Integer> from_egf = egf_extract_bell(25);
  for (unsigned n = 0; n <= 25; ++n) {
    if (from_egf[n] != bell(n)) return false;
  }
  return true;
}

bool criterion_umbral_route() {
  const UmbralFunctional rota = rota_functional();
  for (unsigned n = 0; n <= 20; ++n) {
    const QPolynomial value =
        apply_functional(rota, XPolynomial::monomial(n, QPolynomial(Rational(1))));
    if (value != QPolynomial(Rational(bell(n)))) return false;
  }
  return true;
}

bool criterion_cigler_identity() { return verify_cigler_identity(12).all_pass(); }

bool criterion_recurrence_vs_oracle() {
  for (unsigned n = 0; n <= 12; ++n) {
    if (qstirling_row(n).entries != qstirling_oracle(n).entries) return false;
  }
  return true;
}

bool criterion_qbell_specializations() {
  for (unsigned n = 0; n <= 16; ++n) {
    if (qbell_poly(n).eval(Rational(1)) != Rational(bell(n))) return false;
    if (n >= 1 && qbell_poly(n).eval(Rational(0)) != Rational(bell(n - 1))) return false;
  }
  return true;
}

bool criterion_dobinski() {
  for (unsigned n = 0; n <= 15; ++n) {
    const DobinskiResult r = dobinski_bell(n);
    if (!(r.enclosure.width() < Rational(1, 2))) return false;
    if (!r.certified.has_value() || *r.certified != Rational(bell(n))) return false;
  }
  return true;
}

bool criterion_q_dobinski() {
  const Rational width_cap(1, 1000000);
  const std::vector<Rational> grid = {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                      Rational(-1, 2)};
  for (unsigned n = 0; n <= 10; ++n) {
    for (const Rational& q0 : grid) {
      const DobinskiResult r = dobinski_qbell(n, q0, width_cap);
      if (!(r.enclosure.width() <= width_cap)) return false;
      const Rational exact = qbell_poly(n).eval(q0);
      if (!r.enclosure.contains(exact)) return false;
      if (!r.certified.has_value() || *r.certified != exact) return false;
    }
  }
  return true;
}

bool criterion_monte_carlo() {
  struct McCase {
    unsigned n;
    Rational q0;
  };
  const McCase cases[] = {{3, Rational(1)}, {4, Rational(1, 2)}, {5, Rational(1)}};
  for (const McCase& c : cases) {
    const McEstimate est = poisson_mc(c.n, c.q0, 1000000, 42);
    const Rational target = qbell_poly(c.n).eval(c.q0);
    if (!(mc_z_score(est, target) <= 5.0)) return false;
  }
  return true;
}

bool criterion_structural_laws() {
  for (unsigned n = 0; n <= 14; ++n) {
    const QStirlingRow row = qstirling_row(n);
    for (unsigned k = 0; k <= n; ++k) {
      const QPolynomial& p = row.entries[k];
      for (std::size_t i = 0; i <= p.degree(); ++i) {
        if (!is_integral(p.coeff(i)) || p.coeff(i) < 0) return false;
      }
    }
    if (n >= 1 && qbell_poly(n).degree() != n * (n - 1) / 2) return false;
  }
  return true;
}

bool criterion_cli_golden() {
  struct GoldenCase {
    const char* args;
    const char* file;
  };
  const GoldenCase golden[] = {
      {"bell --max 3", "bell_max3.txt"},
      {"qbell-poly --n 2", "qbell_poly_n2.txt"},
      {"qbell-eval --n 3 --q 1/2", "qbell_eval_n3_q12.txt"},
      {"dobinski --n 4", "dobinski_n4.txt"},
      {"dobinski --n 3 --q 1/2", "dobinski_n3_q12.txt"},
      {"dobinski --n 0", "dobinski_n0.txt"},
  };
  for (const GoldenCase& c : golden) {
    const CommandResult r = run_command(c.args);
    if (r.exit_code != 0) return false;
    if (r.out != read_file(g_golden_dir + "/" + c.file)) return false;
  }
  // Exit-code contract: success, verification failure, usage error.
  if (run_command("bell --max 0").exit_code != 0) return false;
  if (run_command("mc --n 12 --q 1 --samples 1000 --seed 2").exit_code != 1) return false;
  if (run_command("verify --suite nosuch").exit_code != 2) return false;
  if (run_command("bell --max notanumber").exit_code != 2) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: qbell_acceptance <cli-path> <golden-dir>\n";
    return 64;
  }
  g_cli_path = argv[1];
  g_golden_dir = argv[2];

  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Bell oracle: triangle equals set-partition enumeration, n <= 12", criterion_bell_oracle},
      {"EGF route: coefficients of exp(e^x - 1) give B_n, n <= 25", criterion_egf_route},
      {"umbral route: Rota functional on x^n gives B_n, n <= 20", criterion_umbral_route},
      {"Cigler identity: exact polynomial equality, n <= 12", criterion_cigler_identity},
      {"q-Stirling recurrence matches basis-conversion oracle, n <= 12",
       criterion_recurrence_vs_oracle},
      {"q-Bell specializations at q=1 and q=0, n <= 16", criterion_qbell_specializations},
      {"Dobinski enclosures certify B_n with width < 1/2, n <= 15", criterion_dobinski},
      {"q-Dobinski enclosures certify B_n(q) to width <= 1e-6, n <= 10",
       criterion_q_dobinski},
      {"Monte Carlo z <= 5 at 1e6 samples for (3,1), (4,1/2), (5,1)", criterion_monte_carlo},
      {"structural laws: nonnegative integer coefficients and degree n(n-1)/2, n <= 14",
       criterion_structural_laws},
      {"CLI golden files byte-identical and exit-code contract honored", criterion_cli_golden},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      note = std::string(" [exception: ") + e.what() + "]";
    }
    const auto stop = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(stop - start).count();
    if (!ok) ++failures;
    std::printf("[%2zu/%zu] %s  %s (%.2f s)%s\n", i + 1, criteria.size(), ok ? "PASS" : "FAIL",
                criteria[i].name, secs, note.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
