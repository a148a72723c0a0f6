// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any failed.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "smode/commands.hpp"
#include "smode/pulse.hpp"
#include "smode/verify.hpp"

using namespace smode;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

Outcome from_checks(const std::vector<cli::CheckResult>& checks) {
  Outcome o{cli::all_passed(checks), ""};
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.passed()) {
      ++failed;
      if (o.detail.empty()) {
        o.detail = "first failure: " + c.name + " measured " + fmt(c.measured);
      }
    }
  }
  o.detail = std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
             " checks" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

std::string capture(const std::string& args, int& code) {
  const std::string cmd = std::string(SMODE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

cli::Analysis reference_analysis() { return cli::run_analysis(cli::AnalysisConfig{}); }

Outcome delta_root() {
  std::ostringstream sink;
  const auto start = Clock::now();
  const int code = cli::cmd_delta(false, sink);
  const double elapsed = seconds_since(start);
  const auto root = pulse::solve_delta_detailed();
  const bool ok = code == cli::kExitOk && std::abs(root.root - 3.54) <= 0.01 &&
                  std::abs(root.residual) <= 1e-10 && elapsed < 0.01;
  return {ok, "delta " + fmt(root.root) + ", residual " + fmt(root.residual) + ", " +
                  fmt(elapsed * 1e3) + " ms"};
}

Outcome external_leakage() {
  const double ratio = pulse::energy_fractions(pulse::solve_delta()).external_ratio;
  return {std::abs(ratio / 1.64e-6 - 1.0) <= 0.1, "external ratio " + fmt(ratio)};
}

Outcome spreads() {
  const auto a = reference_analysis();
  const bool ok = std::abs(a.spreads.sigma1 - 0.127) <= 0.002 &&
                  std::abs(a.spreads.sigma2 - 0.014) <= 0.001;
  return {ok, "sigma1 " + fmt(a.spreads.sigma1) + ", sigma2 " + fmt(a.spreads.sigma2)};
}

Outcome frequency_shift() {
  const double shift = reference_analysis().report.freq_shift_rel_abs;
  return {shift >= 4e-4 && shift <= 9e-4, "|shift| " + fmt(shift)};
}

Outcome mu_magnitude() {
  const double mu = reference_analysis().report.mu;
  return {mu >= 1e-29 && mu <= 1e-26, "mu " + fmt(mu)};
}

Outcome width_branches() {
  const auto a = reference_analysis();
  const auto& r = a.report;
  const std::string text = cli::render_text(a);
  const bool numbers = r.width_rel_lambda_branch >= 0.005 && r.width_rel_lambda_branch <= 0.02 &&
                       std::abs(r.width_rel_piecewise - 0.15) <= 0.015;
  const bool printed = contains(text, cli::format_number(r.width_rel_lambda_branch)) &&
                       contains(text, cli::format_number(r.width_rel_piecewise));
  bool noted = false;
  for (const auto& note : r.notes) {
    noted = noted || (contains(note, "piecewise") && contains(note, "lambda branch"));
  }
  return {numbers && printed && noted,
          "lambda branch " + fmt(r.width_rel_lambda_branch) + ", piecewise " +
              fmt(r.width_rel_piecewise) + (printed ? ", both printed" : ", not printed") +
              (noted ? ", note present" : ", note missing")};
}

Outcome resonant_oracle() {
  const auto start = Clock::now();
  auto o = from_checks(cli::resonant_checks({}));
  const double elapsed = seconds_since(start);
  o.pass = o.pass && elapsed < 30.0;
  o.detail += ", " + fmt(elapsed) + " s";
  return o;
}

Outcome fluctuation_oracle() { return from_checks(cli::fluctuation_checks({})); }

Outcome lattice_convergence() { return from_checks(cli::lattice_checks({})); }

Outcome fock_identities() {
  auto checks = cli::fock_checks({});
  const auto commutator = cli::commutator_checks();
  checks.insert(checks.end(), commutator.begin(), commutator.end());
  auto o = from_checks(checks);
  const bool erratum = contains(cli::render_checks_text(commutator), "sign erratum");
  o.pass = o.pass && erratum;
  o.detail += erratum ? ", sign erratum reported" : ", sign erratum missing";
  return o;
}

Outcome short_pulse_trend() {
  cli::AnalysisConfig c;
  const double long_pulse = cli::run_analysis(c).report.width_rel;
  c.duration = 3.0;
  const double short_pulse = cli::run_analysis(c).report.width_rel;
  const double ratio = short_pulse / long_pulse;
  return {ratio >= 8.0 && ratio <= 12.0, "width_rel 30 fs -> 3 fs ratio " + fmt(ratio)};
}

Outcome sweep_determinism() {
  const std::string args =
      "sweep --threads 4 --axis duration:3:30:16 --axis intensity:1e20:1e22:16:log";
  int a_code = 0;
  int b_code = 0;
  const std::string a = capture(args, a_code);
  const std::string b = capture(args, b_code);
  const bool ok = a_code == 0 && b_code == 0 && !a.empty() && a == b;
  return {ok, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"delta root", delta_root},
      {"external-mode leakage", external_leakage},
      {"spread reproduction", spreads},
      {"frequency shift", frequency_shift},
      {"mu order of magnitude", mu_magnitude},
      {"width branches documented", width_branches},
      {"resonant quadrature oracle", resonant_oracle},
      {"fluctuation quadrature oracle", fluctuation_oracle},
      {"lattice convergence", lattice_convergence},
      {"Fock identities", fock_identities},
      {"short-pulse trend", short_pulse_trend},
      {"sweep determinism", sweep_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
              << ": " << o.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria met\n";
  return failed == 0 ? 0 : 1;
}
